#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympair {

using Int = long long;
using Weight = std::vector<Int>;     // element of the character lattice Z^r
using IntMat = std::vector<std::vector<Int>>;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or table size exceeded a configured cap.
struct cap_error : error {
    explicit cap_error(const std::string& what) : error(what) {}
};

// Data inconsistency that signals a bug, not bad user input.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline Weight weight_add(const Weight& a, const Weight& b) {
    check(a.size() == b.size(), "weight_add: rank mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
    check(a.size() == b.size(), "weight_sub: rank mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Weight weight_neg(const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Weight weight_scale(Int c, const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool weight_is_zero(const Weight& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline Int weight_dot(const Weight& a, const Weight& b) {
    check(a.size() == b.size(), "weight_dot: rank mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntMat mat_identity(int n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Weight mat_apply(const IntMat& m, const Weight& v) {
    Weight r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        check(m[i].size() == v.size(), "mat_apply: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    }
    return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat r(n, std::vector<Int>(m, 0));
    for (size_t i = 0; i < n; ++i) {
        check(a[i].size() == k, "mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    }
    return r;
}

inline bool mat_is_identity(const IntMat& m) {
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int mod_nonneg(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace sympair
