#pragma once

// Lazily evaluated virtual modules of the form
//   sign * C_shift (x) Sym(sym generators) (x) /\(wedge generators),
// queried one coefficient at a time. Sym coefficients are vector partition
// counts, computed by exact depth-first enumeration bounded by an integer
// functional that is strictly positive on every generator; without such a
// functional the coefficient would be infinite and the factor is rejected.

#include <numeric>
#include <optional>

#include "sympair/abelian.hpp"

namespace sympair {

namespace detail {

struct Rat {
    Int num = 0, den = 1;

    Rat() = default;
    Rat(Int n, Int d = 1) : num(n), den(d) { normalize(); }
    void normalize() {
        check(den != 0, "Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rat& o) const { return num * o.den <= o.num * den; }
};

}  // namespace detail

// Integer functional phi with phi(g) >= 1 for every generator, found by
// Fourier-Motzkin elimination over the rationals; nullopt when the
// generators do not fit in an open half-space.
inline std::optional<std::vector<Int>> find_separating_functional(
    const std::vector<std::vector<Int>>& gens) {
    using detail::Rat;
    if (gens.empty()) return std::vector<Int>{};
    const size_t dim = gens[0].size();
    for (const auto& g : gens)
        if (weight_is_zero(g)) return std::nullopt;  // no functional is positive on 0
    if (dim == 0) return std::nullopt;

    // constraints: coeffs . phi >= rhs
    struct Constraint {
        std::vector<Rat> coeffs;
        Rat rhs;
    };
    std::vector<Constraint> sys;
    for (const auto& g : gens) {
        Constraint c;
        c.coeffs.reserve(dim);
        for (Int x : g) c.coeffs.emplace_back(x);
        c.rhs = Rat(1);
        sys.push_back(std::move(c));
    }

    // bounds recorded per eliminated variable for back-substitution
    struct Bounds {
        std::vector<Constraint> lower, upper;  // phi_k >= expr / phi_k <= expr
    };
    std::vector<Bounds> stages(dim);

    for (size_t k = dim; k-- > 0;) {
        std::vector<Constraint> rest;
        for (auto& c : sys) {
            Rat a = c.coeffs[k];
            c.coeffs.resize(k);
            if (a.num > 0) {
                for (auto& x : c.coeffs) x = Rat(0) - x / a;
                c.rhs = c.rhs / a;
                stages[k].lower.push_back(std::move(c));  // phi_k >= rhs + coeffs.phi'
            } else if (a.num < 0) {
                for (auto& x : c.coeffs) x = Rat(0) - x / a;
                c.rhs = c.rhs / a;
                stages[k].upper.push_back(std::move(c));
            } else {
                rest.push_back(std::move(c));
            }
        }
        for (const auto& lo : stages[k].lower)
            for (const auto& up : stages[k].upper) {
                // lo expr <= up expr
                Constraint c;
                c.coeffs.resize(k);
                for (size_t j = 0; j < k; ++j) c.coeffs[j] = up.coeffs[j] - lo.coeffs[j];
                c.rhs = lo.rhs - up.rhs;
                rest.push_back(std::move(c));
            }
        sys = std::move(rest);
    }
    for (const auto& c : sys)
        if (Rat(0) < c.rhs) return std::nullopt;  // 0 >= rhs violated

    // back-substitute, choosing each coordinate inside its bounds
    std::vector<Rat> phi(dim, Rat(0));
    for (size_t k = 0; k < dim; ++k) {
        auto eval = [&](const Constraint& c) {
            Rat v = c.rhs;
            for (size_t j = 0; j < k; ++j) v = v + c.coeffs[j] * phi[j];
            return v;
        };
        std::optional<Rat> lo, hi;
        for (const auto& c : stages[k].lower) {
            Rat v = eval(c);
            if (!lo || *lo < v) lo = v;
        }
        for (const auto& c : stages[k].upper) {
            Rat v = eval(c);
            if (!hi || v < *hi) hi = v;
        }
        if (lo && hi)
            phi[k] = (*lo + *hi) / Rat(2);
        else if (lo)
            phi[k] = *lo + Rat(1);
        else if (hi)
            phi[k] = *hi - Rat(1);
        else
            phi[k] = Rat(0);
    }

    Int scale = 1;
    for (const auto& r : phi) scale = std::lcm(scale, r.den);
    std::vector<Int> out(dim);
    for (size_t k = 0; k < dim; ++k) out[k] = phi[k].num * (scale / phi[k].den);
    for (const auto& g : gens)
        check(weight_dot(out, g) > 0, "separating functional failed verification");
    return out;
}

namespace detail {

inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct GenGroup {
    HxCharacter value;
    Int mult;
    Int phi;  // functional value on the free part, > 0
};

inline Int sym_count_rec(const std::vector<GenGroup>& groups, size_t idx, HxCharacter rem,
                         Int phi_rem, const QuotientPresentation& pres,
                         const std::vector<Int>& phi) {
    if (phi_rem < 0) return 0;
    if (idx == groups.size()) return rem.is_zero() ? 1 : 0;
    const GenGroup& g = groups[idx];
    Int total = 0;
    Int kmax = phi_rem / g.phi;
    HxCharacter cur = rem;
    for (Int k = 0; k <= kmax; ++k) {
        Int ways = binomial(k + g.mult - 1, g.mult - 1);
        total += ways * sym_count_rec(groups, idx + 1, cur, phi_rem - k * g.phi, pres, phi);
        if (k < kmax) cur = pres.sub(cur, g.value);
    }
    return total;
}

}  // namespace detail

// Number of ways to write target as a non-negative integer combination of
// the generators (repeated generators are distinct slots).
inline Int sym_coeff(const std::vector<HxCharacter>& generators, const HxCharacter& target,
                     const QuotientPresentation& pres, const std::vector<Int>& functional) {
    pres.validate(target);
    if (generators.empty()) return target.is_zero() ? 1 : 0;
    std::vector<detail::GenGroup> groups;
    for (const auto& g : generators) {
        pres.validate(g);
        Int phi = weight_dot(functional, g.free_part);
        check(phi > 0, "sym_coeff: functional not positive on a generator");
        bool merged = false;
        for (auto& gr : groups)
            if (gr.value == g) {
                ++gr.mult;
                merged = true;
                break;
            }
        if (!merged) groups.push_back({g, 1, phi});
    }
    Int phi_target = weight_dot(functional, target.free_part);
    return detail::sym_count_rec(groups, 0, target, phi_target, pres, functional);
}

inline Int sym_coeff(const std::vector<HxCharacter>& generators, const HxCharacter& target,
                     const QuotientPresentation& pres) {
    std::vector<std::vector<Int>> frees;
    for (const auto& g : generators) frees.push_back(g.free_part);
    auto phi = find_separating_functional(frees);
    if (!phi)
        throw error("sym_coeff: generators admit no separating functional; the series diverges");
    return sym_coeff(generators, target, pres, *phi);
}

// Product over generators of (1 - C_alpha), expanded as a finite alternating
// sum of quotient characters.
inline VirtualCharacter wedge_expand(const std::vector<HxCharacter>& generators,
                                     const QuotientPresentation& pres, int cap = 20) {
    if (static_cast<int>(generators.size()) > cap)
        throw cap_error("wedge_expand: " + std::to_string(generators.size()) +
                        " generators exceed cap " + std::to_string(cap));
    VirtualCharacter acc = VirtualCharacter::unit(pres.zero());
    for (const auto& g : generators) {
        VirtualCharacter shifted;
        for (const auto& [c, m] : acc.terms) shifted.add_term(pres.add(c, g), -m);
        acc = vchar_add(acc, shifted);
    }
    return acc;
}

struct SeriesFactor {
    int sign = 1;  // overall +-1 in front of the module
    HxCharacter shift;
    std::vector<HxCharacter> sym_generators;
    std::vector<HxCharacter> wedge_generators;
    std::vector<Int> functional;       // positive on every sym generator
    VirtualCharacter wedge_expansion;  // cached Prod (1 - C_alpha)
};

inline SeriesFactor make_series_factor(int sign, HxCharacter shift,
                                       std::vector<HxCharacter> sym_gens,
                                       std::vector<HxCharacter> wedge_gens,
                                       const QuotientPresentation& pres, int wedge_cap = 20) {
    SeriesFactor f;
    f.sign = sign;
    f.shift = std::move(shift);
    f.sym_generators = std::move(sym_gens);
    f.wedge_generators = std::move(wedge_gens);
    if (f.sym_generators.empty()) {
        f.functional.assign(pres.free_rank(), 0);
    } else {
        std::vector<std::vector<Int>> frees;
        for (const auto& g : f.sym_generators) frees.push_back(g.free_part);
        auto phi = find_separating_functional(frees);
        if (!phi) throw error("series factor: sym generators admit no separating functional");
        f.functional = *phi;
    }
    f.wedge_expansion = wedge_expand(f.wedge_generators, pres, wedge_cap);
    return f;
}

// Coefficient of the quotient character xi in the factor.
inline Int factor_coeff(const SeriesFactor& f, const HxCharacter& xi,
                        const QuotientPresentation& pres) {
    HxCharacter base = pres.sub(xi, f.shift);
    Int total = 0;
    for (const auto& [wc, wm] : f.wedge_expansion.terms)
        total += wm * sym_coeff(f.sym_generators, pres.sub(base, wc), pres, f.functional);
    return f.sign * total;
}

}  // namespace sympair
