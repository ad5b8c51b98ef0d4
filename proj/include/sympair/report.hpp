#pragma once

// Rendering of branch tables and verification reports: a human table and a
// JSON document with schema
//   {pair, lambda, entries:[{mu, total, per_orbit:[{orbit, coset, value}]}],
//    verdict?, elapsed_ms?}
// Weights are rendered per block so product groups stay unambiguous.

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sympair/localize.hpp"

namespace sympair {

inline std::string format_weight(const RootDatum& rd, const Weight& w) {
    std::ostringstream os;
    bool single = rd.blocks().size() == 1;
    if (single && rd.blocks()[0].size == 1) {
        os << w[0];
        return os.str();
    }
    if (!single) os << "(";
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        int o = rd.block_offset(bi);
        if (bi) os << ",";
        os << "(";
        for (int i = 0; i < rd.blocks()[bi].size; ++i) {
            if (i) os << ",";
            os << w[o + i];
        }
        os << ")";
    }
    if (!single) os << ")";
    return os.str();
}

inline nlohmann::json weight_to_json(const RootDatum& rd, const Weight& w) {
    nlohmann::json blocks = nlohmann::json::array();
    for (size_t bi = 0; bi < rd.blocks().size(); ++bi) {
        int o = rd.block_offset(bi);
        nlohmann::json b = nlohmann::json::array();
        for (int i = 0; i < rd.blocks()[bi].size; ++i) b.push_back(w[o + i]);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

inline nlohmann::json report_json(const PairSpec& pair, const BranchTable& table,
                                  const std::string& verdict = "", double elapsed_ms = -1) {
    nlohmann::json doc;
    doc["pair"] = table.pair_label;
    doc["lambda"] = weight_to_json(pair.g, table.lambda);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [mu, entry] : table.entries) {
        nlohmann::json e;
        e["mu"] = weight_to_json(pair.h, mu);
        e["total"] = entry.total;
        nlohmann::json per = nlohmann::json::array();
        for (size_t i = 0; i < table.orbit_keys.size(); ++i) {
            per.push_back({{"orbit", table.orbit_keys[i].first},
                           {"coset", table.orbit_keys[i].second},
                           {"value", entry.per_orbit[i]}});
        }
        e["per_orbit"] = std::move(per);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    if (!verdict.empty()) doc["verdict"] = verdict;
    if (elapsed_ms >= 0) doc["elapsed_ms"] = elapsed_ms;
    return doc;
}

inline std::string render_human(const PairSpec& pair, const BranchTable& table,
                                const std::string& verdict = "", double elapsed_ms = -1) {
    std::ostringstream os;
    os << "pair: " << table.pair_label
       << "   lambda: " << format_weight(pair.g, table.lambda) << "\n";
    std::vector<std::string> headers{"mu", "total"};
    for (const auto& [cls, coset] : table.orbit_keys)
        headers.push_back(std::to_string(cls) + ":" + std::to_string(coset));

    std::vector<std::vector<std::string>> rows;
    for (const auto& [mu, entry] : table.entries) {
        std::vector<std::string> row{format_weight(pair.h, mu), std::to_string(entry.total)};
        for (Int v : entry.per_orbit) row.push_back(std::to_string(v));
        rows.push_back(std::move(row));
    }
    std::vector<size_t> width(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c)
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        os << "\n";
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
    if (!verdict.empty()) os << "verdict: " << verdict << "\n";
    if (elapsed_ms >= 0) os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace sympair
