// Command-line surface: branch tables with per-orbit columns, oracle sweeps,
// structural selftests and orbit dumps for the supported symmetric pairs.
//
// Exit codes: 0 success, 1 property or consistency failure, 2 usage error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "sympair/sympair.hpp"

namespace {

using namespace sympair;

Weight parse_weight(const std::string& text, int expected_rank) {
    Weight w;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) throw error("bad weight entry in '" + text + "'");
        try {
            w.push_back(std::stoll(tok));
        } catch (...) {
            throw error("bad weight entry '" + tok + "'");
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            tok.push_back(c);
        }
    }
    flush();
    if (static_cast<int>(w.size()) != expected_rank)
        throw error("weight '" + text + "' has " + std::to_string(w.size()) +
                    " entries, expected " + std::to_string(expected_rank));
    return w;
}

std::string format_hx(const HxCharacter& c, const QuotientPresentation& pres) {
    std::ostringstream os;
    os << "free=(";
    for (size_t i = 0; i < c.free_part.size(); ++i) os << (i ? "," : "") << c.free_part[i];
    os << ")";
    if (!c.torsion.empty()) {
        os << " torsion=(";
        for (size_t i = 0; i < c.torsion.size(); ++i)
            os << (i ? "," : "") << c.torsion[i] << " mod " << pres.moduli()[i];
        os << ")";
    }
    return os.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_branch(const std::string& pair_str, const std::string& lambda_str,
               const std::string& format, bool with_oracle, const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    PairSpec pair = parse_pair(pair_str);
    Weight lambda = parse_weight(lambda_str, pair.g.rank());
    if (!pair.g.dominant(lambda)) throw error("lambda is not dominant for " + pair.label);
    std::vector<OrbitDatum> orbits = catalog(pair, lim.max_weyl);
    BranchTable table = branch_table(pair, orbits, lambda, lim);

    std::string verdict;
    if (with_oracle) {
        OracleTable oracle = oracle_branch(pair, lambda, lim.max_dim);
        verdict = "ok";
        for (const auto& [mu, entry] : table.entries) {
            auto it = oracle.mults.find(mu);
            if (entry.total != (it == oracle.mults.end() ? 0 : it->second)) verdict = "mismatch";
        }
        for (const auto& [mu, m] : oracle.mults)
            if (!table.entries.count(mu)) verdict = "mismatch";
    }

    if (format == "json")
        std::cout << report_json(pair, table, verdict, ms_since(t0)).dump(2) << "\n";
    else
        std::cout << render_human(pair, table, verdict, ms_since(t0));
    return verdict == "mismatch" ? 1 : 0;
}

int cmd_verify(const std::string& pair_str, Int box, const std::string& format,
               const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    PairSpec pair = parse_pair(pair_str);
    std::vector<OrbitDatum> orbits = catalog(pair, lim.max_weyl);
    std::vector<Weight> lambdas = dominant_box(pair.g, 0, box);

    std::string verdict = "ok", first_mismatch;
    Int checked = 0;
    for (const Weight& lambda : lambdas) {
        BranchTable table = branch_table(pair, orbits, lambda, lim);
        OracleTable oracle = oracle_branch(pair, lambda, lim.max_dim);
        for (const auto& [mu, entry] : table.entries) {
            auto it = oracle.mults.find(mu);
            Int expect = it == oracle.mults.end() ? 0 : it->second;
            if (entry.total != expect) {
                verdict = "mismatch";
                first_mismatch = "oracle: lambda=" + format_weight(pair.g, lambda) +
                                 " mu=" + format_weight(pair.h, mu);
            }
        }
        for (const auto& [mu, m] : oracle.mults)
            if (!table.entries.count(mu)) {
                verdict = "mismatch";
                first_mismatch = "missing constituent at lambda=" + format_weight(pair.g, lambda);
            }
        // route equivalence per class, reusing the per-orbit breakdown
        for (const auto& orbit : orbits) {
            for (const auto& [mu, entry] : table.entries) {
                Int coset_sum = 0;
                for (size_t i = 0; i < table.orbit_keys.size(); ++i)
                    if (table.orbit_keys[i].first == orbit.base_id)
                        coset_sum += entry.per_orbit[i];
                Int avg = class_mult_weyl_sum(pair, orbit, lambda, mu, lim);
                if (coset_sum != avg) {
                    verdict = "mismatch";
                    first_mismatch = "route: lambda=" + format_weight(pair.g, lambda) +
                                     " mu=" + format_weight(pair.h, mu) + " class " +
                                     std::to_string(orbit.base_id);
                }
            }
            if (verdict != "ok") break;
        }
        ++checked;
        if (verdict != "ok") break;
    }

    if (format == "json") {
        nlohmann::json doc;
        doc["pair"] = pair.label;
        doc["lambda_box"] = box;
        doc["lambdas_checked"] = checked;
        doc["verdict"] = verdict;
        if (!first_mismatch.empty()) doc["first_mismatch"] = first_mismatch;
        doc["elapsed_ms"] = ms_since(t0);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "pair: " << pair.label << "   lambda box: [0," << box << "]   lambdas: "
                  << checked << "\n";
        if (!first_mismatch.empty()) std::cout << "first mismatch: " << first_mismatch << "\n";
        std::cout << "verdict: " << verdict << "   elapsed: " << ms_since(t0) << " ms\n";
    }
    return verdict == "ok" ? 0 : 1;
}

int cmd_selftest(const std::string& pair_str, const std::string& format, const Limits& lim) {
    auto t0 = std::chrono::steady_clock::now();
    PairSpec pair = parse_pair(pair_str);
    std::vector<OrbitDatum> orbits = catalog(pair, lim.max_weyl);

    std::vector<Weight> lambdas = dominant_box(pair.g, 0, 2);
    if (lambdas.size() > 4) lambdas.resize(4);

    std::vector<CheckResult> results;
    results.push_back(check_parity(pair, orbits, lim));
    results.push_back(check_det_transport(pair, orbits, lim));
    results.push_back(check_wedge_transport(pair, orbits, lim));
    results.push_back(check_delta_shift(pair, orbits, lim));
    results.push_back(check_imaginary_counts(pair, orbits, lim));
    results.push_back(check_representative_independence(pair, orbits, lambdas, 20180621, lim));
    results.push_back(check_route_equivalence(pair, orbits, lambdas, lim));

    bool all_ok = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        if (format == "json") {
            nlohmann::json c;
            c["name"] = r.name;
            c["ok"] = r.ok;
            if (!r.detail.empty()) c["detail"] = r.detail;
            checks.push_back(std::move(c));
        } else {
            std::cout << (r.ok ? "[pass] " : "[FAIL] ") << r.name
                      << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
        }
    }
    if (format == "json") {
        nlohmann::json doc;
        doc["pair"] = pair.label;
        doc["checks"] = std::move(checks);
        doc["verdict"] = all_ok ? "ok" : "fail";
        doc["elapsed_ms"] = ms_since(t0);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (all_ok ? "ok" : "fail") << "   elapsed: " << ms_since(t0)
                  << " ms\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_orbits(const std::string& pair_str, const Limits& lim) {
    PairSpec pair = parse_pair(pair_str);
    std::vector<OrbitDatum> orbits = catalog(pair, lim.max_weyl);
    std::cout << "pair: " << pair.label << "   classes: " << orbits.size() << "\n";
    for (const auto& orbit : orbits) {
        WeylElement id = weyl_identity(pair.g.rank());
        RootClassification rc = classify_roots(pair, orbit, id);
        std::cout << "class " << orbit.base_id << " (" << orbit.name << ")"
                  << "  |W_x^H|=" << orbit.wxh_order << "  cosets=" << orbit.coset_reps.size()
                  << "\n";
        std::cout << "  X(H_x) = Z^" << orbit.hx.free_rank();
        for (Int m : orbit.hx.moduli()) std::cout << " x Z/" << m;
        std::cout << "\n";
        std::cout << "  roots+: ci=" << rc.ci_plus.size() << " nci=" << rc.nci_plus.size()
                  << " complex pairs=" << rc.complex_pairs.size()
                  << " real=" << rc.real_plus.size() << "\n";
        std::cout << "  delta = " << format_hx(delta_character(pair, orbit, id), orbit.hx)
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact branching tables for compact symmetric pairs"};
    app.require_subcommand(1);

    std::string pair_str, lambda_str, format = "human";
    Int box = 2;
    Limits lim;
    bool no_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool needs_pair = true) {
        if (needs_pair)
            cmd->add_option("--pair", pair_str,
                            "pair: su2-torus | diag:su2 | diag:u<k> | upq:<p>,<q>")
                ->required();
        cmd->add_option("--max-weyl", lim.max_weyl, "cap on the Weyl group order");
        cmd->add_option("--max-dim", lim.max_dim, "cap on weight system sizes");
        cmd->add_option("--jobs", lim.jobs, "worker threads for table cells");
        cmd->add_option("--format", format, "output format: human | json")
            ->check(CLI::IsMember({"human", "json"}));
    };

    CLI::App* branch = app.add_subcommand("branch", "branching table for one highest weight");
    add_common(branch);
    branch->add_option("--lambda", lambda_str, "G-dominant weight, e.g. 2,1,0 or 1;1")
        ->required();
    branch->add_flag("--no-oracle", no_oracle, "skip the oracle comparison");

    CLI::App* verify = app.add_subcommand("verify", "sweep a box of highest weights against the oracle");
    add_common(verify);
    verify->add_option("--lambda-box", box, "check all dominant lambda with entries in [0,box]")
        ->required();

    CLI::App* selftest = app.add_subcommand("selftest", "structural property checks");
    add_common(selftest);

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "dump the orbit classes of a pair");
    add_common(orbits_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (branch->parsed()) return cmd_branch(pair_str, lambda_str, format, !no_oracle, lim);
        if (verify->parsed()) return cmd_verify(pair_str, box, format, lim);
        if (selftest->parsed()) return cmd_selftest(pair_str, format, lim);
        if (orbits_cmd->parsed()) return cmd_orbits(pair_str, lim);
    } catch (const sympair::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const sympair::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
