#include <doctest.h>

#include "sympair/oracle.hpp"
#include "sympair/report.hpp"

using namespace sympair;

TEST_CASE("weights render per block") {
    CHECK(format_weight(RootDatum::unitary({1}), {-2}) == "-2");
    CHECK(format_weight(RootDatum::unitary({3}), {2, 1, 0}) == "(2,1,0)");
    CHECK(format_weight(RootDatum::unitary({2, 1}), {2, 1, 0}) == "((2,1),(0))");
    CHECK(format_weight(RootDatum({{BlockKind::su2, 1}, {BlockKind::su2, 1}}), {1, 3}) ==
          "((1),(3))");
}

TEST_CASE("report JSON schema and byte-stable round trip") {
    PairSpec pair = make_su2_torus();
    auto orbits = catalog(pair);
    BranchTable table = branch_table(pair, orbits, {2});
    nlohmann::json doc = report_json(pair, table, "ok", 1.5);

    CHECK(doc["pair"] == "su2-torus");
    CHECK(doc["lambda"] == nlohmann::json::parse("[[2]]"));
    CHECK(doc["verdict"] == "ok");
    REQUIRE(doc["entries"].is_array());
    bool found = false;
    for (const auto& e : doc["entries"]) {
        REQUIRE(e.contains("mu"));
        REQUIRE(e.contains("total"));
        REQUIRE(e.contains("per_orbit"));
        CHECK(e["per_orbit"].size() == 3);  // two pole cosets plus the equator
        for (const auto& cell : e["per_orbit"]) {
            CHECK(cell.contains("orbit"));
            CHECK(cell.contains("coset"));
            CHECK(cell.contains("value"));
        }
        if (e["mu"] == nlohmann::json::parse("[[0]]")) {
            found = true;
            CHECK(e["total"] == 1);
        }
    }
    CHECK(found);

    std::string emitted = doc.dump(2);
    CHECK(nlohmann::json::parse(emitted).dump(2) == emitted);
}

TEST_CASE("human rendering contains the per-orbit columns") {
    PairSpec pair = make_diag_su2();
    auto orbits = catalog(pair);
    BranchTable table = branch_table(pair, orbits, {1, 1});
    std::string text = render_human(pair, table, "ok");
    CHECK(text.find("0:0") != std::string::npos);
    CHECK(text.find("0:1") != std::string::npos);
    CHECK(text.find("verdict: ok") != std::string::npos);
}
