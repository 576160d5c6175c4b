#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "equibir/fixtures.hpp"
#include "equibir/linear_section.hpp"

using namespace equibir;

namespace {

const std::filesystem::path kFixtures = EQUIBIR_FIXTURES;

const LoadedTable& table(const std::string& name) {
    static std::map<std::string, LoadedTable> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, load_char_table(kFixtures / (name + ".chartab"))).first;
    return it->second;
}

} // namespace

TEST_CASE("quintic threefold scenario passes") {
    const auto& t = table("a5");
    auto s = scenario_from_decomposition(t.table.row("W5"), t.table, {"W3", "W4"});
    CHECK(s.n == 5);
    CHECK(s.v_dim() == 7);
    CHECK(s.r == 3);
    auto rep = check_scenario(s);
    CHECK(rep.precondition);
    CHECK(rep.dim_x == 3);
    CHECK(rep.fiber_dim == 0);
}

TEST_CASE("degree-5 surface scenario fails the codimension bound") {
    const auto& t = table("s5");
    auto s = scenario_from_decomposition(t.table.row("W5"), t.table, {"W6"});
    CHECK(s.n == 5);
    CHECK(s.v_dim() == 6);
    CHECK(s.r == 4);
    auto rep = check_scenario(s);
    CHECK(!rep.precondition);
    CHECK(rep.bound == 3);
}

TEST_CASE("order-54 group fourfold scenario passes") {
    const auto& t = table("c9c6");
    auto s = scenario_from_decomposition(t.table.row("X.10"), t.table,
                                         {"X.6", "X.7", "X.8", "X.10"});
    CHECK(s.n == 6);
    CHECK(s.v_dim() == 11);
    CHECK(s.r == 4);
    auto rep = check_scenario(s);
    CHECK(rep.precondition);
    CHECK(rep.dim_x == 4);
    CHECK(rep.fiber_dim == 0);
}

TEST_CASE("order-162 group fourfold scenario passes") {
    const auto& t = table("c33s3");
    auto s = scenario_from_decomposition(t.table.row("X.11"), t.table, {"X.5", "X.7", "X.13"});
    CHECK(s.n == 6);
    CHECK(s.v_dim() == 11);
    CHECK(s.r == 4);
    auto rep = check_scenario(s);
    CHECK(rep.precondition);
    CHECK(rep.dim_x == 4);
}

TEST_CASE("identities dim X + r and fiber + r") {
    const auto& t = table("a5");
    for (auto chosen : {std::vector<std::string>{"W3", "W4"}, {"W3p", "W4"}, {"W3", "W3p", "W4"}}) {
        auto s = scenario_from_decomposition(t.table.row("W5"), t.table, chosen);
        auto rep = check_scenario(s);
        CHECK(rep.dim_x + static_cast<long>(s.r) == 2 * (static_cast<long>(s.n) - 2));
        CHECK(rep.fiber_dim + static_cast<long>(s.r) == static_cast<long>(s.n) - 2);
    }
}

TEST_CASE("choosing every constituent gives codimension zero") {
    const auto& t = table("a5");
    auto s = scenario_from_decomposition(t.table.row("W5"), t.table, {"W3", "W3p", "W4"});
    CHECK(s.r == 0);
}

TEST_CASE("bad choices are rejected") {
    const auto& t = table("a5");
    CHECK_THROWS_AS(scenario_from_decomposition(t.table.row("W5"), t.table, {"W5"}), BadChoice);
    CHECK_THROWS_AS(scenario_from_decomposition(t.table.row("W5"), t.table, {"nope"}), BadChoice);

    LinearSectionScenario s;
    s.n = 5;
    s.r = 3;
    s.chosen = {{"bogus", 5}}; // 5 != 10 - 3
    CHECK_THROWS_AS(check_scenario(s), BadScenario);
}

TEST_CASE("scenario files round-trip through the loader") {
    for (const char* name : {"a5_quintic", "s5_dp5", "c9c6_grass", "c33s3_grass"}) {
        ScenarioFile f = load_scenario(kFixtures / (std::string(name) + ".scn"));
        const auto& t = table(f.table);
        auto s = scenario_from_decomposition(t.table.row(f.w_label), t.table, f.chosen);
        auto rep = check_scenario(s);
        if (f.expect == "PASS") {
            CHECK(rep.precondition);
            if (f.expectations.count("expect_dim_x"))
                CHECK(rep.dim_x == f.expectations.at("expect_dim_x"));
            if (f.expectations.count("expect_fiber_dim"))
                CHECK(rep.fiber_dim == f.expectations.at("expect_fiber_dim"));
        } else {
            CHECK(f.expect == "FAIL");
            CHECK(!rep.precondition);
            if (f.expectations.count("expect_r"))
                CHECK(static_cast<long>(s.r) == f.expectations.at("expect_r"));
        }
    }
}
