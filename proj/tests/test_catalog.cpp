#include "macmahon/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace macmahon;

TEST_CASE("catalog ids are unique and discoverable")
{
    std::set<std::string> ids;
    for (const auto& e : identity_catalog()) {
        CHECK(ids.insert(e.id).second);
        CHECK(&find_identity(e.id) == &e);
        CHECK(static_cast<bool>(e.run));
    }
    for (const char* id : {"theorem-FGH", "closed-form-V3", "conjugate-M-form", "wz-master", "jacobi-specialization"})
        CHECK(ids.count(id) == 1);
    CHECK_THROWS_WITH_AS(find_identity("no-such-id"), doctest::Contains("theorem-FGH"), std::invalid_argument);
}

TEST_CASE("value lists")
{
    CHECK(parse_value_list("1..4") == std::vector<BigRational>{1, 2, 3, 4});
    CHECK(parse_value_list("0,1/2,7/3") == std::vector<BigRational>{0, BigRational(1, 2), BigRational(7, 3)});
    CHECK(parse_value_list("5") == std::vector<BigRational>{5});
    CHECK_THROWS_AS(parse_value_list("4..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_value_list("a"), std::invalid_argument);
}

TEST_CASE("grid runs")
{
    const auto& fgh = find_identity("theorem-FGH");
    const auto run = run_grid(fgh, {{"t", {1, 2}}, {"n", {1, 2, 3}}}, 30);
    CHECK(run.reports.size() == 6);
    CHECK(run.all_pass());
    CHECK(run.skipped_poles == 0);

    CHECK_THROWS_AS(run_grid(fgh, {{"zz", {1}}}, 30), std::invalid_argument);
    CHECK_THROWS_AS(run_grid(fgh, {{"t", {BigRational(1, 2)}}}, 30), std::invalid_argument);

    // z = -1 puts a zero in a denominator; such instances are counted, not run
    const auto& master = find_identity("rational-master");
    const auto poles = run_grid(master, {{"t", {1}}, {"n", {2}}, {"z", {-1, 1}}, {"x", {0}}});
    CHECK(poles.reports.size() == 1);
    CHECK(poles.skipped_poles == 1);
    CHECK(poles.all_pass());
}

TEST_CASE("every entry passes on its first grid point")
{
    for (const auto& e : identity_catalog()) {
        ParamGrid grid;
        for (const auto& p : e.params)
            grid[p.name] = {p.defaults.front()};
        const auto run = run_grid(e, grid, e.uses_order ? std::optional<std::size_t>(20) : std::nullopt);
        INFO(e.id);
        CHECK(run.all_pass());
    }
}
