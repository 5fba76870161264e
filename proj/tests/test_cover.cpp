#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tilez/cover.hpp"

using namespace tilez;

namespace {

// test-only oracle: try every subset of rows
bool brute_satisfiable(const CoverInstance& inst) {
    std::size_t nr = inst.rows.size();
    for (std::uint64_t mask = 0; mask < (1ull << nr); ++mask) {
        std::vector<int> covered(static_cast<std::size_t>(inst.n_columns()), 0);
        for (std::size_t ri = 0; ri < nr; ++ri)
            if (mask >> ri & 1)
                for (int c : inst.rows[ri]) ++covered[static_cast<std::size_t>(c)];
        bool ok = true;
        for (int c = 0; c < inst.n_primary && ok; ++c)
            if (covered[static_cast<std::size_t>(c)] != 1) ok = false;
        for (int c = inst.n_primary; c < inst.n_columns() && ok; ++c)
            if (covered[static_cast<std::size_t>(c)] > 1) ok = false;
        if (ok) return true;
    }
    return false;
}

CoverInstance random_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> ncols(1, 12);
    int total = ncols(rng);
    std::uniform_int_distribution<int> nsec(0, total - 1);
    CoverInstance inst;
    inst.n_secondary = nsec(rng);
    inst.n_primary = total - inst.n_secondary;
    std::uniform_int_distribution<int> nrows(1, 14);
    std::uniform_int_distribution<int> rowlen(1, std::max(1, total / 2 + 1));
    std::uniform_int_distribution<int> col(0, total - 1);
    int rows = nrows(rng);
    for (int r = 0; r < rows; ++r) {
        std::vector<int> row;
        int len = rowlen(rng);
        for (int i = 0; i < len; ++i) {
            int c = col(rng);
            if (std::find(row.begin(), row.end(), c) == row.end()) row.push_back(c);
        }
        std::sort(row.begin(), row.end());
        inst.rows.push_back(std::move(row));
    }
    return inst;
}

}  // namespace

TEST_CASE("cover examples from tiny instances") {
    CoverInstance one{1, 0, {{0}}};
    auto sol = solve_cover(one);
    REQUIRE(sol.has_value());
    CHECK(sol->row_indices == std::vector<int>{0});
    CHECK(check_solution(one, *sol));
    CHECK_FALSE(check_solution(one, Solution{{}}));

    CoverInstance two{2, 0, {{0}, {1}, {0, 1}}};
    auto sol2 = solve_cover(two);
    REQUIRE(sol2.has_value());
    CHECK(check_solution(two, *sol2));

    CoverInstance unsat{3, 0, {{0, 1}, {1, 2}}};
    CHECK_FALSE(solve_cover(unsat).has_value());
    CHECK_FALSE(brute_satisfiable(unsat));
}

TEST_CASE("secondary columns are at-most-once") {
    CoverInstance inst{2, 1, {{0, 2}, {1, 2}}};
    CHECK_FALSE(check_solution(inst, Solution{{0, 1}}));
    // the instance is unsatisfiable: both rows need the same secondary column
    CHECK_FALSE(solve_cover(inst).has_value());

    CoverInstance ok{2, 1, {{0, 2}, {1}}};
    auto sol = solve_cover(ok);
    REQUIRE(sol.has_value());
    CHECK(sol->row_indices == std::vector<int>{0, 1});
}

TEST_CASE("malformed instances are rejected") {
    CHECK_THROWS_AS(solve_cover(CoverInstance{1, 0, {{}}}), error);
    CHECK_THROWS_AS(solve_cover(CoverInstance{1, 0, {{0, 0}}}), error);
    CHECK_THROWS_AS(solve_cover(CoverInstance{1, 0, {{1}}}), error);
    CHECK_THROWS_AS(solve_cover(CoverInstance{1, 0, {{-1}}}), error);
}

TEST_CASE("solver agrees with subset enumeration on random instances") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 200; ++trial) {
        CoverInstance inst = random_instance(rng);
        auto sol = solve_cover(inst);
        bool brute = brute_satisfiable(inst);
        CAPTURE(trial, inst.n_primary, inst.n_secondary, inst.rows);
        REQUIRE(sol.has_value() == brute);
        if (sol) CHECK(check_solution(inst, *sol));
    }
}

TEST_CASE("adding an unused row never breaks satisfiability") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> col(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        CoverInstance inst = random_instance(rng);
        auto before = solve_cover(inst);
        if (!before) continue;
        std::vector<int> extra{col(rng) % inst.n_columns()};
        inst.rows.push_back(extra);
        auto after = solve_cover(inst);
        CHECK(after.has_value());
    }
}

TEST_CASE("solver is deterministic") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        CoverInstance inst = random_instance(rng);
        auto a = solve_cover(inst);
        auto b = solve_cover(inst);
        CHECK(a == b);
    }
}
