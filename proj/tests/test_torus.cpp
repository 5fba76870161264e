#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tilez/oracle.hpp"
#include "tilez/torus.hpp"

using namespace tilez;

namespace {

const Tile kSingle = canonicalize_tile({Cell{0, 0}});
const Tile kDomino = canonicalize_tile({Cell{0, 0}, Cell{1, 0}});
const Tile kTromino = canonicalize_tile({Cell{0, 0}, Cell{1, 0}, Cell{0, 1}});
const Tile kGapRow = canonicalize_tile({Cell{0, 0}, Cell{1, 0}, Cell{3, 0}});

std::vector<Tile> tiles_in_3x3_box(std::size_t max_cells) {
    std::vector<Cell> box;
    for (i64 y = 0; y < 3; ++y)
        for (i64 x = 0; x < 3; ++x) box.push_back({x, y});
    std::set<std::vector<Cell>> seen;
    std::vector<Tile> out;
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_cells) continue;
        std::vector<Cell> cells;
        for (int i = 0; i < 9; ++i)
            if (mask >> i & 1) cells.push_back(box[static_cast<std::size_t>(i)]);
        Tile t = canonicalize_tile(cells);
        std::vector<Cell> key(t.cells().begin(), t.cells().end());
        if (seen.insert(key).second) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("project_tile detects coset collisions") {
    auto single = project_tile(kSingle, Lattice{2, 1, 1});
    REQUIRE(single.has_value());
    CHECK(*single == std::vector<Cell>{{0, 0}});

    auto tromino = project_tile(kTromino, Lattice{3, 1, 1});
    REQUIRE(tromino.has_value());
    CHECK(*tromino == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});

    CHECK_FALSE(project_tile(canonicalize_tile({Cell{0, 0}, Cell{2, 0}}), Lattice{2, 0, 1})
                    .has_value());
}

TEST_CASE("solve_torus finds the expected certificates") {
    auto point = solve_torus(kSingle, full_lattice());
    REQUIRE(point.has_value());
    CHECK(point->reps == std::vector<Cell>{{0, 0}});
    CHECK(check_periodic(kSingle, *point));

    auto tromino = solve_torus(kTromino, Lattice{3, 1, 1});
    REQUIRE(tromino.has_value());
    CHECK(tromino->reps == std::vector<Cell>{{0, 0}});
    CHECK(check_periodic(kTromino, *tromino));

    auto domino = solve_torus(kDomino, Lattice{2, 1, 1});
    REQUIRE(domino.has_value());
    CHECK(domino->reps.size() == 1);
    CHECK(check_periodic(kDomino, *domino));
}

TEST_CASE("solve_torus filters divisibility and injectivity") {
    CHECK_FALSE(solve_torus(kDomino, full_lattice()).has_value());   // 2 does not divide 1
    CHECK_FALSE(solve_torus(kTromino, Lattice{2, 0, 2}).has_value());  // collision mod 2
}

TEST_CASE("find_periodic_tiling scans indices in order") {
    auto point = find_periodic_tiling(kSingle, 4);
    REQUIRE(point.has_value());
    CHECK(point->lattice.index() == 1);

    auto tromino = find_periodic_tiling(kTromino, 30);
    REQUIRE(tromino.has_value());
    CHECK(tromino->lattice.index() == 3);
    CHECK(check_periodic(kTromino, *tromino));

    CHECK_FALSE(find_periodic_tiling(kGapRow, 30).has_value());
}

TEST_CASE("check_periodic rejects tampered certificates") {
    auto pt = solve_torus(kTromino, Lattice{3, 1, 1});
    REQUIRE(pt.has_value());

    PeriodicTiling missing = *pt;
    missing.reps.clear();
    CHECK_FALSE(check_periodic(kTromino, missing));

    PeriodicTiling moved = *pt;
    moved.reps[0] = Cell{1, 0};
    CHECK_FALSE(check_periodic(kTromino, moved));

    // a certificate whose tile collides mod Lambda
    PeriodicTiling collide{canonicalize_tile({Cell{0, 0}, Cell{2, 0}}), Lattice{2, 0, 1},
                           {Cell{0, 0}}};
    CHECK_FALSE(check_periodic(collide.tile, collide));
}

TEST_CASE("solve_torus agrees with exhaustive subset search at small index") {
    auto tiles = tiles_in_3x3_box(4);
    i64 checked = 0;
    for (const Tile& t : tiles) {
        for (i64 n = 1; n <= 8; ++n) {
            for (const Lattice& l : enumerate_lattices(n)) {
                auto engine = solve_torus(t, l);
                auto brute = oracle::brute_torus(t, l);
                CAPTURE(t.cells(), l.p, l.q, l.r);
                REQUIRE(engine.has_value() == brute.has_value());
                if (engine) CHECK(check_periodic(t, *engine));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("necessary-condition filter is conservative") {
    // whenever solve_torus bails for divisibility/injectivity, brute force
    // also finds nothing
    for (const Tile& t : {kDomino, kTromino, kGapRow}) {
        for (i64 n = 1; n <= 9; ++n) {
            for (const Lattice& l : enumerate_lattices(n)) {
                bool filtered = (l.index() % static_cast<i64>(t.size()) != 0) ||
                                !project_tile(t, l).has_value();
                if (filtered) CHECK_FALSE(oracle::brute_torus(t, l).has_value());
            }
        }
    }
}

TEST_CASE("torus search is deterministic") {
    auto a = find_periodic_tiling(kDomino, 12);
    auto b = find_periodic_tiling(kDomino, 12);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}
