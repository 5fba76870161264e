#include <catch2/catch_amalgamated.hpp>

#include "tilez/line.hpp"
#include "tilez/oracle.hpp"

using namespace tilez;

TEST_CASE("single offset tiles with period 1") {
    auto t = decide_line(canonicalize_line_tile({0}));
    REQUIRE(t.has_value());
    CHECK(t->period == 1);
    CHECK(t->starts == std::vector<i64>{0});
    CHECK(verify_line(LineTile{{0}}, *t));
}

TEST_CASE("{0,2} tiles with period 4") {
    LineTile f = canonicalize_line_tile({0, 2});
    auto t = decide_line(f);
    REQUIRE(t.has_value());
    CHECK(t->period == 4);
    CHECK(t->starts == std::vector<i64>{0, 1});
    CHECK(verify_line(f, *t));
    CHECK(t->period <= (i64{1} << f.diameter()));  // the 2^diam bound, tight here
}

TEST_CASE("{0,1,3} does not tile the line") {
    CHECK_FALSE(decide_line(canonicalize_line_tile({0, 1, 3})).has_value());
}

TEST_CASE("verify_line counts the cover directly") {
    LineTile f{{0, 2}};
    CHECK(verify_line(f, LineTiling{4, {0, 1}}));
    CHECK_FALSE(verify_line(f, LineTiling{4, {0, 2}}));  // 0 and 2+2 collide mod 4
    CHECK(verify_line(LineTile{{0}}, LineTiling{1, {0}}));
    CHECK_FALSE(verify_line(f, LineTiling{4, {0}}));  // count mismatch
    CHECK_FALSE(verify_line(f, LineTiling{4, {0, 5}}));  // start out of range
}

TEST_CASE("canonicalize_line_tile shifts the minimum to zero") {
    CHECK(canonicalize_line_tile({3, 5, 4}).offsets == std::vector<i64>{0, 1, 2});
    CHECK_THROWS_AS(canonicalize_line_tile({}), error);
}

TEST_CASE("exhaustive ground truth for all tiles inside {0..7}") {
    // every F with 0 in F and offsets within [0,7]: decide_line must match
    // the greedy forced packer, and every tiling respects the 2^diam bound
    int tiles_checked = 0;
    for (unsigned mask = 1; mask < 256; mask += 2) {  // bit 0 forces 0 in F
        std::vector<i64> offsets;
        for (i64 o = 0; o < 8; ++o)
            if (mask >> o & 1) offsets.push_back(o);
        LineTile f{offsets};
        auto verdict = decide_line(f);
        i64 horizon = 2 * (i64{1} << 7);
        auto brute = oracle::brute_line(f.offsets, horizon);
        CAPTURE(offsets);
        REQUIRE(verdict.has_value() == (brute == oracle::LineVerdict::tiles));
        if (verdict) {
            CHECK(verify_line(f, *verdict));
            CHECK(verdict->period <= (i64{1} << f.diameter()));
        }
        ++tiles_checked;
    }
    CHECK(tiles_checked == 128);
}
