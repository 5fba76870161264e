#pragma once

// Brute-force oracles. These are intentionally naive, share no search code
// with the cover engine, and exist to mint expected constants and to
// cross-check the optimized paths. Keep them dumb.

#include <cstdint>
#include <optional>
#include <vector>

#include "tilez/geometry.hpp"
#include "tilez/lattice.hpp"

namespace tilez {
namespace oracle {

// Exhaustive subset search for a Lambda-periodic tiling: tries every subset
// S of the fundamental domain. Exponential; capped at index 9.
inline std::optional<std::vector<Cell>> brute_torus(const Tile& f, const Lattice& l) {
    if (l.index() > 9) throw error(errc::budget_exceeded, "brute_torus caps at index 9");
    i64 n = l.index();
    if (static_cast<i64>(f.size()) == 0 || n % static_cast<i64>(f.size()) != 0)
        return std::nullopt;
    std::vector<Cell> dom = l.fundamental_domain();
    auto cell_id = [&](Cell c) { return static_cast<std::size_t>(c.y * l.p + c.x); };
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> covered(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (i64 i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (Cell fc : f.cells()) {
                std::size_t id = cell_id(l.reduce(fc + dom[static_cast<std::size_t>(i)]));
                if (++covered[id] > 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        bool full = true;
        for (i64 c = 0; c < n; ++c)
            if (covered[static_cast<std::size_t>(c)] != 1) full = false;
        if (!full) continue;
        std::vector<Cell> s;
        for (i64 i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(dom[static_cast<std::size_t>(i)]);
        sort_cells(s);
        return s;
    }
    return std::nullopt;
}

namespace detail {

// Recursive packer over the box [-n,n]^2: fill the first uncovered box cell
// (scanning y then x), allowing placements to spill into the halo at most
// once per cell. No dancing links, no heuristics.
class NaivePacker {
public:
    NaivePacker(const Tile& f, i64 n) : f_(f), n_(n), d_(tile_diameter(f)) {
        side_ = 2 * (n_ + d_) + 1;
        covered_.assign(static_cast<std::size_t>(side_ * side_), false);
    }

    bool run() { return fill(first_box_cell(0)); }

private:
    i64 first_box_cell(i64 from) const {
        i64 box = 2 * n_ + 1;
        for (i64 k = from; k < box * box; ++k) {
            i64 x = k % box - n_, y = k / box - n_;
            if (!covered_at({x, y})) return k;
        }
        return box * box;
    }

    bool in_halo(Cell c) const {
        return std::abs(c.x) <= n_ + d_ && std::abs(c.y) <= n_ + d_;
    }

    std::size_t idx(Cell c) const {
        return static_cast<std::size_t>((c.y + n_ + d_) * side_ + (c.x + n_ + d_));
    }

    bool covered_at(Cell c) const { return covered_[idx(c)]; }

    bool fill(i64 k) {
        i64 box = 2 * n_ + 1;
        if (k == box * box) return true;
        Cell target{k % box - n_, k / box - n_};
        for (Cell fc : f_.cells()) {
            Cell t = target - fc;
            bool fits = true;
            for (Cell g : f_.cells()) {
                Cell c = t + g;
                if (!in_halo(c) || covered_at(c)) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (Cell g : f_.cells()) covered_[idx(t + g)] = true;
            if (fill(first_box_cell(k + 1))) return true;
            for (Cell g : f_.cells()) covered_[idx(t + g)] = false;
        }
        return false;
    }

    const Tile& f_;
    i64 n_, d_, side_;
    std::vector<bool> covered_;
};

}  // namespace detail

// Uncapped naive coverability check (used for certificate re-verification).
inline bool naive_box_coverable(const Tile& f, i64 n) {
    return detail::NaivePacker(f, n).run();
}

// Oracle-budgeted wrapper: exact coverability of B_n for small instances.
inline bool brute_box(const Tile& f, i64 n) {
    if (n > 5 || f.size() > 6) throw error(errc::budget_exceeded, "brute_box caps at n=5, |F|=6");
    return naive_box_coverable(f, n);
}

enum class LineVerdict { tiles, does_not_tile };

// Greedy forced packer for 1-D tiles on [0, horizon]: in a tiling of the
// half-line the piece covering the leftmost uncovered cell must start
// there, so the fill is deterministic.
inline LineVerdict brute_line(const std::vector<i64>& offsets, i64 horizon) {
    i64 diam = 0;
    for (i64 o : offsets) diam = std::max(diam, o);
    std::vector<bool> covered(static_cast<std::size_t>(horizon + diam + 1), false);
    for (i64 y = 0; y <= horizon; ++y) {
        if (covered[static_cast<std::size_t>(y)]) continue;
        for (i64 o : offsets)
            if (covered[static_cast<std::size_t>(y + o)]) return LineVerdict::does_not_tile;
        for (i64 o : offsets) covered[static_cast<std::size_t>(y + o)] = true;
    }
    return LineVerdict::tiles;
}

}  // namespace oracle
}  // namespace tilez
