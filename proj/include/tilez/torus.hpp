#pragma once

// Procedure A: decide whether F admits a Lambda-periodic tiling by solving
// an exact cover on the finite quotient Z^2 / Lambda, and scan lattices by
// increasing index. A hit yields the certificate (Lambda', S) with
// F (+) (Lambda' (+) S) = Z^2.

#include <optional>
#include <vector>

#include "tilez/cover.hpp"
#include "tilez/geometry.hpp"
#include "tilez/lattice.hpp"

namespace tilez {

struct PeriodicTiling {
    Tile tile;
    Lattice lattice;
    std::vector<Cell> reps;  // S, sorted inside the fundamental domain

    friend bool operator==(const PeriodicTiling& a, const PeriodicTiling& b) = default;
};

// The tile's image in the quotient, or nullopt when two cells collide
// (a collision double-covers, so no Lambda-periodic tiling can exist).
inline std::optional<std::vector<Cell>> project_tile(const Tile& f, const Lattice& l) {
    std::vector<Cell> image;
    image.reserve(f.size());
    for (Cell c : f.cells()) image.push_back(l.reduce(c));
    sort_cells(image);
    if (image.size() != f.size()) return std::nullopt;
    return image;
}

inline std::optional<PeriodicTiling> solve_torus(const Tile& f, const Lattice& l) {
    i64 n = l.index();
    if (n % static_cast<i64>(f.size()) != 0) return std::nullopt;
    if (!project_tile(f, l)) return std::nullopt;

    std::vector<Cell> dom = l.fundamental_domain();
    auto col = [&](Cell c) { return static_cast<int>(c.y * l.p + c.x); };
    CoverInstance inst;
    inst.n_primary = static_cast<int>(n);
    for (Cell t : dom) {
        std::vector<int> row;
        row.reserve(f.size());
        for (Cell fc : f.cells()) row.push_back(col(l.reduce(fc + t)));
        std::sort(row.begin(), row.end());
        inst.rows.push_back(std::move(row));
    }
    auto sol = solve_cover(inst);
    if (!sol) return std::nullopt;
    std::vector<Cell> reps;
    reps.reserve(sol->row_indices.size());
    for (int ri : sol->row_indices) reps.push_back(dom[static_cast<std::size_t>(ri)]);
    sort_cells(reps);
    return PeriodicTiling{f, l, std::move(reps)};
}

// Scans N = |F|, 2|F|, ... <= max_index, each index in enumeration order.
// Complete: any Lambda-periodic tiling with index <= max_index is found.
inline std::optional<PeriodicTiling> find_periodic_tiling(const Tile& f, i64 max_index) {
    i64 step = static_cast<i64>(f.size());
    for (i64 n = step; n <= max_index; n += step) {
        for (const Lattice& l : enumerate_lattices(n)) {
            if (auto pt = solve_torus(f, l)) return pt;
        }
    }
    return std::nullopt;
}

// Certificate check by direct counting; no solver involvement.
inline bool check_periodic(const Tile& f, const PeriodicTiling& pt) {
    if (!(pt.tile == f)) return false;
    const Lattice& l = pt.lattice;
    i64 n = l.index();
    if (static_cast<i64>(f.size()) * static_cast<i64>(pt.reps.size()) != n) return false;
    for (Cell s : pt.reps)
        if (!(l.reduce(s) == s)) return false;  // reps must live in the domain
    std::vector<int> covered(static_cast<std::size_t>(n), 0);
    for (Cell s : pt.reps)
        for (Cell fc : f.cells()) {
            Cell c = l.reduce(fc + s);
            ++covered[static_cast<std::size_t>(c.y * l.p + c.x)];
        }
    for (int k : covered)
        if (k != 1) return false;
    return true;
}

}  // namespace tilez
