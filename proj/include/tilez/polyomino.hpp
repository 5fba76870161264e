#pragma once

// Enumerator for fixed polyominoes (distinct up to translation only).
// Canonical-form growth: extend every k-cell polyomino by one edge-adjacent
// cell, canonicalize, dedupe. Counts per size run 1, 2, 6, 19, 63, so the
// corpus of everything up to 5 cells has 91 tiles.

#include <set>
#include <vector>

#include "tilez/geometry.hpp"

namespace tilez {

inline std::vector<Tile> enumerate_fixed_polyominoes(int max_cells) {
    std::vector<Tile> out;
    std::set<std::vector<Cell>> seen;
    std::vector<Tile> frontier{canonicalize_tile({Cell{0, 0}})};
    auto key = [](const Tile& t) {
        return std::vector<Cell>(t.cells().begin(), t.cells().end());
    };
    seen.insert(key(frontier[0]));
    out.push_back(frontier[0]);
    const Cell steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int size = 2; size <= max_cells; ++size) {
        std::vector<Tile> next;
        for (const Tile& t : frontier) {
            for (Cell c : t.cells()) {
                for (Cell s : steps) {
                    Cell cand = c + s;
                    bool taken = false;
                    for (Cell existing : t.cells())
                        if (existing == cand) taken = true;
                    if (taken) continue;
                    std::vector<Cell> cells(t.cells().begin(), t.cells().end());
                    cells.push_back(cand);
                    Tile grown = canonicalize_tile(cells);
                    if (seen.insert(key(grown)).second) {
                        next.push_back(grown);
                        out.push_back(grown);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace tilez
