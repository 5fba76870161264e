#pragma once

// Cells of the integer plane and finite tiles in canonical (translated,
// sorted) form. Everything downstream assumes tiles are canonical: the
// minimum x and minimum y over the cells are both zero and the cell list
// is sorted by (y, x).

#include <algorithm>
#include <cstdint>
#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "tilez/error.hpp"

namespace tilez {

using i64 = std::int64_t;

struct Cell {
    i64 x = 0;
    i64 y = 0;

    friend Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
    friend Cell operator*(i64 k, Cell a) { return {k * a.x, k * a.y}; }
    friend Cell operator-(Cell a) { return {-a.x, -a.y}; }
    friend bool operator==(Cell a, Cell b) = default;

    // (y, x) order so sorted output matches row-major reading order.
    friend auto operator<=>(Cell a, Cell b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

// cross product; zero iff the two vectors are proportional over Z
inline i64 cross(Cell a, Cell b) { return a.x * b.y - a.y * b.x; }

inline void sort_cells(std::vector<Cell>& cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

class Tile {
public:
    Tile() = default;

    std::span<const Cell> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    friend bool operator==(const Tile& a, const Tile& b) = default;

    // internal: use canonicalize_tile to construct
    static Tile from_canonical(std::vector<Cell> cells) {
        Tile t;
        t.cells_ = std::move(cells);
        return t;
    }

private:
    std::vector<Cell> cells_;
};

// Translate so min x = min y = 0, sort by (y, x), drop duplicates.
inline Tile canonicalize_tile(std::span<const Cell> raw) {
    if (raw.empty()) throw error(errc::empty_tile, "tile needs at least one cell");
    i64 mx = raw[0].x, my = raw[0].y;
    for (Cell c : raw) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    std::vector<Cell> cells;
    cells.reserve(raw.size());
    for (Cell c : raw) cells.push_back({c.x - mx, c.y - my});
    sort_cells(cells);
    return Tile::from_canonical(std::move(cells));
}

inline Tile canonicalize_tile(std::initializer_list<Cell> raw) {
    return canonicalize_tile(std::span<const Cell>(raw.begin(), raw.size()));
}

// Chebyshev diameter: max over cell pairs of the larger coordinate gap.
// For a canonical tile this is max(max x, max y).
inline i64 tile_diameter(const Tile& f) {
    i64 mx = 0, my = 0;
    for (Cell c : f.cells()) {
        mx = std::max(mx, c.x);
        my = std::max(my, c.y);
    }
    return std::max(mx, my);
}

inline Tile translate(const Tile& f, Cell t) {
    std::vector<Cell> cells(f.cells().begin(), f.cells().end());
    for (Cell& c : cells) c = c + t;
    return canonicalize_tile(cells);
}

}  // namespace tilez

template <>
struct std::hash<tilez::Cell> {
    std::size_t operator()(tilez::Cell c) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(c.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
