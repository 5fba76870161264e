#pragma once

// Procedure B: hunt for a finite obstruction. B_n = [-n,n]^2 must be
// covered exactly once while cells in the halo B_{n+d} \ B_n may be used at
// most once (d = tile diameter). A translate that touches B_n lies entirely
// inside B_{n+d}, so the halo captures every cell any candidate row uses.
// If no packing exists the box radius certifies that F does not tile.

#include <optional>
#include <string>
#include <vector>

#include "tilez/cover.hpp"
#include "tilez/geometry.hpp"

namespace tilez {

inline constexpr const char* kBoxSearchPolicy = "boxcover/dlx-mrv-v1";

struct ObstructionCertificate {
    Tile tile;
    i64 radius = 0;
    std::string search_policy_version = kBoxSearchPolicy;

    friend bool operator==(const ObstructionCertificate& a,
                           const ObstructionCertificate& b) = default;
};

inline bool coverable(const Tile& f, i64 n) {
    i64 d = tile_diameter(f);
    i64 box = 2 * n + 1;
    i64 halo = 2 * (n + d) + 1;
    auto in_box = [&](Cell c) { return std::abs(c.x) <= n && std::abs(c.y) <= n; };

    // primary columns: B_n cells; secondary: halo ring cells, both in
    // raster order
    std::vector<int> ids(static_cast<std::size_t>(halo * halo));
    {
        int next_primary = 0, next_secondary = static_cast<int>(box * box);
        for (i64 y = -(n + d); y <= n + d; ++y)
            for (i64 x = -(n + d); x <= n + d; ++x) {
                std::size_t k = static_cast<std::size_t>((y + n + d) * halo + (x + n + d));
                ids[k] = in_box({x, y}) ? next_primary++ : next_secondary++;
            }
    }
    auto col = [&](Cell c) {
        return ids[static_cast<std::size_t>((c.y + n + d) * halo + (c.x + n + d))];
    };

    CoverInstance inst;
    inst.n_primary = static_cast<int>(box * box);
    inst.n_secondary = static_cast<int>(halo * halo - box * box);
    for (i64 ty = -(n + d); ty <= n + d; ++ty) {
        for (i64 tx = -(n + d); tx <= n + d; ++tx) {
            Cell t{tx, ty};
            bool touches = false;
            for (Cell fc : f.cells())
                if (in_box(fc + t)) touches = true;
            if (!touches) continue;
            std::vector<int> row;
            row.reserve(f.size());
            for (Cell fc : f.cells()) row.push_back(col(fc + t));
            std::sort(row.begin(), row.end());
            inst.rows.push_back(std::move(row));
        }
    }
    return solve_cover(inst).has_value();
}

// Least failing radius <= max_n, if any.
inline std::optional<ObstructionCertificate> find_obstruction(const Tile& f, i64 max_n) {
    for (i64 n = 0; n <= max_n; ++n)
        if (!coverable(f, n)) return ObstructionCertificate{f, n, kBoxSearchPolicy};
    return std::nullopt;
}

}  // namespace tilez
