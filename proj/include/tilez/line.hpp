#pragma once

// d = 1 decider. With the tile canonical (min offset 0), the piece covering
// the leftmost uncovered cell must start exactly there, so the boundary
// process is a deterministic walk over protrusion states: a bitmask of the
// next diam(F) cells already covered from behind. A revisited state on the
// walk closes a cycle, and unrolling the cycle both ways tiles the whole
// line; if every start state dies, no tiling exists.

#include <cstdint>
#include <optional>
#include <vector>

#include "tilez/error.hpp"
#include "tilez/geometry.hpp"

namespace tilez {

struct LineTile {
    std::vector<i64> offsets;  // canonical: sorted, offsets[0] == 0

    i64 diameter() const { return offsets.empty() ? 0 : offsets.back(); }

    friend bool operator==(const LineTile& a, const LineTile& b) = default;
};

inline LineTile canonicalize_line_tile(std::vector<i64> offsets) {
    if (offsets.empty()) throw error(errc::empty_tile, "line tile needs at least one offset");
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    i64 base = offsets.front();
    for (i64& o : offsets) o -= base;
    return LineTile{std::move(offsets)};
}

struct LineTiling {
    i64 period = 1;
    std::vector<i64> starts;  // subset of [0, period), sorted

    friend bool operator==(const LineTiling& a, const LineTiling& b) = default;
};

// Direct counting of {f + s mod p}: every residue exactly once.
inline bool verify_line(const LineTile& f, const LineTiling& t) {
    if (t.period < 1) return false;
    if (static_cast<i64>(f.offsets.size() * t.starts.size()) != t.period) return false;
    std::vector<int> covered(static_cast<std::size_t>(t.period), 0);
    for (i64 s : t.starts) {
        if (s < 0 || s >= t.period) return false;
        for (i64 o : f.offsets) ++covered[static_cast<std::size_t>((s + o) % t.period)];
    }
    for (int k : covered)
        if (k != 1) return false;
    return true;
}

inline std::optional<LineTiling> decide_line(const LineTile& f) {
    i64 dm = f.diameter();
    if (dm == 0) return LineTiling{1, {0}};  // {0} tiles with period 1
    if (dm >= 20) throw error(errc::budget_exceeded, "line diameter too large for 2^diam scan");

    const std::uint32_t n_states = 1u << dm;
    std::uint32_t place_mask = 0;  // offsets >= 1 as bits 0..dm-1
    for (i64 o : f.offsets)
        if (o >= 1) place_mask |= 1u << (o - 1);

    // forced transition; nullopt on collision
    auto step = [&](std::uint32_t s) -> std::optional<std::pair<std::uint32_t, i64>> {
        if (s & place_mask) return std::nullopt;
        std::uint32_t m = s | place_mask;
        i64 advance = 1;
        while (m & 1u) {
            m >>= 1;
            ++advance;
        }
        m >>= 1;
        return std::make_pair(m, advance);
    };

    std::vector<char> dead(n_states, 0);
    std::vector<std::uint32_t> visit_epoch(n_states, 0);
    std::vector<int> pos_on_path(n_states, -1);
    for (std::uint32_t s0 = 0; s0 < n_states; ++s0) {
        if (dead[s0]) continue;
        std::vector<std::uint32_t> path;
        std::vector<i64> advances;
        const std::uint32_t epoch = s0 + 1;
        std::uint32_t s = s0;
        while (true) {
            if (dead[s]) {
                for (std::uint32_t v : path) dead[v] = 1;
                break;
            }
            int seen_at = visit_epoch[s] == epoch ? pos_on_path[s] : -1;
            if (seen_at >= 0) {
                // cycle: placements happen at every state along it
                i64 period = 0;
                for (std::size_t i = static_cast<std::size_t>(seen_at); i < advances.size(); ++i)
                    period += advances[i];
                std::vector<i64> starts;
                i64 at = 0;
                for (std::size_t i = static_cast<std::size_t>(seen_at); i < advances.size(); ++i) {
                    starts.push_back(at % period);
                    at += advances[i];
                }
                std::sort(starts.begin(), starts.end());
                return LineTiling{period, std::move(starts)};
            }
            visit_epoch[s] = epoch;
            pos_on_path[s] = static_cast<int>(path.size());
            path.push_back(s);
            auto next = step(s);
            if (!next) {
                for (std::uint32_t v : path) dead[v] = 1;
                break;
            }
            advances.push_back(next->second);
            s = next->first;
        }
    }
    return std::nullopt;
}

}  // namespace tilez
