#pragma once

// Finite-index sublattices of Z^2 in lower-triangular Hermite normal form,
// basis {(p,0),(q,r)} with 0 <= q < p. The fundamental domain is the box
// D = [0,p) x [0,r), so coset reduction is a two-step modular reduction and
// index-N enumeration is a divisor loop.

#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tilez/geometry.hpp"

namespace tilez {

inline i64 floor_mod(i64 a, i64 m) {
    i64 v = a % m;
    return v < 0 ? v + m : v;
}

struct Lattice {
    i64 p = 1;  // (p, 0)
    i64 q = 0;  // (q, r), 0 <= q < p
    i64 r = 1;

    i64 index() const { return p * r; }
    Cell basis_u() const { return {p, 0}; }
    Cell basis_v() const { return {q, r}; }

    friend bool operator==(const Lattice& a, const Lattice& b) = default;

    bool member(Cell v) const {
        if (v.y % r != 0) return false;
        i64 b = v.y / r;
        return (v.x - b * q) % p == 0;
    }

    // unique representative of v's coset inside [0,p) x [0,r)
    Cell reduce(Cell v) const {
        i64 j = floor_mod(v.y, r);
        i64 b = (v.y - j) / r;
        i64 i = floor_mod(v.x - b * q, p);
        return {i, j};
    }

    std::vector<Cell> fundamental_domain() const {
        std::vector<Cell> cells;
        cells.reserve(static_cast<std::size_t>(index()));
        for (i64 j = 0; j < r; ++j)
            for (i64 i = 0; i < p; ++i) cells.push_back({i, j});
        return cells;
    }
};

inline Lattice full_lattice() { return Lattice{1, 0, 1}; }

// Hermite normal form of the subgroup generated by `gens`.
// Throws NotFiniteIndex when the generators span a rank < 2 subgroup.
inline Lattice hnf(std::span<const Cell> gens) {
    // Reduce to a vector (q0, r) with r = gcd of y-components, then clear
    // the y of every generator against it and gcd the leftover x parts.
    i64 r = 0;
    Cell w{0, 0};
    for (Cell g : gens) {
        if (g.y == 0) continue;
        if (r == 0) {
            w = g.y > 0 ? g : -g;
            r = w.y;
        } else {
            // gcd step on y components keeping an explicit witness vector
            Cell a = w, b = g;
            while (b.y != 0) {
                i64 k = a.y / b.y;
                a = a - k * b;
                std::swap(a, b);
            }
            w = a.y > 0 ? a : -a;
            r = w.y;
        }
    }
    i64 p = 0;
    for (Cell g : gens) {
        Cell res = g;
        if (r != 0) res = g - (g.y / r) * w;  // g.y divisible by r = gcd
        p = std::gcd(p, std::abs(res.x));
    }
    if (p == 0 || r == 0) throw error(errc::not_finite_index, "generators span rank < 2");
    return Lattice{p, floor_mod(w.x, p), r};
}

inline Lattice hnf(std::initializer_list<Cell> gens) {
    return hnf(std::span<const Cell>(gens.begin(), gens.size()));
}

// All sublattices of index exactly N: (p, q, r) with p*r = N, 0 <= q < p.
// Count is sigma(N). Order: p ascending, then q.
inline std::vector<Lattice> enumerate_lattices(i64 n) {
    std::vector<Lattice> out;
    for (i64 p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        for (i64 q = 0; q < p; ++q) out.push_back(Lattice{p, q, n / p});
    }
    return out;
}

// Intersection of two finite-index sublattices, again in HNF.
inline Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    i64 p = std::lcm(a.p, b.p);
    // Smallest y > 0 carrying a vector (x, y) in both lattices: y must be a
    // multiple of lcm(r_a, r_b), and x must satisfy one congruence per side.
    i64 ry = std::lcm(a.r, b.r);
    for (i64 y = ry;; y += ry) {
        i64 xa = floor_mod((y / a.r) * a.q, a.p);
        i64 xb = floor_mod((y / b.r) * b.q, b.p);
        // solve x = xa (mod a.p), x = xb (mod b.p)
        i64 g = std::gcd(a.p, b.p);
        if ((xb - xa) % g != 0) continue;
        // CRT by scanning the smaller modulus class (indices are tiny here)
        i64 x = xa;
        while (floor_mod(x - xb, b.p) != 0) x += a.p;
        return Lattice{p, floor_mod(x, p), y};
    }
}

struct UnimodularMap {
    // row-major 2x2 integer matrix, |det| = 1
    i64 a = 1, b = 0, c = 0, d = 1;

    Cell apply(Cell v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    i64 det() const { return a * d - b * c; }

    UnimodularMap inverse() const {
        i64 dt = det();  // +-1, so adjugate / det stays integral
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend UnimodularMap operator*(const UnimodularMap& m, const UnimodularMap& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) = default;
};

inline Lattice transform(const UnimodularMap& t, const Lattice& l) {
    std::array<Cell, 2> gens = {t.apply(l.basis_u()), t.apply(l.basis_v())};
    return hnf(std::span<const Cell>(gens.data(), gens.size()));
}

// T in GL(2,Z) with T h = (m, 0), m = gcd(|hx|, |hy|) > 0. The first row is
// the Bezout pair with the smallest nonnegative leading coefficient, so the
// construction is reproducible.
inline std::pair<UnimodularMap, i64> gl2_normalize(Cell h) {
    if (h.x == 0 && h.y == 0) throw error(errc::zero_vector, "cannot normalize the zero vector");
    if (h.y == 0) {
        i64 s = h.x > 0 ? 1 : -1;
        return {UnimodularMap{s, 0, 0, 1}, std::abs(h.x)};
    }
    if (h.x == 0) {
        i64 s = h.y > 0 ? 1 : -1;
        return {UnimodularMap{0, s, 1, 0}, std::abs(h.y)};
    }
    i64 m = std::gcd(std::abs(h.x), std::abs(h.y));
    // extended Euclid: u*hx + v*hy = m
    i64 old_r = h.x, rr = h.y;
    i64 old_u = 1, u = 0;
    while (rr != 0) {
        i64 k = old_r / rr;
        old_r -= k * rr;
        std::swap(old_r, rr);
        old_u -= k * u;
        std::swap(old_u, u);
    }
    if (old_r < 0) old_u = -old_u;  // make the gcd positive
    i64 step = std::abs(h.y / m);
    i64 bu = floor_mod(old_u, step);  // smallest nonnegative first coefficient
    i64 bv = (m - bu * h.x) / h.y;
    UnimodularMap t{bu, bv, -h.y / m, h.x / m};
    return {t, m};
}

// Intersection over all pairs i<j of the subgroup generated by {h_i, h_j}.
// Requires m >= 2 vectors, pairwise non-proportional.
inline Lattice common_lattice(std::span<const Cell> hs) {
    if (hs.size() < 2) throw error(errc::too_few_vectors, "need at least two directions");
    std::optional<Lattice> acc;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (cross(hs[i], hs[j]) == 0)
                throw error(errc::proportional_vectors, "directions " + std::to_string(i) +
                                                            " and " + std::to_string(j) +
                                                            " are proportional");
            std::array<Cell, 2> pair = {hs[i], hs[j]};
            Lattice l = hnf(std::span<const Cell>(pair.data(), pair.size()));
            acc = acc ? lattice_intersect(*acc, l) : l;
        }
    }
    return *acc;
}

inline Lattice common_lattice(std::initializer_list<Cell> hs) {
    return common_lattice(std::span<const Cell>(hs.begin(), hs.size()));
}

// A periodic set Lambda (+) S: a lattice together with coset representatives
// drawn from its fundamental domain.
struct PeriodicSet {
    Lattice lattice;
    std::vector<Cell> reps;  // sorted, each inside the fundamental domain

    bool member(Cell v) const {
        Cell c = lattice.reduce(v);
        return std::binary_search(reps.begin(), reps.end(), c);
    }

    friend bool operator==(const PeriodicSet& a, const PeriodicSet& b) = default;
};

inline PeriodicSet make_periodic_set(const Lattice& l, std::span<const Cell> raw_reps) {
    std::vector<Cell> reps;
    reps.reserve(raw_reps.size());
    for (Cell c : raw_reps) reps.push_back(l.reduce(c));
    sort_cells(reps);
    return PeriodicSet{l, std::move(reps)};
}

inline PeriodicSet whole_plane() { return PeriodicSet{full_lattice(), {Cell{0, 0}}}; }

// Re-expresses a periodic set over a sublattice of its own lattice.
inline PeriodicSet refine(const PeriodicSet& s, const Lattice& sub) {
    std::vector<Cell> reps;
    for (Cell c : sub.fundamental_domain())
        if (s.member(c)) reps.push_back(c);
    return PeriodicSet{sub, std::move(reps)};
}

inline PeriodicSet transform(const UnimodularMap& t, const PeriodicSet& s) {
    Lattice l = transform(t, s.lattice);
    std::vector<Cell> reps;
    reps.reserve(s.reps.size());
    for (Cell c : s.reps) reps.push_back(l.reduce(t.apply(c)));
    sort_cells(reps);
    return PeriodicSet{l, std::move(reps)};
}

}  // namespace tilez
