#pragma once

// The decidability corollary as a program. At dovetail step t, Procedure A
// tries every lattice of index t*|F| and Procedure B tries box radius t;
// the first definitive result wins. The two outcomes are mutually
// exclusive (a periodic tiling induces a packing of every box), and both
// procedures scan their parameter in ascending order, so the verdict and
// certificate are schedule-independent; only wall clock varies.

#include <atomic>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>

#include "tilez/boxsearch.hpp"
#include "tilez/line.hpp"
#include "tilez/oracle.hpp"
#include "tilez/torus.hpp"

namespace tilez {

struct Inconclusive {
    i64 index_reached = 0;  // largest lattice index attempted
    i64 box_reached = -1;   // largest box radius attempted

    friend bool operator==(const Inconclusive& a, const Inconclusive& b) = default;
};

struct Verdict {
    std::variant<PeriodicTiling, ObstructionCertificate, Inconclusive> value;

    bool tiles() const { return std::holds_alternative<PeriodicTiling>(value); }
    bool does_not_tile() const { return std::holds_alternative<ObstructionCertificate>(value); }
    bool inconclusive() const { return std::holds_alternative<Inconclusive>(value); }

    const PeriodicTiling& tiling() const { return std::get<PeriodicTiling>(value); }
    const ObstructionCertificate& obstruction() const {
        return std::get<ObstructionCertificate>(value);
    }
    const Inconclusive& budget_spent() const { return std::get<Inconclusive>(value); }

    friend bool operator==(const Verdict& a, const Verdict& b) = default;
};

struct Schedule {
    // per round: a steps of Procedure A, then b steps of Procedure B
    int a = 1;
    int b = 1;
    std::string text = "alternate";
};

// "alternate" or "A:B" with positive integer step counts.
inline std::optional<Schedule> parse_schedule(const std::string& text) {
    if (text == "alternate") return Schedule{1, 1, text};
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
        std::size_t pos_a = 0, pos_b = 0;
        int a = std::stoi(text.substr(0, colon), &pos_a);
        int b = std::stoi(text.substr(colon + 1), &pos_b);
        if (pos_a != colon || pos_b != text.size() - colon - 1) return std::nullopt;
        if (a < 1 || b < 1) return std::nullopt;
        return Schedule{a, b, text};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct Budget {
    i64 max_index = 120;
    i64 max_box = 8;
    Schedule schedule;
    int threads = 1;
};

namespace detail {

inline std::optional<PeriodicTiling> torus_step(const Tile& f, i64 n,
                                                const std::atomic<bool>* cancel) {
    for (const Lattice& l : enumerate_lattices(n)) {
        if (cancel && cancel->load(std::memory_order_relaxed)) return std::nullopt;
        if (auto pt = solve_torus(f, l)) return pt;
    }
    return std::nullopt;
}

inline Verdict decide_sequential(const Tile& f, const Budget& budget) {
    i64 step = static_cast<i64>(f.size());
    i64 next_index = step;  // Procedure A position
    i64 next_box = 1;       // Procedure B position
    Inconclusive spent{0, -1};
    // radius 0 costs nothing and catches nothing a later radius would not,
    // but keeps the "least failing radius" contract exact
    if (budget.max_box >= 0) {
        if (!coverable(f, 0)) return Verdict{ObstructionCertificate{f, 0, kBoxSearchPolicy}};
        spent.box_reached = 0;
    }
    while (true) {
        bool progressed = false;
        for (int i = 0; i < budget.schedule.a && next_index <= budget.max_index; ++i) {
            if (auto pt = torus_step(f, next_index, nullptr)) return Verdict{*pt};
            spent.index_reached = next_index;
            next_index += step;
            progressed = true;
        }
        for (int i = 0; i < budget.schedule.b && next_box <= budget.max_box; ++i) {
            if (!coverable(f, next_box))
                return Verdict{ObstructionCertificate{f, next_box, kBoxSearchPolicy}};
            spent.box_reached = next_box;
            ++next_box;
            progressed = true;
        }
        if (!progressed) return Verdict{spent};
    }
}

inline Verdict decide_parallel(const Tile& f, const Budget& budget) {
    std::atomic<bool> cancel{false};
    std::optional<PeriodicTiling> a_result;
    std::optional<ObstructionCertificate> b_result;
    Inconclusive spent{0, -1};

    std::thread worker_a([&] {
        i64 step = static_cast<i64>(f.size());
        for (i64 n = step; n <= budget.max_index; n += step) {
            if (cancel.load(std::memory_order_relaxed)) return;
            if (auto pt = torus_step(f, n, &cancel)) {
                a_result = std::move(pt);
                cancel.store(true, std::memory_order_relaxed);
                return;
            }
            spent.index_reached = n;
        }
    });
    std::thread worker_b([&] {
        for (i64 n = 0; n <= budget.max_box; ++n) {
            if (cancel.load(std::memory_order_relaxed)) return;
            if (!coverable(f, n)) {
                b_result = ObstructionCertificate{f, n, kBoxSearchPolicy};
                cancel.store(true, std::memory_order_relaxed);
                return;
            }
            spent.box_reached = n;
        }
    });
    worker_a.join();
    worker_b.join();

    // the definitive result (if any) is unique, so the merge is trivial;
    // cancel is only ever raised together with a result, so reaching this
    // point means both workers exhausted their budgets
    if (a_result) return Verdict{std::move(*a_result)};
    if (b_result) return Verdict{std::move(*b_result)};
    return Verdict{spent};
}

}  // namespace detail

inline Verdict decide(const Tile& f, const Budget& budget = Budget{}) {
    if (budget.threads >= 2 && budget.max_index >= static_cast<i64>(f.size()) &&
        budget.max_box >= 0)
        return detail::decide_parallel(f, budget);
    return detail::decide_sequential(f, budget);
}

// Certificate verification. Never touches solver caches: periodic
// certificates are recounted directly and obstruction certificates are
// re-searched by the independent naive packer.
inline bool verify(const Tile& f, const Verdict& verdict) {
    if (verdict.inconclusive())
        throw error(errc::not_verifiable, "inconclusive verdicts carry no certificate");
    if (verdict.tiles()) return check_periodic(f, verdict.tiling());
    const ObstructionCertificate& oc = verdict.obstruction();
    if (!(oc.tile == f)) return false;
    return !oracle::naive_box_coverable(f, oc.radius);
}

}  // namespace tilez
