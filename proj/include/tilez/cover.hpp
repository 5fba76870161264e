#pragma once

// Generalized exact cover: primary columns must be covered exactly once,
// secondary columns at most once. Dancing-links search with a fixed,
// reproducible policy: branch on the primary column with the fewest
// remaining candidate rows (ties to the lowest column index) and try its
// rows in ascending row order.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tilez/error.hpp"

namespace tilez {

struct CoverInstance {
    int n_primary = 0;
    int n_secondary = 0;
    std::vector<std::vector<int>> rows;  // column indices; secondary are >= n_primary

    int n_columns() const { return n_primary + n_secondary; }
};

struct Solution {
    std::vector<int> row_indices;  // sorted ascending

    friend bool operator==(const Solution& a, const Solution& b) = default;
};

namespace detail {

inline void validate_instance(const CoverInstance& inst) {
    if (inst.n_primary < 0 || inst.n_secondary < 0)
        throw error(errc::invalid_instance, "negative column count");
    for (std::size_t ri = 0; ri < inst.rows.size(); ++ri) {
        const auto& row = inst.rows[ri];
        if (row.empty())
            throw error(errc::invalid_instance, "row " + std::to_string(ri) + " is empty");
        std::vector<bool> seen(static_cast<std::size_t>(inst.n_columns()), false);
        for (int c : row) {
            if (c < 0 || c >= inst.n_columns())
                throw error(errc::invalid_instance,
                            "row " + std::to_string(ri) + " has out-of-range column");
            if (seen[static_cast<std::size_t>(c)])
                throw error(errc::invalid_instance,
                            "row " + std::to_string(ri) + " repeats a column");
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
}

// Torus and box instances stay small, so a straightforward node pool with
// index links is plenty.
class DlxSolver {
public:
    explicit DlxSolver(const CoverInstance& inst) {
        int nc = inst.n_columns();
        // node 0..nc-1: column headers; node nc: root of the primary header list
        root_ = nc;
        up_.resize(static_cast<std::size_t>(nc) + 1);
        down_.resize(static_cast<std::size_t>(nc) + 1);
        left_.resize(static_cast<std::size_t>(nc) + 1);
        right_.resize(static_cast<std::size_t>(nc) + 1);
        col_.resize(static_cast<std::size_t>(nc) + 1);
        count_.assign(static_cast<std::size_t>(nc), 0);
        for (int c = 0; c <= nc; ++c) {
            up_[c] = down_[c] = c;
            left_[c] = right_[c] = c;
            col_[c] = c;
        }
        // only primary headers join the root list; secondary stay unlinked
        int prev = root_;
        for (int c = 0; c < inst.n_primary; ++c) {
            left_[c] = prev;
            right_[prev] = c;
            prev = c;
        }
        right_[prev] = root_;
        left_[root_] = prev;

        for (std::size_t ri = 0; ri < inst.rows.size(); ++ri) {
            int first = -1;
            for (int c : inst.rows[ri]) {
                int node = static_cast<int>(up_.size());
                up_.push_back(up_[c]);
                down_.push_back(c);
                col_.push_back(c);
                row_of_.push_back(static_cast<int>(ri));
                down_[up_[c]] = node;
                up_[c] = node;
                ++count_[static_cast<std::size_t>(c)];
                if (first < 0) {
                    first = node;
                    left_.push_back(node);
                    right_.push_back(node);
                } else {
                    left_.push_back(left_[first]);
                    right_.push_back(first);
                    right_[left_[first]] = node;
                    left_[first] = node;
                }
            }
        }
    }

    std::optional<std::vector<int>> solve() {
        std::vector<int> chosen;
        if (search(chosen)) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
        return std::nullopt;
    }

private:
    int pick_column() const {
        int best = -1, best_count = -1;
        for (int c = right_[root_]; c != root_; c = right_[c]) {
            int k = count_[static_cast<std::size_t>(c)];
            if (best < 0 || k < best_count) {
                best = c;
                best_count = k;
            }
        }
        return best;
    }

    void cover(int c) {
        left_[right_[c]] = left_[c];
        right_[left_[c]] = right_[c];
        for (int i = down_[c]; i != c; i = down_[i]) {
            for (int j = right_[i]; j != i; j = right_[j]) {
                up_[down_[j]] = up_[j];
                down_[up_[j]] = down_[j];
                --count_[static_cast<std::size_t>(col_[j])];
            }
        }
    }

    void uncover(int c) {
        for (int i = up_[c]; i != c; i = up_[i]) {
            for (int j = left_[i]; j != i; j = left_[j]) {
                ++count_[static_cast<std::size_t>(col_[j])];
                up_[down_[j]] = j;
                down_[up_[j]] = j;
            }
        }
        left_[right_[c]] = c;
        right_[left_[c]] = c;
    }

    bool search(std::vector<int>& chosen) {
        int c = pick_column();
        if (c < 0) return true;  // no primary column left uncovered
        if (count_[static_cast<std::size_t>(c)] == 0) return false;
        cover(c);
        for (int i = down_[c]; i != c; i = down_[i]) {
            chosen.push_back(row_of_[static_cast<std::size_t>(i - n_header_nodes())]);
            for (int j = right_[i]; j != i; j = right_[j]) cover(col_[j]);
            if (search(chosen)) return true;
            for (int j = left_[i]; j != i; j = left_[j]) uncover(col_[j]);
            chosen.pop_back();
        }
        uncover(c);
        return false;
    }

    int n_header_nodes() const { return root_ + 1; }

    int root_;
    std::vector<int> up_, down_, left_, right_, col_;
    std::vector<int> count_;   // per column header
    std::vector<int> row_of_;  // per non-header node
};

}  // namespace detail

// First solution under the deterministic policy, or nullopt.
inline std::optional<Solution> solve_cover(const CoverInstance& inst) {
    detail::validate_instance(inst);
    detail::DlxSolver solver(inst);
    if (auto rows = solver.solve()) return Solution{std::move(*rows)};
    return std::nullopt;
}

// Independent counting pass; shares nothing with the search.
inline bool check_solution(const CoverInstance& inst, const Solution& sol) {
    std::vector<int> covered(static_cast<std::size_t>(inst.n_columns()), 0);
    for (int ri : sol.row_indices) {
        if (ri < 0 || static_cast<std::size_t>(ri) >= inst.rows.size()) return false;
        for (int c : inst.rows[static_cast<std::size_t>(ri)])
            ++covered[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < inst.n_primary; ++c)
        if (covered[static_cast<std::size_t>(c)] != 1) return false;
    for (int c = inst.n_primary; c < inst.n_columns(); ++c)
        if (covered[static_cast<std::size_t>(c)] > 1) return false;
    return true;
}

}  // namespace tilez
