#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpq/errors.hpp"
#include "lpq/graph.hpp"

namespace lpq {

/// Minimum separations: p across a directed edge, q across a directed two-step pair.
struct ConstraintParams {
    int p = 2;
    int q = 1;

    friend bool operator==(const ConstraintParams&, const ConstraintParams&) = default;
};

/// A total map vertex -> color in {0, ..., k_budget}.
///
/// The budget is part of the value: a 5-labeling need not use color 5.
class Labeling {
public:
    Labeling(std::vector<int> colors, int k_budget) : colors_(std::move(colors)), k_(k_budget) {
        if (k_ < 0) throw InputError("labeling budget must be nonnegative");
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] < 0 || colors_[v] > k_)
                throw InputError("color " + std::to_string(colors_[v]) + " at vertex " + std::to_string(v) +
                                 " is outside {0.." + std::to_string(k_) + "}");
    }

    [[nodiscard]] std::size_t size() const { return colors_.size(); }
    [[nodiscard]] int k_budget() const { return k_; }
    [[nodiscard]] std::span<const int> colors() const { return colors_; }
    [[nodiscard]] int operator[](VertexId v) const { return colors_.at(v); }
    [[nodiscard]] int max_color() const {
        return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
    }

    /// Same colors under a different budget; throws if a color would exceed it.
    [[nodiscard]] Labeling with_budget(int k) const { return Labeling(colors_, k); }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

enum class ViolationKind { EdgeGap, TwoStepGap };

inline std::string_view to_string(ViolationKind kind) {
    return kind == ViolationKind::EdgeGap ? "edge" : "two-step";
}

struct Violation {
    ViolationKind kind = ViolationKind::EdgeGap;
    VertexPair pair;
    std::pair<int, int> labels;
    int required = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// One separation requirement between an unordered pair.
struct Constraint {
    VertexId u = 0;
    VertexId v = 0;
    int gap = 0;
    ViolationKind kind = ViolationKind::EdgeGap;
};

/// Every pairwise requirement of an L(p,q)-labeling of g, sorted by (u, v), u < v.
///
/// A pair that is both an edge and a two-step pair appears once, as an edge
/// constraint with gap max(p, q).
inline std::vector<Constraint> build_constraints(const Digraph& g, ConstraintParams params) {
    if (params.p < 0 || params.q < 0) throw InputError("p and q must be nonnegative");
    const auto edges = edge_pairs(g);
    const auto steps = two_step_pairs(g);

    std::vector<Constraint> out;
    out.reserve(edges.size() + steps.size());
    std::size_t e = 0;
    std::size_t s = 0;
    while (e < edges.size() || s < steps.size()) {
        if (s == steps.size() || (e < edges.size() && edges[e] < steps[s])) {
            out.push_back({edges[e].first, edges[e].second, params.p, ViolationKind::EdgeGap});
            ++e;
        } else if (e == edges.size() || steps[s] < edges[e]) {
            out.push_back({steps[s].first, steps[s].second, params.q, ViolationKind::TwoStepGap});
            ++s;
        } else {
            out.push_back({edges[e].first, edges[e].second, std::max(params.p, params.q), ViolationKind::EdgeGap});
            ++e;
            ++s;
        }
    }
    return out;
}

/// Checks f against precomputed constraints; violations come out in (u, v) order.
inline std::vector<Violation> validate(std::span<const Constraint> constraints, const Labeling& f) {
    std::vector<Violation> found;
    for (const auto& c : constraints) {
        const int a = f[c.u];
        const int b = f[c.v];
        if (std::abs(a - b) < c.gap) found.push_back({c.kind, {c.u, c.v}, {a, b}, c.gap});
    }
    return found;
}

/// Empty result iff f is a k_budget-L(p,q)-labeling of g.
inline std::vector<Violation> validate(const Digraph& g, const Labeling& f, ConstraintParams params = {}) {
    if (f.size() != g.size())
        throw InputError("labeling has " + std::to_string(f.size()) + " colors but graph has " +
                         std::to_string(g.size()) + " vertices");
    return validate(build_constraints(g, params), f);
}

inline bool is_valid(const Digraph& g, const Labeling& f, ConstraintParams params = {}) {
    return validate(g, f, params).empty();
}

/// c -> k - c. Maps valid labelings to valid labelings.
inline Labeling complement(const Labeling& f, int k) {
    std::vector<int> out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f[v] > k) throw InputError("cannot complement: color " + std::to_string(f[v]) + " exceeds k");
        out[v] = k - f[v];
    }
    return Labeling(std::move(out), k);
}

inline const GridShape& require_torus(const Digraph& g) {
    if (!g.grid() || !g.grid()->is_torus()) throw InputError("graph is not a product of two cycles");
    return *g.grid();
}

/// f(i, j) == f(i+1 mod m, j-1 mod n) at every cell.
inline bool is_diagonal(const Digraph& g, const Labeling& f) {
    const auto& shape = require_torus(g);
    if (f.size() != g.size()) throw InputError("labeling size does not match graph");
    const std::size_t m = shape.rows;
    const std::size_t n = shape.cols;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f[shape.id(i, j)] != f[shape.id((i + 1) % m, (j + n - 1) % n)]) return false;
    return true;
}

struct ReducedLabeling {
    Digraph graph;
    Labeling labeling;
};

/// Restricts a diagonal labeling of C_m * C_n to rows 0..m-n-1, giving one of C_{m-n} * C_n.
///
/// Requires m >= n + 3. The result is re-validated; a failure there throws InternalError.
inline ReducedLabeling reduce_rows(const Digraph& g, const Labeling& f, ConstraintParams params = {}) {
    const auto& shape = require_torus(g);
    const std::size_t m = shape.rows;
    const std::size_t n = shape.cols;
    if (m < n + 3)
        throw InputError("reduce_rows needs m >= n + 3 (got m = " + std::to_string(m) + ", n = " +
                         std::to_string(n) + ")");
    if (!is_diagonal(g, f)) throw InputError("reduce_rows needs a diagonal labeling");
    if (!is_valid(g, f, params)) throw InputError("reduce_rows needs a valid labeling");

    const auto first = f.colors().begin();
    Labeling restricted(std::vector<int>(first, first + static_cast<std::ptrdiff_t>((m - n) * n)), f.k_budget());
    Digraph smaller = torus(shape.kind, m - n, n);
    if (!is_valid(smaller, restricted, params) || !is_diagonal(smaller, restricted))
        throw InternalError("row reduction produced an invalid labeling");
    return {std::move(smaller), std::move(restricted)};
}

}  // namespace lpq
