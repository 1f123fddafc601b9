#pragma once

// Oriented graphs: cycles, paths and their Cartesian / strong products.
//
// Vertices are 0-based. A product G * H places vertex (a, x) at id a * |V(H)| + x,
// so the first factor indexes rows and the second indexes columns.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpq/errors.hpp"

namespace lpq {

using VertexId = std::size_t;
using VertexPair = std::pair<VertexId, VertexId>;

enum class ProductKind { Cartesian, Strong };
enum class FactorKind { Cycle, Path };

inline std::string_view to_string(ProductKind kind) {
    return kind == ProductKind::Cartesian ? "cartesian" : "strong";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view text) {
    if (text == "cartesian") return ProductKind::Cartesian;
    if (text == "strong") return ProductKind::Strong;
    return std::nullopt;
}

struct GridCoord {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// Coordinates of a product whose factors are both cycles or both paths.
struct GridShape {
    std::size_t rows = 0;
    std::size_t cols = 0;
    ProductKind kind = ProductKind::Cartesian;
    FactorKind factors = FactorKind::Cycle;

    [[nodiscard]] std::size_t size() const { return rows * cols; }
    [[nodiscard]] bool is_torus() const { return factors == FactorKind::Cycle; }

    [[nodiscard]] VertexId id(std::size_t i, std::size_t j) const { return i * cols + j; }
    [[nodiscard]] VertexId id(GridCoord c) const { return id(c.i, c.j); }
    [[nodiscard]] GridCoord coord(VertexId v) const { return {v / cols, v % cols}; }

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// An oriented graph: directed, no loops, no parallel edges, no digons.
///
/// Immutable once built; all validation happens in the constructor.
class Digraph {
public:
    Digraph(std::size_t vertex_count, std::vector<std::vector<VertexId>> out_edges,
            std::optional<GridShape> grid = std::nullopt,
            std::optional<FactorKind> line = std::nullopt)
        : out_(std::move(out_edges)), grid_(grid), line_(line) {
        if (vertex_count == 0) throw ConstraintError("graph must have at least one vertex");
        if (out_.size() != vertex_count)
            throw ConstraintError("adjacency list count does not match vertex count");
        if (grid_ && grid_->size() != vertex_count)
            throw ConstraintError("grid shape does not match vertex count");

        in_.resize(vertex_count);
        for (VertexId u = 0; u < vertex_count; ++u) {
            auto& outs = out_[u];
            std::sort(outs.begin(), outs.end());
            for (std::size_t t = 0; t < outs.size(); ++t) {
                const VertexId v = outs[t];
                if (v >= vertex_count) throw ConstraintError("edge endpoint out of range");
                if (v == u) throw ConstraintError("self-loop at vertex " + std::to_string(u));
                if (t > 0 && outs[t - 1] == v)
                    throw ConstraintError("parallel edge " + std::to_string(u) + "->" + std::to_string(v));
                in_[v].push_back(u);
            }
            edge_count_ += outs.size();
        }
        for (VertexId u = 0; u < vertex_count; ++u)
            for (VertexId v : out_[u])
                if (v < u && has_edge(v, u))
                    throw ConstraintError("digon between " + std::to_string(v) + " and " + std::to_string(u));
    }

    [[nodiscard]] std::size_t size() const { return out_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

    [[nodiscard]] std::span<const VertexId> out(VertexId v) const { return out_.at(v); }
    [[nodiscard]] std::span<const VertexId> in(VertexId v) const { return in_.at(v); }

    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const {
        const auto& outs = out_.at(u);
        return std::binary_search(outs.begin(), outs.end(), v);
    }

    /// Row/column metadata, present for products of two cycles or two paths.
    [[nodiscard]] const std::optional<GridShape>& grid() const { return grid_; }
    /// Set for a bare oriented cycle or path.
    [[nodiscard]] const std::optional<FactorKind>& line() const { return line_; }

private:
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t edge_count_ = 0;
    std::optional<GridShape> grid_;
    std::optional<FactorKind> line_;
};

inline Digraph oriented_cycle(std::size_t n) {
    if (n < 3) throw ConstraintError("oriented cycle needs n >= 3 (n = 2 would be a digon)");
    std::vector<std::vector<VertexId>> out(n);
    for (VertexId v = 0; v < n; ++v) out[v] = {(v + 1) % n};
    return Digraph(n, std::move(out), std::nullopt, FactorKind::Cycle);
}

inline Digraph oriented_path(std::size_t n) {
    if (n == 0) throw ConstraintError("oriented path needs n >= 1");
    std::vector<std::vector<VertexId>> out(n);
    for (VertexId v = 0; v + 1 < n; ++v) out[v] = {v + 1};
    return Digraph(n, std::move(out), std::nullopt, FactorKind::Path);
}

/// Cartesian or strong product of two oriented graphs.
///
/// Cartesian edges: (a,x)->(b,x) for a->b in G, and (a,x)->(a,y) for x->y in H.
/// Strong adds (a,x)->(b,y) when a->b in G and x->y in H.
inline Digraph product(ProductKind kind, const Digraph& g, const Digraph& h) {
    const std::size_t rows = g.size();
    const std::size_t cols = h.size();
    auto id = [cols](VertexId a, VertexId x) { return a * cols + x; };

    std::vector<std::vector<VertexId>> out(rows * cols);
    for (VertexId a = 0; a < rows; ++a) {
        for (VertexId x = 0; x < cols; ++x) {
            auto& outs = out[id(a, x)];
            for (VertexId b : g.out(a)) outs.push_back(id(b, x));
            for (VertexId y : h.out(x)) outs.push_back(id(a, y));
            if (kind == ProductKind::Strong)
                for (VertexId b : g.out(a))
                    for (VertexId y : h.out(x)) outs.push_back(id(b, y));
        }
    }

    std::optional<GridShape> grid;
    if (g.line() && h.line() && *g.line() == *h.line())
        grid = GridShape{rows, cols, kind, *g.line()};
    return Digraph(rows * cols, std::move(out), grid);
}

/// C_m * C_n with the first factor as rows.
inline Digraph torus(ProductKind kind, std::size_t m, std::size_t n) {
    return product(kind, oriented_cycle(m), oriented_cycle(n));
}

/// P_m * P_n with the first factor as rows.
inline Digraph path_grid(ProductKind kind, std::size_t m, std::size_t n) {
    return product(kind, oriented_path(m), oriented_path(n));
}

/// All unordered pairs {u, w} (u < w) joined by an edge in either direction.
inline std::vector<VertexPair> edge_pairs(const Digraph& g) {
    std::vector<VertexPair> pairs;
    pairs.reserve(g.edge_count());
    for (VertexId u = 0; u < g.size(); ++u)
        for (VertexId v : g.out(u)) pairs.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

/// All unordered pairs {u, w} (u < w) joined by a directed path u -> x -> w or w -> x -> u.
inline std::vector<VertexPair> two_step_pairs(const Digraph& g) {
    std::vector<VertexPair> pairs;
    for (VertexId x = 0; x < g.size(); ++x)
        for (VertexId u : g.in(x))
            for (VertexId w : g.out(x))
                if (u != w) pairs.emplace_back(std::min(u, w), std::max(u, w));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

}  // namespace lpq
