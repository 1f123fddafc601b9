#pragma once

// Exhaustive backtracking for k-L(p,q)-labelings.
//
// Vertices are assigned in index order (row-major for products) and colors are
// tried in ascending order, so the sequential search meets labelings in
// lexicographic order. Forward checking keeps a bitmask domain per vertex and
// prunes it whenever a constrained earlier vertex is colored.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lpq/errors.hpp"
#include "lpq/graph.hpp"
#include "lpq/labeling.hpp"

namespace lpq {

struct SolveBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    std::optional<std::chrono::milliseconds> time_cap;
};

struct SolveOptions {
    // Restrict vertex 0 to colors <= k/2 (sound by complement symmetry). Only
    // honored by exists_labeling / exact_lambda; the witness is then no longer
    // guaranteed to be the lexicographically least one.
    bool symmetry_breaking = false;
    // Split the colors of vertex 0 across worker threads. Answers are unchanged.
    // Enumeration visits labelings in an unspecified order in this mode.
    bool parallel = false;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct LambdaWitness {
    int lambda = 0;
    Labeling witness;
};

inline constexpr int kMaxSolverBudget = 62;

namespace detail {

class NodeMeter {
public:
    explicit NodeMeter(const SolveBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {
        if (budget.max_nodes == 0) throw InputError("node budget must be positive");
        if (budget.time_cap && budget.time_cap->count() <= 0) throw InputError("time cap must be positive");
    }

    // Adds a batch of visited nodes; throws ResourceError once a cap is crossed.
    void charge(std::uint64_t batch) {
        const auto total = nodes_.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (total > budget_.max_nodes)
            throw ResourceError("node budget of " + std::to_string(budget_.max_nodes) + " exhausted", total);
        if (budget_.time_cap && std::chrono::steady_clock::now() - start_ > *budget_.time_cap)
            throw ResourceError("time cap exhausted", total);
    }

    [[nodiscard]] std::uint64_t nodes() const { return nodes_.load(); }

private:
    SolveBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
};

// Colors within distance < gap of c, as a bitmask over {0..k}.
inline std::uint64_t forbidden_mask(int c, int gap, int k) {
    if (gap <= 0) return 0;
    const int lo = std::max(0, c - gap + 1);
    const int hi = std::min(k, c + gap - 1);
    const std::uint64_t upto_hi = (hi >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (hi + 1)) - 1);
    return upto_hi & ~((std::uint64_t{1} << lo) - 1);
}

struct Partner {
    VertexId w;
    int gap;
};

// Constraints from each vertex to later vertices, with positive gaps only.
inline std::vector<std::vector<Partner>> forward_partners(const Digraph& g, ConstraintParams params) {
    std::vector<std::vector<Partner>> fwd(g.size());
    for (const auto& c : build_constraints(g, params))
        if (c.gap > 0) fwd[c.u].push_back({c.v, c.gap});
    return fwd;
}

class Search {
public:
    Search(const std::vector<std::vector<Partner>>& forward, int k, NodeMeter& meter,
           const std::atomic<bool>* cancel = nullptr)
        : forward_(forward), k_(k), meter_(meter), cancel_(cancel),
          domains_(forward.size(), k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (k + 1)) - 1),
          colors_(forward.size(), -1) {}

    void restrict_root(std::uint64_t mask) { domains_.at(0) &= mask; }

    // Calls leaf(colors) for each complete labeling in lexicographic order until it
    // returns true. Returns true iff some leaf stopped the search.
    template <class Leaf>
    bool run(Leaf&& leaf) {
        const bool stopped = descend(0, leaf);
        meter_.charge(pending_);
        pending_ = 0;
        return stopped;
    }

    [[nodiscard]] bool cancelled() const { return cancelled_; }

private:
    template <class Leaf>
    bool descend(std::size_t v, Leaf& leaf) {
        if (v == colors_.size()) return leaf(std::span<const int>(colors_));
        std::uint64_t dom = domains_[v];
        while (dom) {
            const int c = std::countr_zero(dom);
            dom &= dom - 1;
            if (++pending_ == kBatch) {
                meter_.charge(pending_);
                pending_ = 0;
                if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
                    cancelled_ = true;
                    return true;
                }
            }
            colors_[v] = c;
            const std::size_t mark = trail_.size();
            bool alive = true;
            for (const auto& [w, gap] : forward_[v]) {
                const std::uint64_t before = domains_[w];
                const std::uint64_t after = before & ~forbidden_mask(c, gap, k_);
                if (after != before) {
                    trail_.emplace_back(w, before);
                    domains_[w] = after;
                    if (after == 0) {
                        alive = false;
                        break;
                    }
                }
            }
            const bool stop = alive && descend(v + 1, leaf);
            while (trail_.size() > mark) {
                domains_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
            colors_[v] = -1;
            if (stop) return true;
        }
        return false;
    }

    static constexpr std::uint64_t kBatch = 4096;

    const std::vector<std::vector<Partner>>& forward_;
    int k_;
    NodeMeter& meter_;
    const std::atomic<bool>* cancel_;
    std::vector<std::uint64_t> domains_;
    std::vector<int> colors_;
    std::vector<std::pair<VertexId, std::uint64_t>> trail_;
    std::uint64_t pending_ = 0;
    bool cancelled_ = false;
};

inline void check_budget_k(int k) {
    if (k < 0) throw InputError("k must be nonnegative");
    if (k > kMaxSolverBudget)
        throw InputError("k = " + std::to_string(k) + " exceeds the solver limit of " +
                         std::to_string(kMaxSolverBudget));
}

inline unsigned worker_count(const SolveOptions& options, std::size_t tasks) {
    unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, tasks));
}

// Runs fn(task) for task in [0, tasks) on a small pool; rethrows the first failure.
template <class Fn>
void run_pool(unsigned workers, std::size_t tasks, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks;) {
            try {
                fn(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

inline std::vector<int> root_colors(int k, bool symmetry_breaking) {
    std::vector<int> out;
    for (int c = 0; c <= (symmetry_breaking ? k / 2 : k); ++c) out.push_back(c);
    return out;
}

}  // namespace detail

/// Some k-L(p,q)-labeling of g, or nullopt when the search space is exhausted.
///
/// With default options the witness is the lexicographically least one.
/// Throws ResourceError if the budget runs out first.
inline std::optional<Labeling> exists_labeling(const Digraph& g, int k, ConstraintParams params = {},
                                               const SolveBudget& budget = {}, const SolveOptions& options = {}) {
    detail::check_budget_k(k);
    const auto forward = detail::forward_partners(g, params);
    detail::NodeMeter meter(budget);
    const auto roots = detail::root_colors(k, options.symmetry_breaking);

    if (!options.parallel) {
        detail::Search search(forward, k, meter);
        std::uint64_t root_mask = 0;
        for (int c : roots) root_mask |= std::uint64_t{1} << c;
        search.restrict_root(root_mask);
        std::optional<Labeling> found;
        search.run([&](std::span<const int> colors) {
            found.emplace(std::vector<int>(colors.begin(), colors.end()), k);
            return true;
        });
        return found;
    }

    // One task per root color. A success at color c cancels every task with a larger root.
    std::vector<std::optional<Labeling>> found(roots.size());
    std::vector<std::atomic<bool>> cancel(roots.size());
    detail::run_pool(detail::worker_count(options, roots.size()), roots.size(), [&](std::size_t t) {
        if (cancel[t].load()) return;
        detail::Search search(forward, k, meter, &cancel[t]);
        search.restrict_root(std::uint64_t{1} << roots[t]);
        search.run([&](std::span<const int> colors) {
            found[t].emplace(std::vector<int>(colors.begin(), colors.end()), k);
            for (std::size_t later = t + 1; later < roots.size(); ++later) cancel[later].store(true);
            return true;
        });
    });
    for (auto& f : found)
        if (f) return std::move(f);
    return std::nullopt;
}

/// Calls visitor(colors) once per valid k-labeling; returns how many there were.
///
/// No symmetry breaking is ever applied here. Sequential mode visits in
/// lexicographic order; parallel mode serializes visitor calls but not their order.
/// On budget exhaustion the ResourceError carries the partial count.
template <class Visitor>
std::uint64_t enumerate_labelings(const Digraph& g, int k, ConstraintParams params, Visitor&& visitor,
                                  const SolveBudget& budget = {}, const SolveOptions& options = {}) {
    detail::check_budget_k(k);
    const auto forward = detail::forward_partners(g, params);
    detail::NodeMeter meter(budget);
    std::atomic<std::uint64_t> count{0};

    try {
        if (!options.parallel) {
            detail::Search search(forward, k, meter);
            search.run([&](std::span<const int> colors) {
                visitor(colors);
                count.fetch_add(1, std::memory_order_relaxed);
                return false;
            });
        } else {
            std::mutex visit_mutex;
            const auto roots = detail::root_colors(k, false);
            detail::run_pool(detail::worker_count(options, roots.size()), roots.size(), [&](std::size_t t) {
                detail::Search search(forward, k, meter);
                search.restrict_root(std::uint64_t{1} << roots[t]);
                search.run([&](std::span<const int> colors) {
                    std::lock_guard lock(visit_mutex);
                    visitor(colors);
                    count.fetch_add(1, std::memory_order_relaxed);
                    return false;
                });
            });
        }
    } catch (ResourceError& e) {
        e.partial_count = count.load();
        throw;
    }
    return count.load();
}

inline std::uint64_t count_labelings(const Digraph& g, int k, ConstraintParams params = {},
                                     const SolveBudget& budget = {}, const SolveOptions& options = {}) {
    return enumerate_labelings(g, k, params, [](std::span<const int>) {}, budget, options);
}

/// Smallest k admitting a k-L(p,q)-labeling, found by trying k = 0, 1, 2, ...
///
/// The budget applies to each k separately. On exhaustion the ResourceError
/// reports the last k that was fully resolved.
inline LambdaWitness exact_lambda(const Digraph& g, ConstraintParams params = {}, const SolveBudget& budget = {},
                                  const SolveOptions& options = {}) {
    // Spacing every vertex max(p, q) apart always works.
    const long long trivial = static_cast<long long>(std::max(params.p, params.q)) * static_cast<long long>(g.size() - 1);
    const int k_max = static_cast<int>(std::min<long long>(trivial, kMaxSolverBudget));
    for (int k = 0; k <= k_max; ++k) {
        try {
            if (auto witness = exists_labeling(g, k, params, budget, options))
                return {k, std::move(*witness)};
        } catch (ResourceError& e) {
            if (k > 0) e.last_resolved_k = k - 1;
            throw;
        }
    }
    throw InputError("lambda exceeds the solver limit of " + std::to_string(kMaxSolverBudget));
}

}  // namespace lpq
