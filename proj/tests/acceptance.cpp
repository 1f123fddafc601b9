// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lpq/graph.hpp"
#include "lpq/labeling.hpp"
#include "lpq/patterns.hpp"
#include "lpq/solver.hpp"
#include "lpq/theorems.hpp"
#include "oracles.hpp"

using namespace lpq;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kLiftSeconds = 1.0;
constexpr double kCartesianLemmaSeconds = 5.0;
constexpr double kStrongLemmaSeconds = 600.0;
constexpr double kPeriodicitySeconds = 30.0;
constexpr double kExactLambdaSeconds = 300.0;
constexpr double kZeroCountSeconds = 120.0;
constexpr double kSemigroupSeconds = 1.0;
constexpr int kSemigroupLimit = 500;
constexpr int kNaiveMaxVertices = 9;
constexpr int kNaiveMaxK = 4;
constexpr std::size_t kLiftMaxSide = 56;
constexpr std::size_t kReduceMaxSide = 30;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!r.pass) ++failures;
    std::printf("[%s] %2d %s (%.3f s) %s\n", r.pass ? "PASS" : "FAIL", id, title, secs, r.detail.c_str());
    std::fflush(stdout);
}

template <class F>
double timed(F&& f) {
    const auto start = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double secs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", secs);
    return buf;
}

Outcome lift_check(ProductKind kind, std::size_t m, std::size_t n, const Pattern& pattern, int budget) {
    bool ok = false;
    const double secs = timed([&] {
        const auto g = torus(kind, m, n);
        const auto f = lift_diagonal(pattern, m, n).with_budget(budget);
        ok = validate(g, f).empty();
    });
    return {ok && secs < kLiftSeconds,
            std::string(to_string(kind)) + " " + std::to_string(m) + "x" + std::to_string(n) + " pattern " +
                pattern.digits() + " k=" + std::to_string(budget) + (ok ? " valid " : " INVALID ") + fmt(secs)};
}

std::vector<Digraph> small_graphs() {
    std::vector<Digraph> out;
    for (std::size_t n = 3; n <= kNaiveMaxVertices; ++n) out.push_back(oriented_cycle(n));
    for (std::size_t n = 1; n <= kNaiveMaxVertices; ++n) out.push_back(oriented_path(n));
    for (auto kind : {ProductKind::Cartesian, ProductKind::Strong}) {
        for (std::size_t a = 1; a <= kNaiveMaxVertices; ++a)
            for (std::size_t b = 1; a * b <= kNaiveMaxVertices; ++b) {
                out.push_back(path_grid(kind, a, b));
                if (a >= 3) out.push_back(product(kind, oriented_cycle(a), oriented_path(b)));
                if (b >= 3) out.push_back(product(kind, oriented_path(a), oriented_cycle(b)));
                if (a >= 3 && b >= 3) out.push_back(torus(kind, a, b));
            }
    }
    return out;
}

std::vector<Pattern> sample_patterns(std::size_t len, std::mt19937& rng) {
    std::vector<Pattern> out;
    out.push_back(l21_cycle_pattern(static_cast<int>(len)));
    if (semigroup_decompose(static_cast<long long>(len), 7, 8))
        out.push_back(concatenated_strong_pattern(static_cast<int>(len)));
    const std::size_t base = out.size();
    for (std::size_t b = 0; b < base; ++b) out.push_back(out[b].rotated(len / 2));
    std::uniform_int_distribution<int> color(0, 7);
    std::uniform_int_distribution<std::size_t> where(0, len - 1);
    for (std::size_t b = 0; b < base; ++b)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> g(out[b].colors().begin(), out[b].colors().end());
            g[where(rng)] = color(rng);
            out.emplace_back(g);
        }
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> g(len);
        for (auto& c : g) c = color(rng);
        out.emplace_back(g);
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "cartesian block-pattern lifts", [] {
        Outcome all;
        for (auto [m, n] : {std::pair<std::size_t, std::size_t>{40, 45}, {42, 42}, {55, 40}}) {
            const auto r = lift_check(ProductKind::Cartesian, m, n,
                                      l21_cycle_pattern(static_cast<int>(std::gcd(m, n))), 4);
            all.pass = all.pass && r.pass;
            all.detail += "[" + r.detail + "] ";
        }
        return all;
    });

    criterion(2, "strong 0246135 lift on 49x56", [] {
        return lift_check(ProductKind::Strong, 49, 56, strong_pattern_7(), 6);
    });

    criterion(3, "strong concatenated length-45 lift on 90x135", [] {
        return lift_check(ProductKind::Strong, 90, 135, concatenated_strong_pattern(45), 7);
    });

    criterion(4, "cartesian local identity on P3xP3 at k=4", [] {
        LemmaReport a, b;
        const double secs = timed([&] {
            a = verify_lemma_cartesian_local();
            b = verify_lemma_cartesian_local();
        });
        const bool ok = a.holds && a.count == b.count && a.count == 44;
        return Outcome{ok && secs < kCartesianLemmaSeconds,
                       "holds=" + std::string(a.holds ? "true" : "false") + " count=" + std::to_string(a.count) +
                           " repeat=" + std::to_string(b.count) + " " + fmt(secs)};
    });

    criterion(5, "strong local identity on P4xP4 at k=6", [] {
        LemmaReport a, b;
        const double secs = timed([&] {
            a = verify_lemma_strong_local();
            b = verify_lemma_strong_local();
        });
        const bool ok = a.holds && a.count == b.count && a.count == 180;
        return Outcome{ok && secs <= kStrongLemmaSeconds,
                       "holds=" + std::string(a.holds ? "true" : "false") + " count=" + std::to_string(a.count) +
                           " repeat=" + std::to_string(b.count) + " " + fmt(secs)};
    });

    criterion(6, "span-6 L(2,2,1,1) cycle lengths up to 28", [] {
        std::map<int, Pattern> feasible;
        const double secs = timed([&] { feasible = verify_l2211_periodicity(28); });
        std::vector<int> lengths;
        std::string list;
        for (const auto& [d, w] : feasible) {
            lengths.push_back(d);
            list += std::to_string(d) + ":" + w.digits() + " ";
        }
        return Outcome{lengths == std::vector<int>{7, 14, 21, 28} && secs < kPeriodicitySeconds, list + fmt(secs)};
    });

    criterion(7, "exact small lambda values", [] {
        struct Case {
            std::string name;
            Digraph g;
            int expected;
        };
        const std::vector<Case> cases{
            {"C3", oriented_cycle(3), 4},
            {"C4", oriented_cycle(4), 4},
            {"C5", oriented_cycle(5), 4},
            {"P4", oriented_path(4), 3},
            {"C3xC3", torus(ProductKind::Cartesian, 3, 3), 4},
            {"C7sC7", torus(ProductKind::Strong, 7, 7), 6},
        };
        Outcome all;
        for (const auto& c : cases) {
            std::optional<LambdaWitness> r;
            const double secs = timed([&] { r = exact_lambda(c.g); });
            const bool ok = r->lambda == c.expected && is_valid(c.g, r->witness) && secs < kExactLambdaSeconds;
            all.pass = all.pass && ok;
            all.detail += c.name + "=" + std::to_string(r->lambda) + "(" + fmt(secs) + ") ";
        }
        // The strong local identity forces f(i+1,j) = f(i,j+1) on every 4x4 window, so a 6-labeling of
        // C7 x C7 is diagonal and its pattern is a span-6 L(2,2,1,1) labeling of C7; none exists at span 5.
        const bool lemma = verify_lemma_strong_local().holds;
        const bool no_span5 = !exists_cycle_pattern(7, 5, ConditionVector::strong());
        const bool span6 = exists_cycle_pattern(7, 6, ConditionVector::strong()).has_value();
        const auto diag = verify_torus_diagonality(ProductKind::Strong, 7, 7, 6);
        const bool cross = lemma && no_span5 && span6 && diag.holds && diag.count > 0;
        all.pass = all.pass && cross;
        all.detail += "cross-check=" + std::string(cross ? "ok" : "MISMATCH") + " diagonal-6-labelings=" +
                      std::to_string(diag.count);
        return all;
    });

    criterion(8, "no 4-labelings when gcd <= 2", [] {
        Outcome all;
        std::uint64_t total = 0;
        const double secs = timed([&] {
            for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 4}, {4, 5}, {4, 6}}) {
                const auto c = count_labelings(torus(ProductKind::Cartesian, m, n), 4);
                total += c;
                all.detail += std::to_string(m) + "x" + std::to_string(n) + "=" + std::to_string(c) + " ";
            }
        });
        all.pass = total == 0 && secs < kZeroCountSeconds;
        all.detail += fmt(secs);
        return all;
    });

    criterion(9, "semigroup decomposition vs membership table", [] {
        Outcome all;
        const double secs = timed([&] {
            for (auto [m, n, frob] : {std::tuple{5, 11, 39}, std::tuple{7, 8, 41}}) {
                const auto table = oracle::semigroup_table(m, n, kSemigroupLimit);
                int largest_gap = -1;
                for (int t = 1; t <= kSemigroupLimit; ++t) {
                    const auto d = semigroup_decompose(t, m, n);
                    if (d.has_value() != table[static_cast<std::size_t>(t)]) all.pass = false;
                    if (d && (d->a * m + d->b * n != t || d->a < 0 || d->b < 0)) all.pass = false;
                    if (!table[static_cast<std::size_t>(t)]) largest_gap = t;
                }
                if (largest_gap != frob) all.pass = false;
                all.detail += "S(" + std::to_string(m) + "," + std::to_string(n) + ") largest non-member " +
                              std::to_string(largest_gap) + "; ";
            }
        });
        all.pass = all.pass && secs < kSemigroupSeconds;
        all.detail += fmt(secs);
        return all;
    });

    criterion(10, "property suites", [] {
        Outcome all;
        std::size_t graphs = 0, lifts = 0, reductions = 0, mismatches = 0;

        for (const auto& g : small_graphs()) {
            ++graphs;
            for (int k = 0; k <= kNaiveMaxK; ++k) {
                if (count_labelings(g, k) != oracle::naive_count(g, k)) ++mismatches;
                // complement is an involution on the set of valid k-labelings
                std::set<std::vector<int>> seen;
                std::vector<std::vector<int>> listed;
                enumerate_labelings(g, k, {}, [&](std::span<const int> c) {
                    listed.emplace_back(c.begin(), c.end());
                    seen.insert(listed.back());
                });
                for (const auto& f : listed) {
                    const auto mirror = complement(Labeling(f, k), k);
                    if (!seen.contains({mirror.colors().begin(), mirror.colors().end()})) ++mismatches;
                }
            }
        }

        std::mt19937 rng(56);
        for (std::size_t len : {5u, 7u, 8u, 15u}) {
            const auto patterns = sample_patterns(len, rng);
            for (auto kind : {ProductKind::Cartesian, ProductKind::Strong}) {
                const auto cv = ConditionVector::for_product(kind);
                for (std::size_t m = len; m <= kLiftMaxSide; m += len)
                    for (std::size_t n = len; n <= kLiftMaxSide; n += len) {
                        const auto constraints = build_constraints(torus(kind, m, n), {});
                        for (const auto& p : patterns) {
                            ++lifts;
                            if (validate(constraints, lift_diagonal(p, m, n)).empty() != is_valid_pattern(p, cv))
                                ++mismatches;
                        }
                    }
            }
        }

        for (std::size_t m = 3; m <= kReduceMaxSide; ++m)
            for (std::size_t n = 3; n + 3 <= m; ++n) {
                const std::size_t d = std::gcd(m, n);
                std::vector<std::pair<ProductKind, Pattern>> lifted;
                if (d >= 3) lifted.emplace_back(ProductKind::Cartesian, l21_cycle_pattern(static_cast<int>(d)));
                for (std::size_t len = 7; len <= d; ++len)
                    if (d % len == 0 && semigroup_decompose(static_cast<long long>(len), 7, 8))
                        lifted.emplace_back(ProductKind::Strong, concatenated_strong_pattern(static_cast<int>(len)));
                if (d % 7 == 0) lifted.emplace_back(ProductKind::Strong, strong_pattern_7());
                for (const auto& [kind, p] : lifted) {
                    ++reductions;
                    const auto r = reduce_rows(torus(kind, m, n), lift_diagonal(p, m, n));
                    if (!is_valid(r.graph, r.labeling) || r.graph.grid()->rows != m - n) ++mismatches;
                }
            }

        all.pass = mismatches == 0;
        all.detail = std::to_string(graphs) + " small graphs, " + std::to_string(lifts) + " lifts, " +
                     std::to_string(reductions) + " reductions, " + std::to_string(mismatches) + " mismatches";
        return all;
    });

    std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
