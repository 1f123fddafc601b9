#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "lpq/graph.hpp"
#include "lpq/labeling.hpp"
#include "lpq/solver.hpp"
#include "oracles.hpp"

using namespace lpq;

namespace {

std::vector<int> as_vector(const Labeling& f) { return {f.colors().begin(), f.colors().end()}; }

std::vector<std::vector<int>> collect(const Digraph& g, int k, const SolveOptions& options = {}) {
    std::vector<std::vector<int>> out;
    enumerate_labelings(
        g, k, {}, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); }, {}, options);
    return out;
}

// Every graph of at most 9 vertices the library can build.
std::vector<Digraph> small_family() {
    std::vector<Digraph> out;
    for (std::size_t n = 3; n <= 9; ++n) out.push_back(oriented_cycle(n));
    for (std::size_t n = 1; n <= 9; ++n) out.push_back(oriented_path(n));
    for (auto kind : {ProductKind::Cartesian, ProductKind::Strong}) {
        out.push_back(torus(kind, 3, 3));
        for (std::size_t a = 1; a <= 9; ++a)
            for (std::size_t b = 1; a * b <= 9; ++b) out.push_back(path_grid(kind, a, b));
        out.push_back(product(kind, oriented_cycle(3), oriented_path(2)));
        out.push_back(product(kind, oriented_path(3), oriented_cycle(3)));
        out.push_back(product(kind, oriented_cycle(4), oriented_path(2)));
    }
    return out;
}

}  // namespace

TEST(ExistsLabeling, ThreeCycle) {
    const auto c3 = oriented_cycle(3);
    const auto f = exists_labeling(c3, 4);
    ASSERT_TRUE(f);
    EXPECT_EQ(as_vector(*f), (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(f->k_budget(), 4);
    EXPECT_FALSE(exists_labeling(c3, 3));
}

TEST(ExistsLabeling, StrongSevenTorusNeedsSix) {
    const auto g = torus(ProductKind::Strong, 7, 7);
    EXPECT_FALSE(exists_labeling(g, 5));
    const auto f = exists_labeling(g, 6);
    ASSERT_TRUE(f);
    EXPECT_TRUE(is_valid(g, *f));
}

TEST(ExistsLabeling, WitnessesAlwaysValidateAndAreMonotone) {
    for (const auto& g : small_family()) {
        bool seen = false;
        for (int k = 0; k <= 6; ++k) {
            const auto f = exists_labeling(g, k);
            if (seen) {
                EXPECT_TRUE(f) << "monotonicity broke at k = " << k;
            }
            if (f) {
                EXPECT_TRUE(is_valid(g, *f));
                seen = true;
            }
        }
    }
}

TEST(ExistsLabeling, DefaultWitnessIsLexicographicallyLeast) {
    for (const auto& g : {oriented_cycle(5), oriented_path(6), torus(ProductKind::Cartesian, 3, 3)}) {
        for (int k = 3; k <= 5; ++k) {
            const auto all = collect(g, k);
            const auto f = exists_labeling(g, k);
            ASSERT_EQ(f.has_value(), !all.empty());
            if (f) {
                EXPECT_EQ(as_vector(*f), *std::min_element(all.begin(), all.end()));
            }
        }
    }
}

TEST(ExistsLabeling, SymmetryBreakingAndParallelKeepTheAnswer) {
    SolveOptions sym;
    sym.symmetry_breaking = true;
    SolveOptions par;
    par.parallel = true;
    par.threads = 3;
    for (const auto& g : small_family()) {
        for (int k = 2; k <= 5; ++k) {
            const auto plain = exists_labeling(g, k);
            const auto broken = exists_labeling(g, k, {}, {}, sym);
            const auto split = exists_labeling(g, k, {}, {}, par);
            EXPECT_EQ(plain.has_value(), broken.has_value());
            EXPECT_EQ(plain.has_value(), split.has_value());
            if (broken) {
                EXPECT_TRUE(is_valid(g, *broken));
                EXPECT_LE((*broken)[0], k / 2);
            }
            if (split) {
                EXPECT_EQ(*split, *plain);
            }
        }
    }
}

TEST(ExistsLabeling, BudgetExhaustionIsDistinctFromNone) {
    const auto g = torus(ProductKind::Strong, 7, 7);
    SolveBudget tiny;
    tiny.max_nodes = 10;
    try {
        (void)exists_labeling(g, 5, {}, tiny);
        FAIL() << "expected ResourceError";
    } catch (const ResourceError& e) {
        EXPECT_GT(e.nodes, 10u);
    }
    EXPECT_THROW((void)exists_labeling(g, -1), InputError);
    EXPECT_THROW((void)exists_labeling(g, 63), InputError);
}

TEST(ExactLambda, SmallValues) {
    EXPECT_EQ(exact_lambda(oriented_cycle(3)).lambda, 4);
    EXPECT_EQ(exact_lambda(oriented_cycle(4)).lambda, 4);
    EXPECT_EQ(exact_lambda(oriented_cycle(5)).lambda, 4);
    EXPECT_EQ(exact_lambda(torus(ProductKind::Cartesian, 3, 3)).lambda, 4);

    const auto p4 = exact_lambda(oriented_path(4));
    EXPECT_EQ(p4.lambda, 3);
    EXPECT_EQ(as_vector(p4.witness), (std::vector<int>{1, 3, 0, 2}));
}

TEST(ExactLambda, WitnessAndMinimality) {
    for (const auto& g : small_family()) {
        const auto r = exact_lambda(g);
        EXPECT_TRUE(is_valid(g, r.witness));
        EXPECT_EQ(r.witness.k_budget(), r.lambda);
        if (r.lambda > 0) {
            EXPECT_FALSE(exists_labeling(g, r.lambda - 1));
        }
    }
}

TEST(ExactLambda, OtherParams) {
    // L(1,1) of C_3: all three colors distinct.
    EXPECT_EQ(exact_lambda(oriented_cycle(3), {1, 1}).lambda, 2);
    // L(0,0): everything may share color 0.
    EXPECT_EQ(exact_lambda(oriented_cycle(5), {0, 0}).lambda, 0);
}

TEST(ExactLambda, ResourceErrorReportsLastResolvedK) {
    SolveBudget tiny;
    tiny.max_nodes = 50;
    try {
        (void)exact_lambda(torus(ProductKind::Strong, 7, 7), {}, tiny);
        FAIL() << "expected ResourceError";
    } catch (const ResourceError& e) {
        ASSERT_TRUE(e.last_resolved_k);
        EXPECT_EQ(*e.last_resolved_k, 4);
    }
}

TEST(Enumerate, SpecExamples) {
    EXPECT_EQ(count_labelings(oriented_cycle(3), 4), 6u);
    EXPECT_EQ(collect(oriented_path(2), 2), (std::vector<std::vector<int>>{{0, 2}, {2, 0}}));
    EXPECT_EQ(count_labelings(torus(ProductKind::Cartesian, 3, 4), 4), 0u);
}

TEST(Enumerate, LexicographicOrderWithoutDuplicates) {
    const auto all = collect(torus(ProductKind::Cartesian, 3, 3), 5);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Enumerate, MatchesNaiveFilterOnAllSmallGraphs) {
    for (const auto& g : small_family())
        for (int k = 0; k <= 4; ++k) EXPECT_EQ(count_labelings(g, k), oracle::naive_count(g, k)) << "k = " << k;
}

TEST(Enumerate, ClosedUnderComplement) {
    for (const auto& g : small_family()) {
        for (int k : {3, 4, 5}) {
            const auto all = collect(g, k);
            const std::set<std::vector<int>> seen(all.begin(), all.end());
            for (const auto& f : all) {
                std::vector<int> mirror(f.size());
                std::transform(f.begin(), f.end(), mirror.begin(), [k](int c) { return k - c; });
                EXPECT_TRUE(seen.contains(mirror));
            }
        }
    }
}

TEST(Enumerate, DeterministicAndParallelAgree) {
    const auto g = path_grid(ProductKind::Strong, 3, 4);
    const auto first = collect(g, 6);
    EXPECT_EQ(collect(g, 6), first);

    SolveOptions par;
    par.parallel = true;
    par.threads = 4;
    auto split = collect(g, 6, par);
    std::sort(split.begin(), split.end());
    EXPECT_EQ(split, first);
}

TEST(Enumerate, ExhaustionCarriesPartialCount) {
    SolveBudget tiny;
    tiny.max_nodes = 5000;
    try {
        (void)count_labelings(path_grid(ProductKind::Strong, 4, 4), 8, {}, tiny);
        FAIL() << "expected ResourceError";
    } catch (const ResourceError& e) {
        EXPECT_TRUE(e.partial_count);
    }
}
