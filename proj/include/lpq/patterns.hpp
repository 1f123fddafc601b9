#pragma once

// Cyclic color patterns and their diagonal lifts onto tori.
//
// A pattern g of length L induces f(i, j) = g((i + j) mod L) on C_m * C_n
// whenever L divides both m and n. Such a lift is constant along anti-diagonals.
// Each out-step of the product advances i + j by 1 (Cartesian) or by 1 or 2
// (strong), which turns the torus constraints into a condition vector on g:
// minimum gaps indexed by forward cyclic offset.
//
// Named patterns (0-based lift, color at i + j = 0 first):
//   l21 blocks  024 / 0314 / 13        span 4, Cartesian condition (2,1)
//   strong 7    0246135                span 6, strong condition (2,2,1,1)
//   strong 8    02461357               span 7, strong condition (2,2,1,1)
// The 1-based residue table "0,2,4,6,1,3,5 at i+j = 2,3,4,5,6,0,1 (mod 7)" is the
// same labeling as the 0-based lift of 0246135: shifting both coordinates by one
// moves i + j by 2.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpq/errors.hpp"
#include "lpq/graph.hpp"
#include "lpq/labeling.hpp"

namespace lpq {

class Pattern {
public:
    explicit Pattern(std::vector<int> colors) : colors_(std::move(colors)) {
        if (colors_.size() < 3) throw InputError("pattern length must be at least 3");
        for (int c : colors_)
            if (c < 0) throw InputError("pattern colors must be nonnegative");
    }

    /// Parses a digit string such as "0246135".
    static Pattern from_digits(std::string_view digits) {
        std::vector<int> colors;
        for (char ch : digits) {
            if (ch < '0' || ch > '9') throw InputError("pattern digits must be 0-9");
            colors.push_back(ch - '0');
        }
        return Pattern(std::move(colors));
    }

    [[nodiscard]] std::size_t length() const { return colors_.size(); }
    [[nodiscard]] int operator[](std::size_t s) const { return colors_[s % colors_.size()]; }
    [[nodiscard]] std::span<const int> colors() const { return colors_; }
    [[nodiscard]] int max_color() const { return *std::max_element(colors_.begin(), colors_.end()); }

    [[nodiscard]] Pattern rotated(std::size_t shift) const {
        std::vector<int> out(colors_);
        std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
        return Pattern(std::move(out));
    }

    /// Lexicographically least rotation.
    [[nodiscard]] Pattern canonical() const {
        Pattern best = *this;
        for (std::size_t r = 1; r < length(); ++r) {
            Pattern candidate = rotated(r);
            if (candidate.colors_ < best.colors_) best = std::move(candidate);
        }
        return best;
    }

    [[nodiscard]] std::string digits() const {
        std::string out;
        for (int c : colors_) out += (c < 10) ? std::to_string(c) : "(" + std::to_string(c) + ")";
        return out;
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> colors_;
};

/// Minimum gaps by forward cyclic offset 1..r.
class ConditionVector {
public:
    explicit ConditionVector(std::vector<int> gaps) : gaps_(std::move(gaps)) {
        if (gaps_.empty()) throw InputError("condition vector must have at least one offset");
        for (int g : gaps_)
            if (g < 0) throw InputError("condition gaps must be nonnegative");
    }

    /// (2,1): what a diagonal lift must satisfy on a Cartesian torus.
    static ConditionVector cartesian() { return ConditionVector({2, 1}); }
    /// (2,2,1,1): the L(2,2,1,1) condition for strong-product lifts.
    static ConditionVector strong() { return ConditionVector({2, 2, 1, 1}); }
    static ConditionVector for_product(ProductKind kind) {
        return kind == ProductKind::Cartesian ? cartesian() : strong();
    }

    [[nodiscard]] std::size_t reach() const { return gaps_.size(); }
    /// Gap at offset t, 1-based.
    [[nodiscard]] int gap(std::size_t t) const { return gaps_.at(t - 1); }
    [[nodiscard]] std::span<const int> gaps() const { return gaps_; }

private:
    std::vector<int> gaps_;
};

struct PatternViolation {
    std::size_t position = 0;
    std::size_t offset = 0;
    std::pair<int, int> colors;
    int required = 0;

    friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};

/// Checks |g(s) - g(s+t mod L)| >= c_t for every position s and offset t in 1..r.
/// Violations are ordered by (s, t).
///
/// An offset with t = 0 mod L is still a real constraint: on a torus it joins two
/// distinct vertices (e.g. (i,j) and (i+2,j+1) when L = 3) that the lift colors
/// alike, so it fails whenever c_t > 0.
inline std::vector<PatternViolation> validate_pattern(const Pattern& g, const ConditionVector& cv) {
    std::vector<PatternViolation> found;
    const std::size_t len = g.length();
    for (std::size_t s = 0; s < len; ++s) {
        for (std::size_t t = 1; t <= cv.reach(); ++t) {
            const int a = g[s];
            const int b = g[s + t];
            if (std::abs(a - b) < cv.gap(t)) found.push_back({s, t, {a, b}, cv.gap(t)});
        }
    }
    return found;
}

inline bool is_valid_pattern(const Pattern& g, const ConditionVector& cv) {
    return validate_pattern(g, cv).empty();
}

/// Span-4 L(2,1) coloring of C_d built from blocks 024, finished by 0314 or 13.
inline Pattern l21_cycle_pattern(int d) {
    if (d < 3) throw InputError("l21_cycle_pattern needs d >= 3");
    std::vector<int> colors;
    auto repeat_024 = [&](int blocks) {
        for (int b = 0; b < blocks; ++b) colors.insert(colors.end(), {0, 2, 4});
    };
    switch (d % 3) {
    case 0:
        repeat_024(d / 3);
        break;
    case 1:
        repeat_024((d - 4) / 3);
        colors.insert(colors.end(), {0, 3, 1, 4});
        break;
    default:
        repeat_024((d - 2) / 3);
        colors.insert(colors.end(), {1, 3});
        break;
    }
    Pattern out(std::move(colors));
    if (!is_valid_pattern(out, ConditionVector::cartesian()))
        throw InternalError("block pattern for d = " + std::to_string(d) + " failed (2,1)");
    return out;
}

inline const Pattern& strong_pattern_7() {
    static const Pattern p({0, 2, 4, 6, 1, 3, 5});
    return p;
}

inline const Pattern& strong_pattern_8() {
    static const Pattern p({0, 2, 4, 6, 1, 3, 5, 7});
    return p;
}

/// t = a*m + b*n with a, b >= 0 (t >= 1 so never both zero).
struct SemigroupDecomposition {
    long long t = 0;
    long long m = 0;
    long long n = 0;
    long long a = 0;
    long long b = 0;

    friend bool operator==(const SemigroupDecomposition&, const SemigroupDecomposition&) = default;
};

/// Membership in S(m, n) = {a m + b n : a, b >= 0 not both zero}, with the
/// solution of smallest b when several exist.
inline std::optional<SemigroupDecomposition> semigroup_decompose(long long t, long long m, long long n) {
    if (t < 1 || m < 1 || n < 1) throw InputError("semigroup_decompose needs t, m, n >= 1");
    for (long long b = 0; b * n <= t; ++b) {
        const long long rest = t - b * n;
        if (rest % m == 0) return SemigroupDecomposition{t, m, n, rest / m, b};
    }
    return std::nullopt;
}

/// a copies of 0246135 followed by b copies of 02461357, where L = 7a + 8b with b minimal.
inline Pattern concatenated_strong_pattern(int length) {
    if (length < 1) throw InputError("pattern length must be positive");
    const auto split = semigroup_decompose(length, 7, 8);
    if (!split) throw InputError(std::to_string(length) + " is not in S(7,8)");
    std::vector<int> colors;
    for (long long i = 0; i < split->a; ++i)
        colors.insert(colors.end(), strong_pattern_7().colors().begin(), strong_pattern_7().colors().end());
    for (long long i = 0; i < split->b; ++i)
        colors.insert(colors.end(), strong_pattern_8().colors().begin(), strong_pattern_8().colors().end());
    Pattern out(std::move(colors));
    if (!is_valid_pattern(out, ConditionVector::strong()))
        throw InternalError("concatenated pattern of length " + std::to_string(length) + " failed (2,2,1,1)");
    return out;
}

/// f(i, j) = g((i + j) mod L) on C_m * C_n, budget = max color of g.
inline Labeling lift_diagonal(const Pattern& g, std::size_t m, std::size_t n) {
    const std::size_t len = g.length();
    if (m % len != 0 || n % len != 0)
        throw InputError("pattern length " + std::to_string(len) + " must divide m = " + std::to_string(m) +
                         " and n = " + std::to_string(n));
    std::vector<int> colors(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) colors[i * n + j] = g[(i + j) % len];
    return Labeling(std::move(colors), g.max_color());
}

/// The diagonal lift together with the torus it lives on.
struct LiftedLabeling {
    Digraph graph;
    Labeling labeling;
};

inline LiftedLabeling lift_diagonal(const Pattern& g, std::size_t m, std::size_t n, ProductKind kind) {
    Labeling f = lift_diagonal(g, m, n);
    return {torus(kind, m, n), std::move(f)};
}

/// Lexicographically least cyclic sequence of length d over {0..span} meeting cv, if any.
inline std::optional<Pattern> exists_cycle_pattern(int d, int span, const ConditionVector& cv) {
    if (d < 3) throw InputError("cycle length must be at least 3");
    if (span < 0) throw InputError("span must be nonnegative");
    const std::size_t len = static_cast<std::size_t>(d);
    for (std::size_t t = len; t <= cv.reach(); t += len)
        if (cv.gap(t) > 0) return std::nullopt;  // a wrapped offset can never be met
    std::vector<int> colors(len, -1);

    // Position s only checks partners already placed (index < s), in both directions.
    auto fits = [&](std::size_t s, int c) {
        for (std::size_t t = 1; t <= cv.reach(); ++t) {
            if (t % len == 0) continue;
            const std::size_t back = (s + len - t % len) % len;
            const std::size_t ahead = (s + t) % len;
            if (back < s && std::abs(colors[back] - c) < cv.gap(t)) return false;
            if (ahead < s && std::abs(colors[ahead] - c) < cv.gap(t)) return false;
        }
        return true;
    };

    std::size_t s = 0;
    while (true) {
        int c = colors[s] + 1;
        while (c <= span && !fits(s, c)) ++c;
        if (c <= span) {
            colors[s] = c;
            if (s + 1 == len) return Pattern(colors);
            ++s;
        } else {
            colors[s] = -1;
            if (s == 0) return std::nullopt;
            --s;
        }
    }
}

}  // namespace lpq
