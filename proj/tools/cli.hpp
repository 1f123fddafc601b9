#pragma once

// Batch front end. Exit codes: 0 success / valid / holds, 1 invalid labeling or
// counterexample or no solution, 2 usage or range error, 3 budget exhausted.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpq/errors.hpp"
#include "lpq/graph.hpp"
#include "lpq/io.hpp"
#include "lpq/labeling.hpp"
#include "lpq/patterns.hpp"
#include "lpq/solver.hpp"
#include "lpq/theorems.hpp"

namespace lpq::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kExhausted = 3 };

namespace detail {

struct Common {
    std::string product;
    std::size_t m = 0;
    std::size_t n = 0;
    int p = 2;
    int q = 1;
    bool solve = false;
    bool parallel = false;
    std::uint64_t budget_nodes = SolveBudget{}.max_nodes;
    std::string out_file;
    std::string format = "json";
};

inline void add_torus_options(CLI::App& sub, Common& c, bool product_required) {
    auto* prod = sub.add_option("--product", c.product, "cartesian or strong")
                     ->check(CLI::IsMember({"cartesian", "strong"}));
    if (product_required) prod->required();
    sub.add_option("--m", c.m, "rows (first cycle length)");
    sub.add_option("--n", c.n, "columns (second cycle length)");
}

inline void add_solver_options(CLI::App& sub, Common& c) {
    sub.add_flag("--solve", c.solve, "compute exactly with the solver below the theorem range");
    sub.add_option("--budget-nodes", c.budget_nodes, "search node cap")->check(CLI::PositiveNumber);
    sub.add_flag("--parallel", c.parallel, "split the top-level search across threads");
}

inline void add_output_options(CLI::App& sub, Common& c) {
    sub.add_option("--out", c.out_file, "write the JSON document to FILE");
    sub.add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "grid"}));
}

inline LambdaOptions lambda_options(const Common& c) {
    LambdaOptions o;
    o.solve = c.solve;
    o.budget.max_nodes = c.budget_nodes;
    o.solver.parallel = c.parallel;
    return o;
}

/// Row i is shifted right by i cells so that anti-diagonals line up in columns.
inline void print_grid(std::ostream& os, std::size_t m, std::size_t n, std::span<const int> colors) {
    int width = 1;
    for (int c : colors) width = std::max(width, static_cast<int>(std::to_string(c).size()));
    for (std::size_t i = 0; i < m; ++i) {
        os << std::string(i * static_cast<std::size_t>(width + 1), ' ');
        for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << std::setw(width) << colors[i * n + j];
        os << '\n';
    }
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw InputError("failed writing " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline void emit_document(const Common& c, const LabelingDocument& doc, std::ostream& out) {
    if (!c.out_file.empty()) write_file(c.out_file, dump_document(doc));
    if (c.format == "grid")
        print_grid(out, doc.m, doc.n, doc.labels);
    else if (c.out_file.empty())
        out << dump_document(doc);
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("expected a comma-separated integer list, got \"" + text + "\"");
        }
    }
    return out;
}

inline void require_dims(const Common& c) {
    if (c.m == 0 || c.n == 0) throw InputError("--m and --n are required");
}

inline int run_lambda(const Common& c, std::ostream& out) {
    require_dims(c);
    const ProductKind kind = *parse_product_kind(c.product);
    if (ConstraintParams{c.p, c.q} != ConstraintParams{}) {
        if (!c.solve) throw RangeError("theorem dispatch is for L(2,1); pass --solve for other (p,q)");
        auto found = exact_lambda(torus(kind, c.m, c.n), {c.p, c.q}, lambda_options(c).budget,
                                  lambda_options(c).solver);
        out << "Exact " << found.lambda << "\n";
        out << "certificate: " << to_string(CertificateKind::ConstructedLabeling) << "\n";
        if (!c.out_file.empty() || c.format == "grid")
            emit_document(c, make_document(kind, c.m, c.n, found.witness, {c.p, c.q}), out);
        return kOk;
    }

    const LambdaResult r = lambda_product(kind, c.m, c.n, lambda_options(c));
    if (r.is_exact())
        out << "Exact " << r.lo << "\n";
    else
        out << "Interval " << r.lo << " " << r.hi << "\n";
    out << "certificate: " << to_string(r.certificate) << "\n";
    out << "provenance: " << r.provenance << "\n";
    if (r.lower_evidence) {
        const auto& e = *r.lower_evidence;
        out << "lower-bound evidence: " << e.local_lemma.check << " holds=" << std::boolalpha << e.local_lemma.holds
            << " count=" << e.local_lemma.count << "; descent ends at (" << e.descent.rows << "," << e.descent.cols
            << ") class " << to_string(e.descent.kind) << "\n";
    }
    if (r.labeling && (!c.out_file.empty() || c.format == "grid"))
        emit_document(c, make_document(kind, c.m, c.n, *r.labeling, {}, r.pattern), out);
    return kOk;
}

inline int run_construct(const Common& c, const std::string& pattern_digits, std::ostream& out) {
    require_dims(c);
    const ProductKind kind = *parse_product_kind(c.product);
    if (!pattern_digits.empty()) {
        const Pattern g = Pattern::from_digits(pattern_digits);
        const Labeling f = lift_diagonal(g, c.m, c.n);
        emit_document(c, make_document(kind, c.m, c.n, f, {c.p, c.q}, g), out);
        return kOk;
    }
    const LambdaResult r = lambda_product(kind, c.m, c.n, lambda_options(c));
    if (!r.labeling)
        throw RangeError("no constructed labeling for this case (" + std::string(to_string(r.certificate)) +
                         "): " + r.provenance);
    emit_document(c, make_document(kind, c.m, c.n, *r.labeling, {}, r.pattern), out);
    return kOk;
}

inline int run_verify(const std::string& path, std::ostream& out) {
    const LabelingDocument doc = parse_document(read_file(path));
    std::vector<std::string> problems;
    for (std::size_t v = 0; v < doc.labels.size(); ++v)
        if (doc.labels[v] < 0 || doc.labels[v] > doc.k)
            problems.push_back("color " + std::to_string(doc.labels[v]) + " at (" + std::to_string(v / doc.n) + "," +
                               std::to_string(v % doc.n) + ") outside {0.." + std::to_string(doc.k) + "}");
    if (!problems.empty()) {
        out << "INVALID: " << problems.size() << " out-of-budget colors\n";
        for (const auto& p : problems) out << "  " << p << "\n";
        return kInvalid;
    }

    const Digraph g = doc.graph();
    const auto violations = validate(g, doc.labeling(), doc.params);
    if (violations.empty()) {
        out << "VALID: " << doc.k << "-L(" << doc.params.p << "," << doc.params.q << ")-labeling of "
            << (doc.product ? std::string(to_string(*doc.product)) + " " : std::string("cycle ")) << doc.m << "x"
            << doc.n << "\n";
        return kOk;
    }
    out << "INVALID: " << violations.size() << " violations\n";
    for (const auto& v : violations) {
        const auto [a, b] = v.pair;
        out << "  " << to_string(v.kind) << " (" << a / doc.n << "," << a % doc.n << ")-(" << b / doc.n << ","
            << b % doc.n << ") colors " << v.labels.first << "," << v.labels.second << " need gap " << v.required
            << "\n";
    }
    return kInvalid;
}

struct LemmaArgs {
    std::string which = "all";
    int k = -1;
    int d_max = 28;
};

inline int run_lemmas(const Common& c, const LemmaArgs& a, std::ostream& out) {
    const SolveBudget budget{c.budget_nodes, std::nullopt};
    SolveOptions solver;
    solver.parallel = c.parallel;

    nlohmann::ordered_json docs = nlohmann::ordered_json::array();
    bool all_hold = true;
    auto print = [&](const LemmaReport& r) {
        out << r.check << ": holds=" << std::boolalpha << r.holds << " count=" << r.count << "\n";
        all_hold = all_hold && r.holds;
        docs.push_back(to_json(r));
    };

    const bool all = a.which == "all";
    if (all || a.which == "cartesian-local") print(verify_lemma_cartesian_local(a.k < 0 ? 4 : a.k, budget, solver));
    if (all || a.which == "strong-local") print(verify_lemma_strong_local(a.k < 0 ? 6 : a.k, budget, solver));
    if (a.which == "torus-diagonal") {
        require_dims(c);
        if (c.product.empty()) throw InputError("--product is required for torus-diagonal");
        const ProductKind kind = *parse_product_kind(c.product);
        const int k = a.k >= 0 ? a.k : (kind == ProductKind::Cartesian ? 4 : 6);
        print(verify_torus_diagonality(kind, c.m, c.n, k, budget, solver));
    }
    if (all || a.which == "l2211") {
        const auto feasible = verify_l2211_periodicity(a.d_max);
        bool holds = true;
        for (int d = 3; d <= a.d_max; ++d) holds = holds && (feasible.contains(d) == (d % 7 == 0));
        out << "l2211-periodicity: holds=" << std::boolalpha << holds << " count=" << feasible.size() << " d = {";
        bool first = true;
        for (const auto& [d, w] : feasible) {
            out << (first ? "" : ", ") << d;
            first = false;
        }
        out << "}\n";
        for (const auto& [d, w] : feasible) out << "  d=" << d << " witness " << w.digits() << "\n";
        all_hold = all_hold && holds;
        std::optional<nlohmann::ordered_json> witness;
        if (!feasible.empty()) witness = pattern_json(feasible.begin()->second);
        docs.push_back(report_json("l2211-periodicity", holds, feasible.size(), witness));
    }
    if (!c.out_file.empty()) write_file(c.out_file, (docs.size() == 1 ? docs[0] : docs).dump() + "\n");
    return all_hold ? kOk : kInvalid;
}

struct PatternArgs {
    std::string family = "l21";
    int d = 0;
    int max_span = 6;
    std::string cv;
    std::string check;
};

inline int run_pattern(const Common& c, const PatternArgs& a, std::ostream& out) {
    // Explicit --cv, then --product, then the family's own condition.
    const ConditionVector cv = !a.cv.empty()         ? ConditionVector(parse_int_list(a.cv))
                               : !c.product.empty()  ? ConditionVector::for_product(*parse_product_kind(c.product))
                               : a.family == "l21"   ? ConditionVector::cartesian()
                                                     : ConditionVector::strong();

    std::optional<Pattern> g;
    if (!a.check.empty()) {
        g = Pattern::from_digits(a.check);
    } else if (a.family == "l21") {
        g = l21_cycle_pattern(a.d);
    } else if (a.family == "strong") {
        g = concatenated_strong_pattern(a.d);
    } else {
        g = exists_cycle_pattern(a.d, a.max_span, cv);
        if (!g) {
            out << "none: no pattern of length " << a.d << " with span <= " << a.max_span << "\n";
            return kInvalid;
        }
    }

    const auto violations = validate_pattern(*g, cv);
    out << "pattern " << g->digits() << " (canonical " << g->canonical().digits() << ", span " << g->max_color()
        << ")\n";
    if (!c.out_file.empty()) write_file(c.out_file, pattern_json(*g).dump() + "\n");
    if (violations.empty()) {
        out << "valid\n";
        return kOk;
    }
    out << "INVALID: " << violations.size() << " violations\n";
    for (const auto& v : violations)
        out << "  position " << v.position << " offset " << v.offset << " colors " << v.colors.first << ","
            << v.colors.second << " need gap " << v.required << "\n";
    return kInvalid;
}

inline int run_decompose(long long t, long long m, long long n, std::ostream& out) {
    const auto split = semigroup_decompose(t, m, n);
    if (!split) {
        out << t << " is not in S(" << m << "," << n << ")\n";
        return kInvalid;
    }
    out << t << " = " << split->a << "*" << m << " + " << split->b << "*" << n << "\n";
    return kOk;
}

inline int run_descent(const Common& c, std::ostream& out) {
    require_dims(c);
    const auto d = descent_terminal(c.m, c.n);
    for (std::size_t s = 0; s < d.steps.size(); ++s)
        out << (s ? " -> " : "") << "(" << d.steps[s].first << "," << d.steps[s].second << ")";
    out << "\nterminal (" << d.rows << "," << d.cols << ") class " << to_string(d.kind) << " "
        << (d.kind == DescentClass::Gcd ? "d=" : "k=") << d.parameter() << "\n";
    return kOk;
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and dispatches. Diagnostics go to err.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"L(p,q)-labelings of oriented cycle products"};
    app.require_subcommand(1, 1);

    detail::Common common;
    detail::LemmaArgs lemma_args;
    detail::PatternArgs pattern_args;
    std::string verify_path;
    std::string construct_pattern;
    long long dec_t = 0;
    long long dec_m = 0;
    long long dec_n = 0;

    auto* lambda = app.add_subcommand("lambda", "lambda of C_m x C_n with a certificate");
    detail::add_torus_options(*lambda, common, true);
    lambda->add_option("--p", common.p)->check(CLI::NonNegativeNumber);
    lambda->add_option("--q", common.q)->check(CLI::NonNegativeNumber);
    detail::add_solver_options(*lambda, common);
    detail::add_output_options(*lambda, common);

    auto* construct = app.add_subcommand("construct", "write a certified labeling of C_m x C_n");
    detail::add_torus_options(*construct, common, true);
    construct->add_option("--pattern", construct_pattern, "lift this digit pattern instead, e.g. 0246135");
    construct->add_option("--p", common.p)->check(CLI::NonNegativeNumber);
    construct->add_option("--q", common.q)->check(CLI::NonNegativeNumber);
    detail::add_solver_options(*construct, common);
    detail::add_output_options(*construct, common);

    auto* verify = app.add_subcommand("verify", "validate a JSON labeling document");
    verify->add_option("file", verify_path, "labeling document")->required();

    auto* lemmas = app.add_subcommand("lemmas", "run the exhaustive lemma checks");
    lemmas->add_option("--which", lemma_args.which)
        ->check(CLI::IsMember({"cartesian-local", "strong-local", "l2211", "torus-diagonal", "all"}));
    lemmas->add_option("--k", lemma_args.k, "labeling budget override")->check(CLI::NonNegativeNumber);
    lemmas->add_option("--d-max", lemma_args.d_max, "largest cycle for l2211")->check(CLI::Range(3, 60));
    detail::add_torus_options(*lemmas, common, false);
    lemmas->add_option("--budget-nodes", common.budget_nodes)->check(CLI::PositiveNumber);
    lemmas->add_flag("--parallel", common.parallel);
    lemmas->add_option("--out", common.out_file, "write the JSON report(s) to FILE");

    auto* pattern = app.add_subcommand("pattern", "build, search or check a cyclic pattern");
    pattern->add_option("--family", pattern_args.family)->check(CLI::IsMember({"l21", "strong", "search"}));
    pattern->add_option("--d", pattern_args.d, "pattern length");
    pattern->add_option("--max-span", pattern_args.max_span, "largest color for search")->check(CLI::Range(0, 8));
    pattern->add_option("--cv", pattern_args.cv, "condition vector, e.g. 2,2,1,1");
    pattern->add_option("--check", pattern_args.check, "validate this digit pattern");
    pattern->add_option("--product", common.product, "use the product's condition vector")
        ->check(CLI::IsMember({"cartesian", "strong"}));
    pattern->add_option("--out", common.out_file, "write the pattern as a JSON array");

    auto* decompose = app.add_subcommand("decompose", "write t = a m + b n with a, b >= 0");
    decompose->add_option("--t", dec_t)->required();
    decompose->add_option("--m", dec_m)->required();
    decompose->add_option("--n", dec_n)->required();

    auto* descent = app.add_subcommand("descent", "repeated row reduction of C_m x C_n");
    descent->add_option("--m", common.m)->required();
    descent->add_option("--n", common.n)->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*lambda) return detail::run_lambda(common, out);
        if (*construct) return detail::run_construct(common, construct_pattern, out);
        if (*verify) return detail::run_verify(verify_path, out);
        if (*lemmas) return detail::run_lemmas(common, lemma_args, out);
        if (*pattern) {
            if (pattern_args.check.empty() && pattern_args.d < 3) throw InputError("--d must be at least 3");
            return detail::run_pattern(common, pattern_args, out);
        }
        if (*decompose) return detail::run_decompose(dec_t, dec_m, dec_n, out);
        if (*descent) return detail::run_descent(common, out);
    } catch (const ResourceError& e) {
        err << "budget exhausted: " << e.what() << " after " << e.nodes << " nodes";
        if (e.last_resolved_k) err << "; resolved up to k = " << *e.last_resolved_k;
        err << "\n";
        return kExhausted;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace lpq::cli
