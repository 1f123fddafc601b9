#pragma once

// JSON documents.
//
// Labeling:
//   {"product": "cartesian"|"strong"|"none", "m": int, "n": int, "p": int, "q": int,
//    "k": int, "labels": [[int, ...], ...]}            plus an optional "pattern": [int, ...]
// Writers emit keys in exactly this order. "none" denotes a single oriented
// cycle C_n, written as one row (m = 1).
//
// Report:
//   {"check": name, "holds": bool, "count": int}        plus an optional "witness"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lpq/errors.hpp"
#include "lpq/graph.hpp"
#include "lpq/labeling.hpp"
#include "lpq/patterns.hpp"
#include "lpq/theorems.hpp"

namespace lpq {

/// The on-disk form of a labeling, before its colors are checked against the budget.
struct LabelingDocument {
    std::optional<ProductKind> product;  // nullopt: a single cycle
    std::size_t m = 1;
    std::size_t n = 0;
    ConstraintParams params;
    int k = 0;
    std::vector<int> labels;  // row-major, m * n entries
    std::optional<Pattern> pattern;

    /// The graph this document labels: C_m * C_n, or C_n for "none".
    [[nodiscard]] Digraph graph() const {
        if (!product) return oriented_cycle(n);
        return torus(*product, m, n);
    }

    /// Throws InputError when a color lies outside {0..k}.
    [[nodiscard]] Labeling labeling() const { return Labeling(labels, k); }
};

inline LabelingDocument make_document(std::optional<ProductKind> product, std::size_t m, std::size_t n,
                                      const Labeling& f, ConstraintParams params = {},
                                      std::optional<Pattern> pattern = std::nullopt) {
    if (f.size() != m * n) throw InputError("labeling size does not match m * n");
    return {product, m, n, params, f.k_budget(), std::vector<int>(f.colors().begin(), f.colors().end()),
            std::move(pattern)};
}

inline nlohmann::ordered_json to_json(const LabelingDocument& doc) {
    nlohmann::ordered_json j;
    j["product"] = doc.product ? std::string(to_string(*doc.product)) : std::string("none");
    j["m"] = doc.m;
    j["n"] = doc.n;
    j["p"] = doc.params.p;
    j["q"] = doc.params.q;
    j["k"] = doc.k;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < doc.m; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < doc.n; ++c) row.push_back(doc.labels[i * doc.n + c]);
        rows.push_back(std::move(row));
    }
    j["labels"] = std::move(rows);
    if (doc.pattern) j["pattern"] = std::vector<int>(doc.pattern->colors().begin(), doc.pattern->colors().end());
    return j;
}

/// Compact single-line form followed by a newline.
inline std::string dump_document(const LabelingDocument& doc) { return to_json(doc).dump() + "\n"; }

namespace detail {

template <class T>
T require_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

}  // namespace detail

/// Accepts keys in any order. Checks shape, not validity or budget.
inline LabelingDocument parse_document(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("labeling document must be a JSON object");
    LabelingDocument doc;
    const auto product = detail::require_field<std::string>(j, "product");
    if (product != "none") {
        doc.product = parse_product_kind(product);
        if (!doc.product) throw InputError("unknown product \"" + product + "\"");
    }
    const auto m = detail::require_field<long long>(j, "m");
    const auto n = detail::require_field<long long>(j, "n");
    doc.params.p = detail::require_field<int>(j, "p");
    doc.params.q = detail::require_field<int>(j, "q");
    doc.k = detail::require_field<int>(j, "k");
    if (doc.params.p < 0 || doc.params.q < 0) throw InputError("p and q must be nonnegative");
    if (!doc.product && m != 1) throw InputError("product \"none\" is a single cycle and needs m = 1");
    if (m < (doc.product ? 3 : 1) || n < 3) throw InputError("cycle lengths must be at least 3");
    doc.m = static_cast<std::size_t>(m);
    doc.n = static_cast<std::size_t>(n);

    const auto rows = detail::require_field<std::vector<std::vector<int>>>(j, "labels");
    if (rows.size() != doc.m) throw InputError("\"labels\" must have m rows");
    for (const auto& row : rows) {
        if (row.size() != doc.n) throw InputError("every row of \"labels\" must have n entries");
        doc.labels.insert(doc.labels.end(), row.begin(), row.end());
    }
    if (j.contains("pattern")) doc.pattern = Pattern(detail::require_field<std::vector<int>>(j, "pattern"));
    return doc;
}

inline LabelingDocument parse_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

inline nlohmann::ordered_json report_json(const std::string& check, bool holds, std::uint64_t count,
                                          std::optional<nlohmann::ordered_json> witness = std::nullopt) {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["holds"] = holds;
    j["count"] = count;
    if (witness) j["witness"] = std::move(*witness);
    return j;
}

/// A lemma report; a counterexample on a grid becomes a labeling document witness.
inline nlohmann::ordered_json to_json(const LemmaReport& report) {
    std::optional<nlohmann::ordered_json> witness;
    if (report.counterexample && report.shape)
        witness = to_json(make_document(report.shape->kind, report.shape->rows, report.shape->cols,
                                        *report.counterexample));
    return report_json(report.check, report.holds, report.count, std::move(witness));
}

inline nlohmann::ordered_json pattern_json(const Pattern& p) {
    return nlohmann::ordered_json(std::vector<int>(p.colors().begin(), p.colors().end()));
}

}  // namespace lpq
