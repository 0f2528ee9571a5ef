#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fpsloop/lie_identities.hpp"
#include "fpsloop/loop_calculus.hpp"
#include "fpsloop/series.hpp"
#include "fpsloop/su_brackets.hpp"

namespace fpsloop {

using json = nlohmann::json;

// Algebra documents:
//   {"kind": "builtin", "name": "ut:3"}
//   {"kind": "builtin", "name": "laurent", "params": {"a": -4, "b": 4}}
//   {"kind": "structure_constants", "basis": ["e", "v"],
//    "table": {"0,0": [[0, "1"]], "1,0": [[1, "1"]]},
//    "grading": {"e": 0, "v": 1}, "check_associativity": true, "name": "ev"}
//   {"kind": "free_truncated", "generators": [["a", 1], ["b", 2]],
//    "max_word_degree": 3, "multilinear": false}
// Table keys are 0-based basis indices.
AlgebraPtr algebra_from_json(const json& doc);
json algebra_to_json(const AlgebraPtr& algebra);

// A builtin spec such as "ut:3", a JSON file path, or inline JSON text.
AlgebraPtr load_algebra(std::string_view source);

// Terms as [["p/q", ["label", ...]], ...].
json element_to_json(const AlgElt& x);
AlgElt element_from_json(const AlgebraPtr& algebra, const json& terms);

json graded_to_json(const GradedElt& x);
GradedElt graded_from_json(const AlgebraPtr& algebra, const json& doc);

// {"algebra": <name or doc>, "truncation": T, "graded": bool,
//  "coeffs": {"1": [["p/q", ["a", "b"]], ...], ...}}
json series_to_json(const Series& s);
// Uses `algebra` when given, otherwise the document's own "algebra" entry.
Series series_from_json(const json& doc, AlgebraPtr algebra = nullptr);

// Text form: t + a*t^2 - (1/2)*a*b*t^3. A coefficient is an integer or a
// parenthesized fraction followed by '*'. Powers beyond the truncation are
// dropped; t^1 is the leading t and may appear only once, first.
Series parse_series(std::string_view text, const AlgebraPtr& algebra, int truncation,
                    bool graded_mode);
std::string print_series(const Series& s);

json report_to_json(const IdentityReport& report);
json report_to_json(const NSequenceReport& report);
json report_to_json(const SabininAxiomsReport& report);

}  // namespace fpsloop
