#include "fpsloop/fpsloop.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "fpsloop/acceptance.hpp"
#include "fpsloop/error.hpp"
#include "fpsloop/io.hpp"
#include "fpsloop/lie_identities.hpp"
#include "fpsloop/loop_calculus.hpp"

struct fpsl_algebra {
  fpsloop::AlgebraPtr ptr;
};

struct fpsl_series {
  fpsloop::Series value;
};

namespace {

using namespace fpsloop;

thread_local std::string g_error;
thread_local std::size_t g_line = 0;
thread_local std::size_t g_column = 0;

fpsl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::AssociativityViolation: return FPSL_ERR_ASSOCIATIVITY_VIOLATION;
    case ErrorCode::GradingViolation: return FPSL_ERR_GRADING_VIOLATION;
    case ErrorCode::EmptyGenerators: return FPSL_ERR_EMPTY_GENERATORS;
    case ErrorCode::AlgebraMismatch: return FPSL_ERR_ALGEBRA_MISMATCH;
    case ErrorCode::TruncationMismatch: return FPSL_ERR_TRUNCATION_MISMATCH;
    case ErrorCode::BadParams: return FPSL_ERR_BAD_PARAMS;
    case ErrorCode::SupportNeedsFreeAlgebra: return FPSL_ERR_SUPPORT_NEEDS_FREE_ALGEBRA;
    case ErrorCode::KTooLarge: return FPSL_ERR_K_TOO_LARGE;
    case ErrorCode::EmptyArgs: return FPSL_ERR_EMPTY_ARGS;
    case ErrorCode::EmptyI: return FPSL_ERR_EMPTY_I;
    case ErrorCode::BadArity: return FPSL_ERR_BAD_ARITY;
    case ErrorCode::BadIndex: return FPSL_ERR_BAD_INDEX;
    case ErrorCode::TruncationTooSmall: return FPSL_ERR_TRUNCATION_TOO_SMALL;
    case ErrorCode::ParseError: return FPSL_ERR_PARSE;
    case ErrorCode::UnknownSymbol: return FPSL_ERR_UNKNOWN_SYMBOL;
    case ErrorCode::Inconsistent: return FPSL_ERR_INCONSISTENT;
    case ErrorCode::InvalidArgument: return FPSL_ERR_INVALID_ARGUMENT;
  }
  return FPSL_ERR_INTERNAL;
}

struct NullPointer {};

// Runs body, translating exceptions into status codes and the thread-local
// error message.
template <class F>
fpsl_status guarded(F&& body) {
  g_error.clear();
  g_line = g_column = 0;
  try {
    body();
    return FPSL_OK;
  } catch (const NullPointer&) {
    g_error = "null pointer argument";
    return FPSL_ERR_NULL_POINTER;
  } catch (const fpsloop::ParseError& e) {
    g_error = e.what();
    g_line = e.line();
    g_column = e.column();
    return status_of(e.code());
  } catch (const Error& e) {
    g_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    g_error = std::string("malformed JSON: ") + e.what();
    return FPSL_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return FPSL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return FPSL_ERR_INTERNAL;
  }
}

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullPointer{};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup(const json& doc) { return dup(doc.dump(2)); }

fpsl_series* wrap(Series s) { return new fpsl_series{std::move(s)}; }

}  // namespace

extern "C" {

const char* fpsl_status_name(fpsl_status status) {
  switch (status) {
    case FPSL_OK: return "OK";
    case FPSL_ERR_ASSOCIATIVITY_VIOLATION: return "ASSOCIATIVITY_VIOLATION";
    case FPSL_ERR_GRADING_VIOLATION: return "GRADING_VIOLATION";
    case FPSL_ERR_EMPTY_GENERATORS: return "EMPTY_GENERATORS";
    case FPSL_ERR_ALGEBRA_MISMATCH: return "ALGEBRA_MISMATCH";
    case FPSL_ERR_TRUNCATION_MISMATCH: return "TRUNCATION_MISMATCH";
    case FPSL_ERR_BAD_PARAMS: return "BAD_PARAMS";
    case FPSL_ERR_SUPPORT_NEEDS_FREE_ALGEBRA: return "SUPPORT_NEEDS_FREE_ALGEBRA";
    case FPSL_ERR_K_TOO_LARGE: return "K_TOO_LARGE";
    case FPSL_ERR_EMPTY_ARGS: return "EMPTY_ARGS";
    case FPSL_ERR_EMPTY_I: return "EMPTY_I";
    case FPSL_ERR_BAD_ARITY: return "BAD_ARITY";
    case FPSL_ERR_BAD_INDEX: return "BAD_INDEX";
    case FPSL_ERR_TRUNCATION_TOO_SMALL: return "TRUNCATION_TOO_SMALL";
    case FPSL_ERR_PARSE: return "PARSE_ERROR";
    case FPSL_ERR_UNKNOWN_SYMBOL: return "UNKNOWN_SYMBOL";
    case FPSL_ERR_INCONSISTENT: return "INCONSISTENT";
    case FPSL_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case FPSL_ERR_NULL_POINTER: return "NULL_POINTER";
    case FPSL_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* fpsl_last_error(void) { return g_error.c_str(); }

void fpsl_last_error_position(size_t* line, size_t* column) {
  if (line) *line = g_line;
  if (column) *column = g_column;
}

void fpsl_string_free(char* s) { std::free(s); }

uint64_t fpsl_default_seed(void) { return kDefaultSeed; }

// --- algebras -------------------------------------------------------------------

fpsl_status fpsl_algebra_load(const char* source, fpsl_algebra** out) {
  return guarded([&] {
    require(source, out);
    *out = new fpsl_algebra{load_algebra(source)};
  });
}

void fpsl_algebra_free(fpsl_algebra* algebra) { delete algebra; }

fpsl_status fpsl_algebra_to_json(const fpsl_algebra* algebra, char** out) {
  return guarded([&] {
    require(algebra, out);
    *out = dup(algebra_to_json(algebra->ptr));
  });
}

fpsl_status fpsl_algebra_is_graded(const fpsl_algebra* algebra, int* graded) {
  return guarded([&] {
    require(algebra, graded);
    *graded = algebra->ptr->graded();
  });
}

fpsl_status fpsl_algebra_predicates(const fpsl_algebra* algebra, int* s_brackets_zero,
                                    int* brackets_s3_zero) {
  return guarded([&] {
    require(algebra, s_brackets_zero, brackets_s3_zero);
    const CommIdealReport r = check_s_comm_ideal(algebra->ptr);
    *s_brackets_zero = r.s_brackets_zero;
    *brackets_s3_zero = r.brackets_s3_zero;
  });
}

// --- series ---------------------------------------------------------------------

fpsl_status fpsl_series_parse(const fpsl_algebra* algebra, const char* text, int truncation,
                              int graded, fpsl_series** out) {
  return guarded([&] {
    require(algebra, text, out);
    const bool mode = graded < 0 ? algebra->ptr->graded() : graded != 0;
    *out = wrap(parse_series(text, algebra->ptr, truncation, mode));
  });
}

fpsl_status fpsl_series_from_json(const fpsl_algebra* algebra, const char* text,
                                  fpsl_series** out) {
  return guarded([&] {
    require(text, out);
    *out = wrap(series_from_json(json::parse(text), algebra ? algebra->ptr : nullptr));
  });
}

void fpsl_series_free(fpsl_series* series) { delete series; }

fpsl_status fpsl_series_to_json(const fpsl_series* series, char** out) {
  return guarded([&] {
    require(series, out);
    *out = dup(series_to_json(series->value));
  });
}

fpsl_status fpsl_series_to_text(const fpsl_series* series, char** out) {
  return guarded([&] {
    require(series, out);
    *out = dup(print_series(series->value));
  });
}

fpsl_status fpsl_series_equal(const fpsl_series* a, const fpsl_series* b, int* equal) {
  return guarded([&] {
    require(a, b, equal);
    *equal = a->value == b->value;
  });
}

fpsl_status fpsl_series_depth(const fpsl_series* series, int* out) {
  return guarded([&] {
    require(series, out);
    const Depth d = depth(series->value);
    *out = d.infinite() ? -1 : *d.value;
  });
}

fpsl_status fpsl_series_binary(fpsl_binop op, const fpsl_series* a, const fpsl_series* b,
                               fpsl_series** out) {
  return guarded([&] {
    require(a, b, out);
    const Series& x = a->value;
    const Series& y = b->value;
    switch (op) {
      case FPSL_COMPOSE: *out = wrap(compose(x, y)); return;
      case FPSL_LEFT_DIVIDE: *out = wrap(left_divide(x, y)); return;
      case FPSL_RIGHT_DIVIDE: *out = wrap(right_divide(x, y)); return;
      case FPSL_STAR: *out = wrap(star(x, y)); return;
      case FPSL_STAR_LEFT_DIVIDE: *out = wrap(star_left_divide(x, y)); return;
      case FPSL_STAR_RIGHT_DIVIDE: *out = wrap(star_right_divide(x, y)); return;
      case FPSL_BULLET: *out = wrap(bullet(x, y)); return;
      case FPSL_LINEARIZED: *out = wrap(linearized_composition(x, y)); return;
      case FPSL_LOOP_COMMUTATOR: *out = wrap(loop_commutator(x, y)); return;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown binary operation");
  });
}

fpsl_status fpsl_series_associator(const fpsl_series* a, const fpsl_series* b,
                                   const fpsl_series* c, fpsl_series** out) {
  return guarded([&] {
    require(a, b, c, out);
    *out = wrap(loop_associator(a->value, b->value, c->value));
  });
}

fpsl_status fpsl_series_associator_defect(const fpsl_series* a, const fpsl_series* b,
                                          const fpsl_series* c, char** out_json) {
  return guarded([&] {
    require(a, b, c, out_json);
    const Series d = associator_defect(a->value, b->value, c->value);
    json doc = series_to_json(d);
    doc["zero"] = d.is_unit();
    *out_json = dup(doc);
  });
}

fpsl_status fpsl_deviation(const char* base, const int* indices, size_t n_indices,
                           const fpsl_series* const* args, size_t n_args, fpsl_series** out) {
  return guarded([&] {
    require(base, out);
    if (n_indices > 0) require(indices);
    if (n_args > 0) require(args);
    DeviationExpr expr;
    const std::string b = base;
    if (b == "comm" || b == "commutator") {
      expr.base = DeviationBase::Commutator;
    } else if (b == "assoc" || b == "associator") {
      expr.base = DeviationBase::Associator;
    } else {
      throw Error(ErrorCode::BadParams, "deviation base must be comm or assoc, got " + b);
    }
    expr.indices.assign(indices, indices + n_indices);
    std::vector<Series> values;
    for (std::size_t i = 0; i < n_args; ++i) {
      require(args[i]);
      values.push_back(args[i]->value);
    }
    *out = wrap(deviation_apply(expr, values));
  });
}

// --- brackets -------------------------------------------------------------------

fpsl_status fpsl_bracket_closed(const fpsl_algebra* algebra, const char* elements_json,
                                const char* method, char** out_json) {
  return guarded([&] {
    require(algebra, elements_json, out_json);
    const json doc = json::parse(elements_json);
    std::vector<GradedElt> xs;
    for (const auto& x : doc.at("xs")) xs.push_back(graded_from_json(algebra->ptr, x));
    const GradedElt y = graded_from_json(algebra->ptr, doc.at("y"));
    const GradedElt z = graded_from_json(algebra->ptr, doc.at("z"));
    const std::string m = method ? method : "closed";
    GradedElt value;
    if (xs.empty()) {
      value = sabinin_binary(y, z);
    } else if (m == "closed") {
      value = sabinin_closed(xs, y, z);
    } else if (m == "recursive") {
      value = sabinin_recursive(xs, y, z);
    } else {
      throw Error(ErrorCode::BadParams, "method must be closed or recursive, got " + m);
    }
    *out_json = dup(graded_to_json(value));
  });
}

fpsl_status fpsl_bracket_filtration(const int* degrees, size_t n_degrees, int deg_y, int deg_z,
                                    int truncation, char** out_json) {
  return guarded([&] {
    require(out_json);
    if (n_degrees > 0) require(degrees);
    const FiltrationBracket fb =
        filtration_bracket(std::vector<int>(degrees, degrees + n_degrees), deg_y, deg_z, truncation);
    json xs = json::array();
    for (const auto& x : fb.xs) xs.push_back(graded_to_json(x));
    const GradedElt closed = fb.xs.empty() ? sabinin_binary(fb.y, fb.z)
                                           : sabinin_closed(fb.xs, fb.y, fb.z);
    *out_json = dup(json{{"xs", xs},
                         {"y", graded_to_json(fb.y)},
                         {"z", graded_to_json(fb.z)},
                         {"value", graded_to_json(fb.value)},
                         {"closed_form", graded_to_json(closed)},
                         {"agrees", closed == fb.value}});
  });
}

fpsl_status fpsl_klopsch(int n, int m, int target_ba, char** out_json) {
  return guarded([&] {
    require(out_json);
    const KlopschTarget target = target_ba ? KlopschTarget::BA : KlopschTarget::AB;
    const KlopschSolution s = klopsch_witness(n, m, target);
    const AlgElt check = klopsch_verify(n, m, s.lambda, s.mu);
    *out_json = dup(json{{"n", n},
                         {"m", m},
                         {"target", target_ba ? "beta*alpha" : "alpha*beta"},
                         {"lambda", fpsloop::to_string(s.lambda)},
                         {"mu", fpsloop::to_string(s.mu)},
                         {"slot_m", element_to_json(check)},
                         {"slot_m_text", check.to_string()}});
  });
}

// --- identities -----------------------------------------------------------------

fpsl_status fpsl_identity_st(const fpsl_algebra* algebra, int n, int tmax, char** out_json,
                             int* pass) {
  return guarded([&] {
    require(algebra, out_json, pass);
    const IdentityReport r = check_st_identity(algebra->ptr, n, tmax);
    json doc = report_to_json(r);
    doc["n"] = n;
    doc["tmax"] = tmax;
    *pass = r.pass;
    *out_json = dup(doc);
  });
}

fpsl_status fpsl_identity_jacobi(const fpsl_algebra* algebra, const char* kind, int tmax,
                                 const char* table_json, char** out_json, int* pass) {
  return guarded([&] {
    require(kind, out_json, pass);
    const std::string k = kind;
    IdentityReport r;
    if (k == "wronskian") {
      require(algebra);
      const auto span = wronskian_spanning_set(algebra->ptr, tmax);
      r = jacobi_check<CoeffPoly>(
          [](const CoeffPoly& f, const CoeffPoly& g) { return wronskian_bracket(f, g); }, span);
    } else if (k == "graded") {
      require(algebra);
      const AlgebraPtr& A = algebra->ptr;
      if (!A->graded() || A->is_free()) {
        throw Error(ErrorCode::BadParams, "graded Jacobi needs a graded structure-constant algebra");
      }
      std::vector<AlgElt> span;
      std::vector<int> degs;
      for (const Word& w : A->basis()) {
        span.push_back(AlgElt::monomial(A, w));
        degs.push_back(*A->word_degree(w));
      }
      const int lo = *std::min_element(degs.begin(), degs.end());
      const int hi = *std::max_element(degs.begin(), degs.end());
      auto in = [&](int d) { return lo <= d && d <= hi; };
      // Jacobi triples whose partial degree sums all stay in range.
      auto keep = [&](std::size_t i, std::size_t j, std::size_t l) {
        const int a = degs[i], b = degs[j], c = degs[l];
        return in(a + b) && in(b + c) && in(a + c) && in(a + b + c);
      };
      r = jacobi_check<AlgElt>(
          [](const AlgElt& x, const AlgElt& y) { return graded_binary_bracket(x, y); }, span, keep);
    } else if (k == "table") {
      require(table_json);
      const json doc = json::parse(table_json);
      std::vector<std::string> labels = doc.at("labels").get<std::vector<std::string>>();
      std::map<std::pair<std::size_t, std::size_t>, LieTable::Elt> table;
      for (const auto& [key, terms] : doc.at("table").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "table key must be \"i,j\"");
        const std::size_t i = std::stoul(key.substr(0, comma));
        const std::size_t j = std::stoul(key.substr(comma + 1));
        LieTable::Elt e;
        for (const auto& t : terms) {
          const std::size_t idx = t.at(0).get<std::size_t>();
          const Rational c = parse_rational(t.at(1).get<std::string>());
          if (idx >= labels.size() || i >= labels.size() || j >= labels.size()) {
            throw Error(ErrorCode::BadIndex, "table index out of range");
          }
          if (c != 0) e[idx] += c;
        }
        table[{i, j}] = e;
      }
      const LieTable lie(labels, table);
      std::vector<LieTable::Element> span;
      for (std::size_t i = 0; i < lie.dim(); ++i) span.push_back(lie.basis(i));
      r = jacobi_check<LieTable::Element>(
          [&lie](const LieTable::Element& x, const LieTable::Element& y) { return lie.bracket(x, y); },
          span);
    } else {
      throw Error(ErrorCode::BadParams, "bracket kind must be wronskian, graded or table");
    }
    json doc = report_to_json(r);
    doc["bracket"] = k;
    *pass = r.pass;
    *out_json = dup(doc);
  });
}

fpsl_status fpsl_identity_sabinin_axioms(const fpsl_algebra* algebra, int max_arity, int window,
                                         char** out_json, int* pass) {
  return guarded([&] {
    require(algebra, out_json, pass);
    SabininAxiomsOptions options;
    options.max_arity = max_arity;
    options.window = window != 0;
    const SabininAxiomsReport r = sabinin_axioms_check(algebra->ptr, options);
    *pass = r.pass();
    *out_json = dup(report_to_json(r));
  });
}

fpsl_status fpsl_check_group(const fpsl_algebra* algebra, int truncation, int samples,
                             uint64_t seed, char** out_json, int* is_group) {
  return guarded([&] {
    require(algebra, out_json, is_group);
    const GroupReport r = check_group(algebra->ptr, truncation, samples, seed);
    *is_group = r.verdict == GroupVerdict::Group;
    *out_json = dup(report_to_json(r));
  });
}

fpsl_status fpsl_selftest(uint64_t seed, int flip_closed_sign, const char* only_csv,
                          char** out_json, char** out_table, int* all_pass) {
  return guarded([&] {
    require(all_pass);
    AcceptanceOptions options;
    options.seed = seed;
    options.flip_closed_sign = flip_closed_sign != 0;
    if (only_csv) {
      std::istringstream in(only_csv);
      std::string id;
      while (std::getline(in, id, ',')) {
        if (!id.empty()) options.only.insert(id);
      }
    }
    const auto results = run_acceptance(options);
    bool ok = !results.empty();
    for (const auto& r : results) ok = ok && r.pass;
    *all_pass = ok;
    if (out_json) *out_json = dup(acceptance_to_json(results, options));
    if (out_table) *out_table = dup(acceptance_table(results));
  });
}

}  // extern "C"
