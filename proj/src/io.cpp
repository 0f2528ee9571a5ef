#include "fpsloop/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpsloop/error.hpp"

namespace fpsloop {

namespace {

std::string rational_text(const Rational& r) { return to_string(r); }

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
  throw Error(ErrorCode::ParseError, "rational must be a \"p/q\" string or an integer");
}

std::pair<std::size_t, std::size_t> parse_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "table key '" + key + "' is not \"i,j\"");
  try {
    return {std::stoul(key.substr(0, comma)), std::stoul(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "table key '" + key + "' is not \"i,j\"");
  }
}

Word word_from(const AlgebraPtr& algebra, const json& labels) {
  Word w;
  for (const auto& l : labels) {
    const std::string name = l.get<std::string>();
    auto letter = algebra->find_symbol(name);
    if (!letter) throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + name + "'");
    w.push_back(*letter);
  }
  if (w.empty()) throw Error(ErrorCode::ParseError, "empty word");
  if (!algebra->is_free() && w.size() != 1) {
    // Product of basis elements in a structure-constant algebra.
    AlgElt acc = AlgElt::monomial(algebra, Word(1, w[0]));
    for (std::size_t i = 1; i < w.size(); ++i) acc = acc * AlgElt::monomial(algebra, Word(1, w[i]));
    if (acc.size() != 1 || acc.terms().begin()->second != 1) {
      throw Error(ErrorCode::ParseError, "word does not reduce to a single basis element");
    }
    return acc.terms().begin()->first;
  }
  return w;
}

}  // namespace

// --- algebras ---------------------------------------------------------------

AlgebraPtr algebra_from_json(const json& doc) {
  if (doc.is_string()) return load_algebra(doc.get<std::string>());
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "algebra document must be an object");
  const std::string kind = doc.value("kind", "");
  try {
    if (kind == "builtin") {
      std::string name = doc.at("name").get<std::string>();
      if (doc.contains("params")) {
        const json& p = doc["params"];
        if (name == "ut" || name == "upper_triangular" || name == "split_null") {
          name += ":" + std::to_string(p.at("n").get<int>());
        } else if (name == "laurent" || name == "laurent_window") {
          name += ":" + std::to_string(p.at("a").get<int>()) + ":" +
                  std::to_string(p.at("b").get<int>());
        } else if (name == "free") {
          std::string gens;
          for (const auto& g : p.at("generators")) gens += (gens.empty() ? "" : ",") + g.get<std::string>();
          name += ":" + gens + ":" + std::to_string(p.at("max_word_degree").get<int>());
        }
      }
      return builtin::from_spec(name);
    }
    if (kind == "structure_constants") {
      std::vector<std::string> basis = doc.at("basis").get<std::vector<std::string>>();
      ProductTable table;
      for (const auto& [key, entries] : doc.at("table").items()) {
        SparseVector v;
        for (const auto& e : entries) v.emplace_back(e.at(0).get<std::size_t>(), rational_from(e.at(1)));
        table[parse_key(key)] = std::move(v);
      }
      StructureConstantsOptions options;
      options.name = doc.value("name", "structure_constants");
      options.check_associativity = doc.value("check_associativity", true);
      if (doc.contains("grading")) {
        std::vector<int> grading(basis.size(), 0);
        std::vector<bool> seen(basis.size(), false);
        for (const auto& [label, degree] : doc["grading"].items()) {
          auto it = std::find(basis.begin(), basis.end(), label);
          if (it == basis.end()) throw Error(ErrorCode::UnknownSymbol, "grading names unknown basis label '" + label + "'");
          grading[it - basis.begin()] = degree.get<int>();
          seen[it - basis.begin()] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
          throw Error(ErrorCode::GradingViolation, "grading must cover every basis element");
        }
        options.grading = std::move(grading);
      }
      return Algebra::from_structure_constants(std::move(basis), table, options);
    }
    if (kind == "free_truncated") {
      std::vector<Generator> gens;
      for (const auto& g : doc.at("generators")) {
        gens.push_back({g.at(0).get<std::string>(), g.at(1).get<int>()});
      }
      FreeTruncatedOptions options;
      options.multilinear = doc.value("multilinear", false);
      options.name = doc.value("name", "free_truncated");
      return Algebra::free_truncated(std::move(gens), doc.at("max_word_degree").get<int>(), options);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed algebra document: ") + e.what());
  }
  throw Error(ErrorCode::ParseError, "unknown algebra kind '" + kind + "'");
}

json algebra_to_json(const AlgebraPtr& algebra) {
  json doc;
  doc["name"] = algebra->name();
  if (algebra->is_free()) {
    doc["kind"] = "free_truncated";
    json gens = json::array();
    for (const auto& g : algebra->generators()) gens.push_back({g.name, g.degree});
    doc["generators"] = gens;
    doc["max_word_degree"] = algebra->max_word_degree();
    doc["multilinear"] = algebra->multilinear();
    return doc;
  }
  doc["kind"] = "structure_constants";
  doc["basis"] = algebra->labels();
  json table = json::object();
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    for (std::size_t j = 0; j < algebra->dim(); ++j) {
      const SparseVector& entry = algebra->table_entry(i, j);
      if (entry.empty()) continue;
      json row = json::array();
      for (const auto& [k, c] : entry) row.push_back({k, rational_text(c)});
      table[std::to_string(i) + "," + std::to_string(j)] = row;
    }
  }
  doc["table"] = table;
  if (algebra->grading()) {
    json grading = json::object();
    for (std::size_t i = 0; i < algebra->dim(); ++i) grading[algebra->labels()[i]] = (*algebra->grading())[i];
    doc["grading"] = grading;
  }
  return doc;
}

AlgebraPtr load_algebra(std::string_view source) {
  std::string text(source);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return algebra_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, std::string("algebra JSON: ") + e.what());
    }
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    try {
      return algebra_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, text + ": " + e.what());
    }
  }
  return builtin::from_spec(text);
}

// --- elements ---------------------------------------------------------------

json element_to_json(const AlgElt& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json labels = json::array();
    for (Letter l : w) labels.push_back(x.algebra()->labels()[l]);
    terms.push_back({rational_text(c), labels});
  }
  return terms;
}

AlgElt element_from_json(const AlgebraPtr& algebra, const json& terms) {
  AlgElt out(algebra);
  if (!terms.is_array()) throw Error(ErrorCode::ParseError, "element terms must be an array");
  try {
    for (const auto& t : terms) out.add_term(word_from(algebra, t.at(1)), rational_from(t.at(0)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed term: ") + e.what());
  }
  return out;
}

json graded_to_json(const GradedElt& x) {
  return json{{"degree", x.degree}, {"terms", element_to_json(x.value)}};
}

GradedElt graded_from_json(const AlgebraPtr& algebra, const json& doc) {
  try {
    return make_graded(doc.at("degree").get<int>(), element_from_json(algebra, doc.at("terms")));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed graded element: ") + e.what());
  }
}

// --- series -----------------------------------------------------------------

json series_to_json(const Series& s) {
  json coeffs = json::object();
  for (int k = 1; k <= s.truncation(); ++k) {
    if (!s.coeff(k).is_zero()) coeffs[std::to_string(k)] = element_to_json(s.coeff(k));
  }
  return json{{"algebra", s.algebra()->name()},
              {"truncation", s.truncation()},
              {"graded", s.graded_mode()},
              {"coeffs", coeffs}};
}

Series series_from_json(const json& doc, AlgebraPtr algebra) {
  try {
    if (!algebra) algebra = algebra_from_json(doc.at("algebra"));
    const int T = doc.at("truncation").get<int>();
    const bool graded = doc.value("graded", algebra->graded());
    Series s(algebra, T, graded);
    if (doc.contains("coeffs")) {
      for (const auto& [key, terms] : doc["coeffs"].items()) {
        int k = 0;
        try {
          k = std::stoi(key);
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "coefficient key '" + key + "' is not an integer");
        }
        if (k < 1) throw Error(ErrorCode::ParseError, "coefficient slots start at 1");
        if (k > T) continue;
        s.set_coeff(k, s.coeff(k) + element_from_json(algebra, terms));
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series document: ") + e.what());
  }
}

// --- text form --------------------------------------------------------------

namespace {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, const AlgebraPtr& algebra, int T, bool graded)
      : text_(text), algebra_(algebra), series_(algebra, T, graded) {}

  Series run() {
    skip_space();
    std::size_t start = pos_;
    if (read_identifier() != "t") fail(start, "series must start with t");
    skip_space();
    while (pos_ < text_.size()) {
      char sign = text_[pos_];
      if (sign != '+' && sign != '-') fail(pos_, "expected '+' or '-'");
      ++pos_;
      skip_space();
      term(sign == '-' ? Rational(-1) : Rational(1));
      skip_space();
    }
    for (auto& [k, value] : pending_) series_.set_coeff(k, std::move(value));
    return std::move(series_);
  }

 private:
  void term(Rational coeff) {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail(start, "unterminated '('");
      coeff *= rational_at(start, text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      expect_star();
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      coeff *= rational_at(start, text_.substr(pos_, end - pos_));
      pos_ = end;
      expect_star();
    }
    std::optional<AlgElt> word;
    while (true) {
      skip_space();
      std::size_t at = pos_;
      std::string name = read_identifier();
      if (name.empty()) fail(at, "expected a generator or t");
      if (name == "t") {
        if (!word) fail(at, "term has no coefficient word");
        int power = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          std::size_t digits = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (digits == pos_) fail(digits, "expected an exponent");
          power = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
        }
        if (power < 2) fail(at, "exponents of coefficient terms must be >= 2");
        const int slot = power - 1;
        if (slot <= series_.truncation()) {
          AlgElt& acc = pending_.try_emplace(slot, AlgElt(algebra_)).first->second;
          acc += *word * coeff;
        }
        return;
      }
      auto letter = algebra_->find_symbol(name);
      if (!letter) {
        auto [line, col] = position(at);
        throw ParseError(ErrorCode::UnknownSymbol, line, col, "unknown symbol '" + name + "'");
      }
      AlgElt factor = AlgElt::monomial(algebra_, Word(1, *letter));
      word = word ? *word * factor : factor;
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '*') fail(pos_, "expected '*t^k' after the word");
      ++pos_;
    }
  }

  Rational rational_at(std::size_t at, std::string_view s) {
    try {
      return parse_rational(s);
    } catch (const Error&) {
      fail(at, "malformed coefficient '" + std::string(s) + "'");
    }
  }

  void expect_star() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '*') fail(pos_, "expected '*' after the coefficient");
    ++pos_;
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<std::size_t, std::size_t> position(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    auto [line, col] = position(at);
    throw ParseError(ErrorCode::ParseError, line, col, message);
  }

  std::string_view text_;
  AlgebraPtr algebra_;
  Series series_;
  std::map<int, AlgElt> pending_;
  std::size_t pos_ = 0;
};

}  // namespace

Series parse_series(std::string_view text, const AlgebraPtr& algebra, int truncation,
                    bool graded_mode) {
  return SeriesParser(text, algebra, truncation, graded_mode).run();
}

std::string print_series(const Series& s) {
  std::ostringstream out;
  out << "t";
  const AlgebraPtr& algebra = s.algebra();
  for (int k = 1; k <= s.truncation(); ++k) {
    for (const auto& [w, c] : s.coeff(k).terms()) {
      out << (c < 0 ? " - " : " + ");
      const Rational mag = abs(c);
      if (mag != 1) {
        if (mag.get_den() == 1) {
          out << mag.get_str() << "*";
        } else {
          out << "(" << mag.get_str() << ")*";
        }
      }
      out << algebra->word_to_string(w) << "*t^" << (k + 1);
    }
  }
  return out.str();
}

// --- reports ----------------------------------------------------------------

json report_to_json(const IdentityReport& report) {
  json doc{{"status", report.status()}, {"checked", report.checked}};
  if (!report.pass) {
    doc["witness"] = report.witness;
    doc["value"] = report.value;
    doc["identity"] = report.note;
  }
  return doc;
}

json report_to_json(const NSequenceReport& report) {
  json doc{{"status", report.pass ? "PASS" : "FAIL"},
           {"samples", report.samples},
           {"failures", report.failures}};
  doc["min_slack"] = report.min_slack ? json(*report.min_slack) : json("infinity");
  if (!report.first_failure.empty()) doc["first_failure"] = report.first_failure;
  return doc;
}

json report_to_json(const SabininAxiomsReport& report) {
  return json{{"status", report.pass() ? "PASS" : "FAIL"},
              {"antisymmetry", report_to_json(report.antisymmetry)},
              {"exchange", report_to_json(report.exchange)},
              {"cyclic", report_to_json(report.cyclic)}};
}

}  // namespace fpsloop
