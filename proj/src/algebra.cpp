#include "fpsloop/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "fpsloop/error.hpp"

namespace fpsloop {

namespace {

constexpr std::size_t kMaxLetters = std::numeric_limits<Letter>::max();

void drop_zeros(std::map<Word, Rational>& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

AlgebraPtr Algebra::from_structure_constants(std::vector<std::string> basis_labels,
                                             const ProductTable& table,
                                             StructureConstantsOptions options) {
  const std::size_t n = basis_labels.size();
  if (n == 0) throw Error(ErrorCode::BadParams, "empty basis");
  if (n > kMaxLetters) throw Error(ErrorCode::BadParams, "basis too large");
  {
    std::set<std::string> seen;
    for (const auto& l : basis_labels) {
      if (!seen.insert(l).second) throw Error(ErrorCode::BadParams, "duplicate basis label " + l);
    }
  }

  std::shared_ptr<Algebra> alg(new Algebra());
  alg->kind_ = AlgebraKind::StructureConstants;
  alg->name_ = std::move(options.name);
  alg->labels_ = std::move(basis_labels);
  alg->table_.assign(n * n, {});
  for (const auto& [key, entry] : table) {
    const auto [i, j] = key;
    if (i >= n || j >= n) throw Error(ErrorCode::BadParams, "table index out of range");
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, c] : entry) {
      if (k >= n) throw Error(ErrorCode::BadParams, "table entry index out of range");
      acc[k] += c;
    }
    SparseVector cleaned;
    for (auto& [k, c] : acc) {
      if (c != 0) cleaned.emplace_back(k, c);
    }
    alg->table_[i * n + j] = std::move(cleaned);
  }
  if (options.grading) {
    if (options.grading->size() != n) {
      throw Error(ErrorCode::GradingViolation, "grading must assign a degree to every basis element");
    }
    alg->grading_ = std::move(options.grading);
    alg->verify_grading();
  }
  if (options.check_associativity) alg->verify_associativity();
  alg->detect_unit();
  return alg;
}

AlgebraPtr Algebra::free_truncated(std::vector<Generator> generators, int max_word_degree,
                                   FreeTruncatedOptions options) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGenerators, "free algebra needs generators");
  if (generators.size() > kMaxLetters) throw Error(ErrorCode::BadParams, "too many generators");
  int max_gen = 0;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.degree < 1) throw Error(ErrorCode::BadParams, "generator '" + g.name + "' has degree < 1");
    if (!seen.insert(g.name).second) throw Error(ErrorCode::BadParams, "duplicate generator " + g.name);
    max_gen = std::max(max_gen, g.degree);
  }
  if (max_word_degree < max_gen) {
    throw Error(ErrorCode::BadParams, "max_word_degree below the largest generator degree");
  }
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->kind_ = AlgebraKind::FreeTruncated;
  alg->name_ = std::move(options.name);
  alg->multilinear_ = options.multilinear;
  alg->max_word_degree_ = max_word_degree;
  for (const auto& g : generators) alg->labels_.push_back(g.name);
  alg->generators_ = std::move(generators);
  return alg;
}

std::size_t Algebra::dim() const noexcept {
  return kind_ == AlgebraKind::StructureConstants ? labels_.size() : 0;
}

const SparseVector& Algebra::table_entry(std::size_t i, std::size_t j) const {
  return table_.at(i * labels_.size() + j);
}

void Algebra::verify_grading() const {
  const std::size_t n = labels_.size();
  const auto& deg = *grading_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : table_entry(i, j)) {
        if (deg[k] != deg[i] + deg[j]) {
          throw Error(ErrorCode::GradingViolation,
                      labels_[i] + "*" + labels_[j] + " has a component outside degree " +
                          std::to_string(deg[i] + deg[j]));
        }
      }
    }
  }
}

void Algebra::verify_associativity() const {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = table_entry(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::map<std::size_t, Rational> left, right;
        for (const auto& [p, c] : ij) {
          for (const auto& [q, d] : table_entry(p, k)) left[q] += c * d;
        }
        for (const auto& [p, c] : table_entry(j, k)) {
          for (const auto& [q, d] : table_entry(i, p)) right[q] += c * d;
        }
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        if (left != right) {
          throw Error(ErrorCode::AssociativityViolation,
                      "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k] + " != " +
                          labels_[i] + "*(" + labels_[j] + "*" + labels_[k] + ")");
        }
      }
    }
  }
}

void Algebra::detect_unit() {
  const std::size_t n = labels_.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const SparseVector expect{{i, Rational(1)}};
      ok = table_entry(u, i) == expect && table_entry(i, u) == expect;
    }
    if (ok) {
      unit_index_ = u;
      return;
    }
  }
}

std::optional<int> Algebra::word_degree(const Word& w) const {
  if (is_free()) {
    int d = 0;
    for (Letter l : w) d += generators_[l].degree;
    return d;
  }
  if (!grading_ || w.size() != 1) return std::nullopt;
  return (*grading_)[w[0]];
}

std::optional<Letter> Algebra::find_symbol(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::string Algebra::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += labels_.at(w[i]);
  }
  return out;
}

void Algebra::multiply_words(const Word& u, const Word& v, const Rational& coeff,
                             std::map<Word, Rational>& out) const {
  if (is_free()) {
    int d = 0;
    for (Letter l : u) d += generators_[l].degree;
    for (Letter l : v) d += generators_[l].degree;
    if (d > max_word_degree_) return;
    if (multilinear_) {
      for (Letter l : u) {
        if (v.find(l) != Word::npos) return;
      }
    }
    out[u + v] += coeff;
    return;
  }
  for (const auto& [k, c] : table_entry(u[0], v[0])) {
    out[Word(1, static_cast<Letter>(k))] += coeff * c;
  }
}

std::vector<Word> Algebra::basis() const {
  std::vector<Word> out;
  if (!is_free()) {
    for (std::size_t i = 0; i < labels_.size(); ++i) out.emplace_back(1, static_cast<Letter>(i));
    return out;
  }
  std::vector<std::pair<Word, int>> frontier{{Word{}, 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, d] : frontier) {
      for (std::size_t g = 0; g < generators_.size(); ++g) {
        const int nd = d + generators_[g].degree;
        if (nd > max_word_degree_) continue;
        const Letter l = static_cast<Letter>(g);
        if (multilinear_ && w.find(l) != Word::npos) continue;
        Word nw = w + l;
        out.push_back(nw);
        next.emplace_back(std::move(nw), nd);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Word> Algebra::basis_of_degree(int degree) const {
  std::vector<Word> out;
  if (!is_free()) {
    if (!grading_) return out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if ((*grading_)[i] == degree) out.emplace_back(1, static_cast<Letter>(i));
    }
    return out;
  }
  if (degree < 1 || degree > max_word_degree_) return out;
  std::function<void(Word&, int)> extend = [&](Word& w, int remaining) {
    if (remaining == 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const int gd = generators_[g].degree;
      const Letter l = static_cast<Letter>(g);
      if (gd > remaining) continue;
      if (multilinear_ && w.find(l) != Word::npos) continue;
      w.push_back(l);
      extend(w, remaining - gd);
      w.pop_back();
    }
  };
  Word w;
  extend(w, degree);
  return out;
}

// ---------------------------------------------------------------------------
// AlgElt

AlgElt AlgElt::monomial(AlgebraPtr algebra, Word w, Rational coeff) {
  AlgElt e(std::move(algebra));
  e.add_term(w, coeff);
  return e;
}

AlgElt AlgElt::symbol(const AlgebraPtr& algebra, std::string_view label) {
  auto l = algebra->find_symbol(label);
  if (!l) throw Error(ErrorCode::UnknownSymbol, "no symbol '" + std::string(label) + "'");
  return monomial(algebra, Word(1, *l));
}

void AlgElt::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (algebra_ && algebra_->is_free()) {
    for (Letter l : w) {
      if (l >= algebra_->generators().size()) throw Error(ErrorCode::BadParams, "letter out of range");
    }
    auto d = algebra_->word_degree(w);
    if (w.empty() || *d > algebra_->max_word_degree()) return;
    if (algebra_->multilinear()) {
      std::set<Letter> letters(w.begin(), w.end());
      if (letters.size() != w.size()) return;
    }
  } else if (algebra_) {
    if (w.size() != 1 || w[0] >= algebra_->dim()) throw Error(ErrorCode::BadParams, "invalid basis index");
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgElt::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> AlgElt::homogeneous_degree() const {
  if (terms_.empty() || !algebra_ || !algebra_->graded()) return std::nullopt;
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    auto wd = algebra_->word_degree(w);
    if (!wd) return std::nullopt;
    if (d && *d != *wd) return std::nullopt;
    d = wd;
  }
  return d;
}

bool AlgElt::is_homogeneous_of(int degree) const {
  if (terms_.empty()) return true;
  auto d = homogeneous_degree();
  return d && *d == degree;
}

AlgElt AlgElt::component(int degree) const {
  AlgElt out(algebra_);
  for (const auto& [w, c] : terms_) {
    auto wd = algebra_->word_degree(w);
    if (wd && *wd == degree) out.terms_.emplace(w, c);
  }
  return out;
}

void AlgElt::adopt(const AlgElt& other) {
  if (!algebra_) {
    algebra_ = other.algebra_;
  } else if (other.algebra_ && other.algebra_ != algebra_) {
    throw Error(ErrorCode::AlgebraMismatch, "elements belong to different algebras");
  }
}

AlgElt& AlgElt::operator+=(const AlgElt& other) {
  adopt(other);
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& other) {
  adopt(other);
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AlgElt& AlgElt::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

AlgElt AlgElt::operator-() const {
  AlgElt out(*this);
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

AlgElt operator*(const AlgElt& a, const AlgElt& b) {
  AlgElt out(a.algebra_);
  out.adopt(b);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const Algebra& alg = *out.algebra_;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) alg.multiply_words(u, v, c * d, out.terms_);
  }
  drop_zeros(out.terms_);
  return out;
}

bool operator==(const AlgElt& a, const AlgElt& b) {
  if (a.algebra_ && b.algebra_ && a.algebra_ != b.algebra_) return false;
  return a.terms_ == b.terms_;
}

std::string AlgElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) {
      if (mag.get_den() == 1) {
        os << mag.get_str() << '*';
      } else {
        os << '(' << mag.get_str() << ")*";
      }
    }
    os << algebra_->word_to_string(w);
  }
  return os.str();
}

AlgElt commutator(const AlgElt& x, const AlgElt& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Predicates

CommIdealReport check_s_comm_ideal(const AlgebraPtr& algebra) {
  auto basis = algebra->basis();
  // In a truncated free algebra any product of total weight above the bound
  // vanishes, so basis words are visited by increasing weight and the loops
  // stop as soon as the weight budget is exhausted.
  const bool free = algebra->is_free();
  const int bound = free ? algebra->max_word_degree() : std::numeric_limits<int>::max();
  auto weight = [&](const Word& w) { return free ? *algebra->word_degree(w) : 0; };
  std::stable_sort(basis.begin(), basis.end(),
                   [&](const Word& a, const Word& b) { return weight(a) < weight(b); });
  std::vector<AlgElt> elts;
  std::vector<int> degs;
  for (const auto& w : basis) {
    elts.push_back(AlgElt::monomial(algebra, w));
    degs.push_back(weight(w));
  }
  const std::size_t n = elts.size();

  CommIdealReport report;
  report.s_brackets_zero = true;
  for (std::size_t y = 0; y < n && report.s_brackets_zero; ++y) {
    for (std::size_t z = 0; z < n && report.s_brackets_zero; ++z) {
      if (degs[y] + degs[z] > bound) break;
      const AlgElt yz = commutator(elts[y], elts[z]);
      if (yz.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (degs[x] + degs[y] + degs[z] > bound) break;
        if (!(elts[x] * yz).is_zero()) {
          report.s_brackets_zero = false;
          break;
        }
      }
    }
  }

  report.brackets_s3_zero = true;
  std::vector<std::pair<AlgElt, int>> cubes;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (degs[u] + degs[v] > bound) break;
      AlgElt uv = elts[u] * elts[v];
      if (uv.is_zero()) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (degs[u] + degs[v] + degs[w] > bound) break;
        AlgElt uvw = uv * elts[w];
        if (!uvw.is_zero()) cubes.emplace_back(std::move(uvw), degs[u] + degs[v] + degs[w]);
      }
    }
  }
  for (std::size_t x = 0; x < n && report.brackets_s3_zero; ++x) {
    for (std::size_t y = 0; y < n && report.brackets_s3_zero; ++y) {
      if (degs[x] + degs[y] > bound) break;
      const AlgElt xy = commutator(elts[x], elts[y]);
      if (xy.is_zero()) continue;
      for (const auto& [cube, cd] : cubes) {
        if (degs[x] + degs[y] + cd > bound) continue;
        if (!(xy * cube).is_zero()) {
          report.brackets_s3_zero = false;
          break;
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Built-ins

namespace builtin {

namespace {

void check_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::BadParams, std::string(what) + " requires n >= 1");
}

}  // namespace

AlgebraPtr upper_triangular(int n) {
  check_positive(n, "upper_triangular");
  if (n < 2) throw Error(ErrorCode::BadParams, "upper_triangular requires n >= 2 (no strictly upper entries)");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pos;
  std::vector<int> grading;
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i + k <= n; ++i) {
      const int j = i + k;
      labels.push_back(n < 10 ? "E" + std::to_string(i) + std::to_string(j)
                              : "E" + std::to_string(i) + "_" + std::to_string(j));
      pos.emplace_back(i, j);
      grading.push_back(k);
    }
  }
  ProductTable table;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (pos[a].second != pos[b].first) continue;
      const std::pair<int, int> target{pos[a].first, pos[b].second};
      const auto c = static_cast<std::size_t>(std::find(pos.begin(), pos.end(), target) - pos.begin());
      table[{a, b}] = {{c, Rational(1)}};
    }
  }
  return Algebra::from_structure_constants(std::move(labels), table,
                                           {std::move(grading), true, "ut:" + std::to_string(n)});
}

AlgebraPtr split_null(int n) {
  check_positive(n, "split_null");
  std::vector<std::string> labels;
  for (int a = 0; a <= n; ++a) labels.push_back("e" + std::to_string(a));
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  auto e = [](int a) { return static_cast<std::size_t>(a); };
  auto v = [n](int i) { return static_cast<std::size_t>(n + 1 + i); };
  ProductTable table;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) table[{e(a), e(b)}] = {{e(std::min(a + b, n)), Rational(1)}};
    for (int i = 0; i < n; ++i) {
      if (i + a < n) table[{e(a), v(i)}] = {{v(i + a), Rational(1)}};
      table[{v(i), e(a)}] = {{v(i), Rational(1)}};
    }
  }
  return Algebra::from_structure_constants(std::move(labels), table,
                                           {std::nullopt, true, "split_null:" + std::to_string(n)});
}

AlgebraPtr ev_algebra() {
  ProductTable table;
  table[{0, 0}] = {{0, Rational(1)}};  // e e = e
  table[{1, 0}] = {{1, Rational(1)}};  // v e = v
  return Algebra::from_structure_constants({"e", "v"}, table, {std::nullopt, true, "ev"});
}

std::string laurent_label(int exponent) {
  return exponent < 0 ? "tm" + std::to_string(-exponent) : "t" + std::to_string(exponent);
}

AlgebraPtr laurent_window(int a, int b) {
  if (a > b) throw Error(ErrorCode::BadParams, "laurent_window requires a <= b");
  std::vector<std::string> labels;
  std::vector<int> grading;
  for (int i = a; i <= b; ++i) {
    labels.push_back(laurent_label(i));
    grading.push_back(i);
  }
  ProductTable table;
  for (int i = a; i <= b; ++i) {
    for (int j = a; j <= b; ++j) {
      if (i + j < a || i + j > b) continue;
      table[{static_cast<std::size_t>(i - a), static_cast<std::size_t>(j - a)}] = {
          {static_cast<std::size_t>(i + j - a), Rational(1)}};
    }
  }
  // The window cut is only associative on products that stay inside it.
  return Algebra::from_structure_constants(
      std::move(labels), table,
      {std::move(grading), false, "laurent:" + std::to_string(a) + ":" + std::to_string(b)});
}

AlgebraPtr scalar() {
  ProductTable table;
  table[{0, 0}] = {{0, Rational(1)}};
  return Algebra::from_structure_constants({"one"}, table, {std::nullopt, true, "scalar"});
}

AlgebraPtr free_algebra(std::vector<std::string> names, int max_word_degree) {
  std::vector<Generator> gens;
  for (auto& n : names) gens.push_back({std::move(n), 1});
  std::string name = "free:";
  for (std::size_t i = 0; i < gens.size(); ++i) name += (i ? "," : "") + gens[i].name;
  name += ":" + std::to_string(max_word_degree);
  return Algebra::free_truncated(std::move(gens), max_word_degree, {false, name});
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_int(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::BadParams, "expected an integer, got '" + s + "'");
  }
  return value;
}

}  // namespace

AlgebraPtr from_spec(std::string_view spec) {
  auto parts = split(spec, ':');
  const std::string& head = parts[0];
  auto expect = [&](std::size_t count) {
    if (parts.size() != count) {
      throw Error(ErrorCode::BadParams, "malformed algebra spec '" + std::string(spec) + "'");
    }
  };
  if (head == "ut" || head == "upper_triangular") {
    expect(2);
    return upper_triangular(to_int(parts[1]));
  }
  if (head == "split_null") {
    expect(2);
    return split_null(to_int(parts[1]));
  }
  if (head == "ev" || head == "ev_algebra") {
    expect(1);
    return ev_algebra();
  }
  if (head == "laurent" || head == "laurent_window") {
    expect(3);
    return laurent_window(to_int(parts[1]), to_int(parts[2]));
  }
  if (head == "scalar") {
    expect(1);
    return scalar();
  }
  if (head == "free") {
    expect(3);
    return free_algebra(split(parts[1], ','), to_int(parts[2]));
  }
  throw Error(ErrorCode::BadParams, "unknown builtin algebra '" + head + "'");
}

}  // namespace builtin

}  // namespace fpsloop
