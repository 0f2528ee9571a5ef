// Command-line front end. Talks to the kernel only through fpsloop.h.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpsloop/fpsloop.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

// Failure carrying the process exit code.
struct Exit {
  int code;
};

struct AlgebraHandle {
  fpsl_algebra* p = nullptr;
  ~AlgebraHandle() { fpsl_algebra_free(p); }
};

struct SeriesHandle {
  fpsl_series* p = nullptr;
  SeriesHandle() = default;
  explicit SeriesHandle(fpsl_series* s) : p(s) {}
  SeriesHandle(SeriesHandle&& o) noexcept : p(o.p) { o.p = nullptr; }
  SeriesHandle& operator=(SeriesHandle&&) = delete;
  ~SeriesHandle() { fpsl_series_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  fpsl_string_free(s);
  return out;
}

void check(fpsl_status status) {
  if (status == FPSL_OK) return;
  // The message already names the status and any parse position.
  std::cerr << "error: " << fpsl_last_error() << "\n";
  throw Exit{status == FPSL_ERR_INCONSISTENT ? kExitMath : kExitUsage};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text or JSON, or the contents of a file with that name.
std::string resolve(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[' &&
      std::filesystem::is_regular_file(arg, ec)) {
    return read_file(arg);
  }
  return arg;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    std::cerr << "error: " << what << " is not valid JSON: " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
}

std::vector<int> parse_ints(const std::string& csv, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: " << what << " must be a comma-separated list of integers\n";
      throw Exit{kExitUsage};
    }
  }
  return out;
}

struct Globals {
  std::string algebra;
  int truncation = 6;
  std::uint64_t seed = fpsl_default_seed();
  bool json_out = false;
  int samples = 200;
};

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  fpsl_algebra* algebra() {
    if (!alg_.p) {
      if (g_.algebra.empty()) {
        std::cerr << "error: --algebra is required for this command\n";
        throw Exit{kExitUsage};
      }
      check(fpsl_algebra_load(g_.algebra.c_str(), &alg_.p));
    }
    return alg_.p;
  }

  SeriesHandle series(const std::string& arg) {
    const std::string text = resolve(arg);
    SeriesHandle s;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      check(fpsl_series_from_json(algebra(), text.c_str(), &s.p));
    } else {
      check(fpsl_series_parse(algebra(), text.c_str(), g_.truncation, -1, &s.p));
    }
    return s;
  }

  SeriesHandle series(const json& doc) {
    return doc.is_string() ? series(doc.get<std::string>()) : series(doc.dump());
  }

  void print(const SeriesHandle& s) const {
    char* out = nullptr;
    if (g_.json_out) {
      check(fpsl_series_to_json(s.p, &out));
    } else {
      check(fpsl_series_to_text(s.p, &out));
    }
    std::cout << take(out) << "\n";
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  AlgebraHandle alg_;
};

// Prints a JSON report; without --json only the status line and the
// interesting fields are shown.
int report(const Globals& g, const std::string& doc_text, bool pass) {
  if (g.json_out) {
    std::cout << doc_text << "\n";
  } else {
    const json doc = json::parse(doc_text);
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [key, value] : doc.items()) {
      if (key == "status") continue;
      std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
  }
  return pass ? kExitPass : kExitMath;
}

int run_binary(Session& s, fpsl_binop op, const std::string& a, const std::string& b) {
  SeriesHandle x = s.series(a);
  SeriesHandle y = s.series(b);
  SeriesHandle r;
  check(fpsl_series_binary(op, x.p, y.p, &r.p));
  s.print(r);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the substitution loop of noncommutative power series"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--algebra", g.algebra, "builtin spec (ut:3, split_null:2, ev, laurent:-4:4, scalar, free:a,b:3), JSON file or inline JSON");
  app.add_option("--truncation", g.truncation, "truncation order T")->check(CLI::Range(1, 64));
  app.add_option("--seed", g.seed, "random seed");
  app.add_flag("--json", g.json_out, "print JSON");
  app.add_option("--samples", g.samples, "random samples")->check(CLI::PositiveNumber);

  std::string a, b, c;
  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("a", a, "series: text, JSON or file")->required();
    cmd->add_option("b", b, "series: text, JSON or file")->required();
  };

  auto* compose_cmd = app.add_subcommand("compose", "substitution product a o b");
  add_pair(compose_cmd);
  auto* star_cmd = app.add_subcommand("star", "product a * b");
  add_pair(star_cmd);
  auto* bullet_cmd = app.add_subcommand("bullet", "bullet product");
  add_pair(bullet_cmd);
  auto* lin_cmd = app.add_subcommand("linearized", "linearized composition");
  add_pair(lin_cmd);
  auto* comm_cmd = app.add_subcommand("commutator", "loop commutator [a, b] = (b o a) \\ (a o b)");
  add_pair(comm_cmd);

  std::string side = "left";
  bool divide_star = false;
  auto* divide_cmd = app.add_subcommand("divide", "left division a \\ b or right division a / b");
  add_pair(divide_cmd);
  divide_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  divide_cmd->add_flag("--star", divide_star, "divide for the * product");

  auto* assoc_cmd = app.add_subcommand("associator", "loop associator and plain associator defect");
  add_pair(assoc_cmd);
  assoc_cmd->add_option("c", c, "series: text, JSON or file")->required();

  auto* depth_cmd = app.add_subcommand("depth", "first nonzero slot of a series");
  depth_cmd->add_option("a", a, "series: text, JSON or file")->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "multilinear brackets");
  bracket_cmd->require_subcommand(1);
  std::string indices_csv, elts_path, method = "closed";
  int deg_y = 0, deg_z = 0;
  auto* closed_cmd = bracket_cmd->add_subcommand("closed", "closed-form bracket <x_1..x_n; y, z>");
  closed_cmd->add_option("--I", indices_csv, "degrees of x_1..x_n, e.g. 1,2");
  closed_cmd->add_option("--elts", elts_path, "JSON with xs, y, z")->required();
  closed_cmd->add_option("--y-degree", deg_y, "degree of y when given as bare terms");
  closed_cmd->add_option("--z-degree", deg_z, "degree of z when given as bare terms");
  closed_cmd->add_option("--method", method, "closed or recursive")->check(CLI::IsMember({"closed", "recursive"}));
  std::string degrees_csv;
  int fy = 1, fz = 1;
  auto* filt_cmd = bracket_cmd->add_subcommand("filtration", "bracket read off the loop");
  filt_cmd->add_option("--degrees", degrees_csv, "degrees of x_1..x_n");
  filt_cmd->add_option("--y", fy, "degree of y")->required();
  filt_cmd->add_option("--z", fz, "degree of z")->required();

  std::string dev_base, dev_indices, dev_args;
  auto* dev_cmd = app.add_subcommand("deviation", "iterated commutator/associator deviation");
  dev_cmd->add_option("--base", dev_base, "comm or assoc")->required()->check(CLI::IsMember({"comm", "assoc"}));
  dev_cmd->add_option("--indices", dev_indices, "slot indices, e.g. 1,4");
  dev_cmd->add_option("--args", dev_args, "JSON array of series (text or documents)")->required();

  int kn = 1, km = 3;
  std::string target = "ba";
  auto* klopsch_cmd = app.add_subcommand("klopsch", "lambda, mu with [a,A] o [b,B] = target in slot m");
  klopsch_cmd->add_option("--n", kn, "n >= 1")->required();
  klopsch_cmd->add_option("--m", km, "m >= n + 2")->required();
  klopsch_cmd->add_option("--target", target, "ab or ba")->check(CLI::IsMember({"ab", "ba"}));

  auto* identity_cmd = app.add_subcommand("identity", "Lie-type identity checks");
  identity_cmd->require_subcommand(1);
  int st_n = 5, tmax = 3;
  auto* st_cmd = identity_cmd->add_subcommand("st", "standard identity St_n on the Wronskian algebra");
  st_cmd->add_option("--n", st_n, "2..7")->required();
  st_cmd->add_option("--tmax", tmax, "largest power of t");
  std::string jacobi_kind = "wronskian", table_path;
  auto* jacobi_cmd = identity_cmd->add_subcommand("jacobi", "antisymmetry and Jacobi");
  jacobi_cmd->add_option("--bracket", jacobi_kind, "wronskian, graded or table")
      ->check(CLI::IsMember({"wronskian", "graded", "table"}));
  jacobi_cmd->add_option("--tmax", tmax, "largest power of t (wronskian)");
  jacobi_cmd->add_option("--table", table_path, "bracket table JSON (table)");
  int max_arity = 3;
  bool window = false;
  auto* axioms_cmd = identity_cmd->add_subcommand("sabinin-axioms", "antisymmetry, exchange and cyclic axioms");
  axioms_cmd->add_option("--max-arity", max_arity, "0..4");
  axioms_cmd->add_flag("--window", window, "skip tuples leaving the degree window");

  auto* group_cmd = app.add_subcommand("check-group", "is the loop over the algebra a group");

  bool flip = false;
  std::string only;
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  self_cmd->add_flag("--flip-closed-sign", flip, "negative control: negate closed-form brackets");
  self_cmd->add_option("--only", only, "criterion ids, e.g. 9,11");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Session s(g);
  try {
    if (*compose_cmd) return run_binary(s, FPSL_COMPOSE, a, b);
    if (*star_cmd) return run_binary(s, FPSL_STAR, a, b);
    if (*bullet_cmd) return run_binary(s, FPSL_BULLET, a, b);
    if (*lin_cmd) return run_binary(s, FPSL_LINEARIZED, a, b);
    if (*comm_cmd) return run_binary(s, FPSL_LOOP_COMMUTATOR, a, b);
    if (*divide_cmd) {
      fpsl_binop op = side == "left" ? (divide_star ? FPSL_STAR_LEFT_DIVIDE : FPSL_LEFT_DIVIDE)
                                     : (divide_star ? FPSL_STAR_RIGHT_DIVIDE : FPSL_RIGHT_DIVIDE);
      return run_binary(s, op, a, b);
    }
    if (*assoc_cmd) {
      SeriesHandle x = s.series(a), y = s.series(b), z = s.series(c);
      SeriesHandle r;
      check(fpsl_series_associator(x.p, y.p, z.p, &r.p));
      char* defect = nullptr;
      check(fpsl_series_associator_defect(x.p, y.p, z.p, &defect));
      const json d = json::parse(take(defect));
      if (g.json_out) {
        char* rj = nullptr;
        check(fpsl_series_to_json(r.p, &rj));
        std::cout << json{{"associator", json::parse(take(rj))}, {"defect", d}}.dump(2) << "\n";
      } else {
        char* rt = nullptr;
        check(fpsl_series_to_text(r.p, &rt));
        std::cout << "associator: " << take(rt) << "\n"
                  << "associative: " << (d.at("zero").get<bool>() ? "yes" : "no") << "\n";
      }
      return kExitPass;
    }
    if (*depth_cmd) {
      SeriesHandle x = s.series(a);
      int d = 0;
      check(fpsl_series_depth(x.p, &d));
      if (g.json_out) {
        std::cout << json{{"depth", d < 0 ? json("infinity") : json(d)}}.dump() << "\n";
      } else {
        std::cout << (d < 0 ? std::string("infinity") : std::to_string(d)) << "\n";
      }
      return kExitPass;
    }
    if (*closed_cmd) {
      const std::vector<int> degs = parse_ints(indices_csv, "--I");
      json doc = parse_json(resolve(elts_path), "--elts");
      if (!doc.contains("xs") || !doc.contains("y") || !doc.contains("z")) {
        std::cerr << "error: --elts needs xs, y and z\n";
        return kExitUsage;
      }
      // Bare term arrays take their degrees from the flags.
      if (!degs.empty() && degs.size() != doc["xs"].size()) {
        std::cerr << "error: --I has " << degs.size() << " entries but xs has " << doc["xs"].size() << "\n";
        return kExitUsage;
      }
      for (std::size_t k = 0; k < doc["xs"].size(); ++k) {
        json& x = doc["xs"][k];
        if (x.is_array()) {
          if (degs.empty()) {
            std::cerr << "error: --I is required when xs are bare term lists\n";
            return kExitUsage;
          }
          x = json{{"degree", degs[k]}, {"terms", x}};
        }
      }
      if (doc["y"].is_array()) doc["y"] = json{{"degree", deg_y}, {"terms", doc["y"]}};
      if (doc["z"].is_array()) doc["z"] = json{{"degree", deg_z}, {"terms", doc["z"]}};
      char* out = nullptr;
      check(fpsl_bracket_closed(s.algebra(), doc.dump().c_str(), method.c_str(), &out));
      std::cout << take(out) << "\n";
      return kExitPass;
    }
    if (*filt_cmd) {
      const std::vector<int> degs = parse_ints(degrees_csv, "--degrees");
      char* out = nullptr;
      check(fpsl_bracket_filtration(degs.data(), degs.size(), fy, fz, g.truncation, &out));
      const std::string text = take(out);
      const bool agrees = json::parse(text).at("agrees").get<bool>();
      std::cout << text << "\n";
      return agrees ? kExitPass : kExitMath;
    }
    if (*dev_cmd) {
      const std::vector<int> idx = parse_ints(dev_indices, "--indices");
      const json list = parse_json(resolve(dev_args), "--args");
      if (!list.is_array()) {
        std::cerr << "error: --args must be a JSON array\n";
        return kExitUsage;
      }
      std::vector<SeriesHandle> held;
      std::vector<const fpsl_series*> ptrs;
      held.reserve(list.size());
      for (const auto& item : list) {
        held.push_back(s.series(item));
        ptrs.push_back(held.back().p);
      }
      SeriesHandle r;
      check(fpsl_deviation(dev_base.c_str(), idx.data(), idx.size(), ptrs.data(), ptrs.size(), &r.p));
      s.print(r);
      return kExitPass;
    }
    if (*klopsch_cmd) {
      char* out = nullptr;
      check(fpsl_klopsch(kn, km, target == "ba", &out));
      std::cout << take(out) << "\n";
      return kExitPass;
    }
    if (*st_cmd) {
      char* out = nullptr;
      int pass = 0;
      check(fpsl_identity_st(s.algebra(), st_n, tmax, &out, &pass));
      return report(g, take(out), pass);
    }
    if (*jacobi_cmd) {
      std::string table;
      if (jacobi_kind == "table") {
        if (table_path.empty()) {
          std::cerr << "error: --table is required with --bracket table\n";
          return kExitUsage;
        }
        table = resolve(table_path);
      }
      char* out = nullptr;
      int pass = 0;
      fpsl_algebra* alg = jacobi_kind == "table" ? nullptr : s.algebra();
      check(fpsl_identity_jacobi(alg, jacobi_kind.c_str(), tmax, table.empty() ? nullptr : table.c_str(),
                                 &out, &pass));
      return report(g, take(out), pass);
    }
    if (*axioms_cmd) {
      char* out = nullptr;
      int pass = 0;
      check(fpsl_identity_sabinin_axioms(s.algebra(), max_arity, window, &out, &pass));
      return report(g, take(out), pass);
    }
    if (*group_cmd) {
      char* out = nullptr;
      int is_group = 0;
      check(fpsl_check_group(s.algebra(), g.truncation, g.samples, g.seed, &out, &is_group));
      const std::string text = take(out);
      if (g.json_out) {
        std::cout << text << "\n";
      } else {
        const json doc = json::parse(text);
        std::cout << doc.at("verdict").get<std::string>() << " (" << doc.at("nonassociative")
                  << " of " << doc.at("samples") << " sampled triples nonassociative, seed "
                  << doc.at("seed") << ")\n";
        if (doc.contains("witness")) {
          const auto& w = doc.at("witness");
          std::cout << "  a = " << w.at(0).get<std::string>() << "\n  b = " << w.at(1).get<std::string>()
                    << "\n  c = " << w.at(2).get<std::string>() << "\n  (ab)c - a(bc) = "
                    << doc.at("defect").get<std::string>() << "\n";
        }
      }
      return kExitPass;
    }
    if (*self_cmd) {
      char* out_json = nullptr;
      char* out_table = nullptr;
      int all_pass = 0;
      check(fpsl_selftest(g.seed, flip, only.c_str(), &out_json, &out_table, &all_pass));
      const std::string doc = take(out_json);
      const std::string table = take(out_table);
      std::cout << (g.json_out ? doc : table);
      if (g.json_out) std::cout << "\n";
      return all_pass ? kExitPass : kExitMath;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
