// Command-line front end: exact Hurwitz-type counts, closed-form
// reconstruction, pruning transforms, intersection numbers, reference
// tables, and the verification suites.
//
// Exit codes: 0 success, 1 error or failed verification, 2 enumeration
// budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hurwitz/combinatorics.hpp"
#include "hurwitz/cut_and_join.hpp"
#include "hurwitz/fatgraph.hpp"
#include "hurwitz/gw.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/pruning.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/verify.hpp"
#include "json.hpp"

namespace {

using namespace hurwitz;
using ordered_json = nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "json";
  std::string cache_path;
  bool verify_cache = false;
  unsigned long budget = 100'000'000UL;
};

void emit_record(const CommonOptions& opt, const MuTuple& mu,
                 const ordered_json& record, const std::string& text_line) {
  if (opt.format == "json") {
    std::cout << record.dump() << "\n";
  } else if (opt.format == "csv") {
    for (size_t i = 0; i < mu.size(); ++i) std::cout << "mu" << i + 1 << ",";
    std::cout << "value\n";
    for (long m : mu) std::cout << m << ",";
    std::cout << record.at("value").get<std::string>() << "\n";
  } else {
    std::cout << text_line << "\n";
  }
}

// Loads the recursion cache on entry and persists it on exit.
class CachedEngine {
 public:
  explicit CachedEngine(const CommonOptions& opt) : opt_(opt) {
    if (!opt_.cache_path.empty()) {
      std::ifstream probe(opt_.cache_path);
      if (probe.good()) {
        auto report = engine_.load_cache(opt_.cache_path, opt_.verify_cache);
        if (report.mismatches > 0)
          throw DomainError("cache verification found " +
                            std::to_string(report.mismatches) + " mismatches");
      }
    }
  }
  ~CachedEngine() {
    if (!opt_.cache_path.empty()) {
      try {
        engine_.save_cache(opt_.cache_path);
      } catch (...) {
      }
    }
  }
  CutAndJoinEngine& get() { return engine_; }

 private:
  CommonOptions opt_;
  CutAndJoinEngine engine_;
};

int run_compute(const CommonOptions& opt, const std::string& family, long a,
                int g, const MuTuple& mu) {
  Budget budget{opt.budget};
  ordered_json rec;
  std::string text;
  if (family == "pruned-simple" || family == "pruned-orbifold") {
    CachedEngine cached(opt);
    long aa = family == "pruned-simple" ? 1 : a;
    if (mu_sum(mu) % aa != 0) {
      rec["value"] = "0";
      emit_record(opt, mu, rec, "value = 0 (|mu| not divisible by a)");
      return 0;
    }
    long m = transposition_count_orbifold(aa, g, mu);
    Rat value = family == "pruned-simple"
                    ? cached.get().pruned_simple(g, mu)
                    : cached.get().pruned_orbifold(aa, g, mu);
    rec["value"] = rat_to_string(value);
    rec["m"] = std::to_string(m);
    rec["K"] = rat_to_string(Rat(value * factorial(m)));
    text = "value = " + rec["value"].get<std::string>() + " (m = " +
           std::to_string(m) + ", K = " + rec["K"].get<std::string>() + ")";
  } else if (family == "simple" || family == "orbifold") {
    long aa = family == "simple" ? 1 : a;
    if (mu_sum(mu) % aa != 0) {
      rec["value"] = "0";
      emit_record(opt, mu, rec, "value = 0 (|mu| not divisible by a)");
      return 0;
    }
    long m = transposition_count_orbifold(aa, g, mu);
    Int count = family == "simple"
                    ? count_simple(g, mu, /*pruned=*/false, budget)
                    : count_orbifold(aa, g, mu, /*pruned=*/false, budget);
    Rat value = make_rat(count, factorial(m));
    rec["value"] = rat_to_string(value);
    rec["m"] = std::to_string(m);
    rec["H"] = count.get_str();
    text = "value = " + rec["value"].get<std::string>() + " (m = " +
           std::to_string(m) + ", H = " + count.get_str() + ")";
  } else if (family == "belyi" || family == "pruned-belyi") {
    FatgraphMode mode =
        family == "belyi" ? FatgraphMode::All : FatgraphMode::Pruned;
    FatgraphCount count =
        enumerate_fatgraphs(g, mu, mode, budget, list_graphs);
    rec["value"] = rat_to_string(count.weighted);
    rec["value_mu_weighted"] =
        rat_to_string(Rat(count.weighted * mu_product(mu)));
    if (list_graphs) {
      ordered_json graphs = ordered_json::array();
      for (const auto& cls : count.classes) {
        ordered_json gr;
        gr["X"] = cls.representative.darts();
        gr["tau0"] = cls.representative.tau0.images();
        gr["tau1"] = cls.representative.tau1.images();
        gr["genus"] = cls.genus;
        gr["boundaries"] = cls.boundaries;
        gr["aut"] = cls.aut.get_str();
        graphs.push_back(gr);
      }
      rec["graphs"] = graphs;
    }
    text = "value = " + rec["value"].get<std::string>() +
           " (mu-weighted = " + rec["value_mu_weighted"].get<std::string>() +
           ")";
  } else if (family == "cycle") {
    Rat value = count_cycle(g, mu, budget);
    rec["value"] = rat_to_string(value);
    text = "value = " + rec["value"].get<std::string>();
  } else if (family == "gw") {
    Rat value = gw_eval(g, mu);
    rec["value"] = rat_to_string(value);
    text = "value = " + rec["value"].get<std::string>();
  } else {
    throw DomainError("compute does not support family " + family);
  }
  emit_record(opt, mu, rec, text);
  return 0;
}

int run_poly(const CommonOptions& opt, const std::string& family, long a,
             int g, int n) {
  CachedEngine cached(opt);
  if (family == "pruned-simple") {
    Poly p = cached.get().pruned_simple_polynomial(g, n);
    if (opt.format == "json") {
      std::cout << p.to_json() << "\n";
    } else if (opt.format == "csv") {
      for (int v = 0; v < n; ++v) std::cout << "exp" << v + 1 << ",";
      std::cout << "coef\n";
      for (const auto& [e, c] : p.terms()) {
        for (int v = 0; v < n; ++v) std::cout << e[v] << ",";
        std::cout << rat_to_string(c) << "\n";
      }
    } else {
      std::cout << p.to_string("mu") << "\n";
    }
    return 0;
  }
  if (family == "pruned-orbifold") {
    QuasiPoly qp = cached.get().pruned_orbifold_quasipolynomial(a, g, n);
    if (opt.format == "json") {
      std::cout << qp.to_json() << "\n";
    } else {
      for (const auto& [residues, poly] : qp.branches) {
        std::cout << "residues (";
        for (size_t i = 0; i < residues.size(); ++i)
          std::cout << (i ? "," : "") << residues[i];
        std::cout << "): " << poly.to_string("mu") << "\n";
      }
    }
    return 0;
  }
  throw DomainError(
      "poly supports the pruned-simple and pruned-orbifold families only");
}

int run_transform(const CommonOptions& opt, const std::string& family, long a,
                  const std::string& direction, int g, const MuTuple& mu) {
  Budget budget{opt.budget};
  Direction dir;
  if (direction == "pruned-to-full")
    dir = Direction::PrunedToFull;
  else if (direction == "full-to-pruned")
    dir = Direction::FullToPruned;
  else
    throw DomainError("unknown direction " + direction);

  Rat value;
  if (family == "simple" || family == "orbifold") {
    CachedEngine cached(opt);
    long aa = family == "simple" ? 1 : a;
    ValueSource source;
    if (dir == Direction::PrunedToFull) {
      // pruned side from the recursion
      source = [&](int gg, const MuTuple& m2) {
        return std::optional<Rat>(
            aa == 1 ? cached.get().pruned_simple(gg, m2)
                    : cached.get().pruned_orbifold(aa, gg, m2));
      };
    } else {
      // full side from the enumeration oracle
      source = [&](int gg, const MuTuple& m2) {
        if (mu_sum(m2) % aa != 0) return std::optional<Rat>(Rat(0));
        long mm = transposition_count_orbifold(aa, gg, m2);
        Int c = aa == 1 ? count_simple(gg, m2, /*pruned=*/false, budget)
                        : count_orbifold(aa, gg, m2, /*pruned=*/false, budget);
        return std::optional<Rat>(make_rat(c, factorial(mm)));
      };
    }
    value = aa == 1 ? transform_simple(dir, g, mu, source)
                    : transform_orbifold(aa, dir, g, mu, source);
  } else if (family == "belyi") {
    FatgraphMode mode = dir == Direction::PrunedToFull ? FatgraphMode::Pruned
                                                       : FatgraphMode::All;
    ValueSource source = [&](int gg, const MuTuple& m2) {
      return std::optional<Rat>(
          enumerate_fatgraphs(gg, m2, mode, budget).weighted);
    };
    value = transform_belyi(dir, g, mu, source);
  } else {
    throw DomainError("transform supports simple, orbifold, belyi");
  }
  ordered_json rec;
  rec["value"] = rat_to_string(value);
  emit_record(opt, mu, rec, "value = " + rec["value"].get<std::string>());
  return 0;
}

int run_intersect(const CommonOptions& opt, int g, const std::vector<int>& d) {
  Rat value = wk_intersection(g, d);
  ordered_json rec;
  rec["g"] = g;
  rec["d"] = d;
  rec["lambda"] = 0;
  rec["value"] = rat_to_string(value);
  if (opt.format == "json") {
    std::cout << rec.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "g,";
    for (size_t i = 0; i < d.size(); ++i) std::cout << "d" << i + 1 << ",";
    std::cout << "lambda,value\n" << g << ",";
    for (int x : d) std::cout << x << ",";
    std::cout << "0," << rat_to_string(value) << "\n";
  } else {
    std::cout << "value = " << rat_to_string(value) << "\n";
  }
  return 0;
}

int run_table(const CommonOptions& opt, const std::string& which) {
  Budget budget{opt.budget};
  ordered_json rows = ordered_json::array();
  if (which == "khat") {
    CutAndJoinEngine engine;
    for (const auto& row : khat_table()) {
      Poly computed = engine.pruned_simple_polynomial(row.g, row.n);
      Poly reduced(row.n);
      bool divisible =
          computed.divide_by_monomial(Exponents(row.n, 1), &reduced);
      bool match = divisible && reduced == row.reduced;
      ordered_json r;
      r["g"] = row.g;
      r["n"] = row.n;
      r["stored"] = row.reduced.to_string("mu");
      r["recomputed"] = divisible ? reduced.to_string("mu") : "(not divisible)";
      r["match"] = match;
      rows.push_back(r);
    }
  } else if (which == "q") {
    for (const auto& row : q_table()) {
      Poly computed = q_polynomial(row.d);
      ordered_json r;
      r["d"] = row.d;
      r["stored"] = row.q.to_string("v");
      r["recomputed"] = computed.to_string("v");
      r["match"] = computed == row.q;
      rows.push_back(r);
    }
  } else if (which == "gw") {
    for (const auto& row : gw_table()) {
      // cross-checks: the string-type relations on instances touching this
      // row, and the cycle count on the (0,3) rows
      bool consistent = true;
      if (row.g == 0 && row.n == 3) {
        for (long x = 1; x <= 5; ++x)
          for (long y = 1; y <= 5; ++y) {
            MuTuple probe = {x, y, 1};
            if (mu_sum(probe) % 2 == 0) continue;
            bool triangle = x < y + 1 && y < x + 1 && 1 < x + y;
            NPComparison cmp = compare_N_P(probe, budget);
            if (cmp.equal != triangle) consistent = false;
          }
      }
      if (gw_supported(row.g, row.n - 1)) {
        for (const MuTuple& probe : std::vector<MuTuple>{
                 {1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3},
                 {2, 4}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}}) {
          if (static_cast<int>(probe.size()) != row.n - 1) continue;
          for (GwRelation rel : {GwRelation::Zero, GwRelation::One})
            if (gw_relations_check(row.g, probe, rel) == CheckStatus::False)
              consistent = false;
        }
      }
      ordered_json r;
      r["g"] = row.g;
      r["n"] = row.n;
      r["odd_counts"] = row.odd_counts;
      r["stored"] = row.poly.to_string("mu");
      r["match"] = consistent;
      rows.push_back(r);
    }
  } else {
    throw DomainError("table --which must be khat, q, or gw");
  }
  if (opt.format == "json") {
    std::cout << rows.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      for (auto it = r.begin(); it != r.end(); ++it)
        std::cout << it.key() << "="
                  << (it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
                  << "  ";
      std::cout << "\n";
    }
  }
  bool all_match = true;
  for (const auto& r : rows)
    if (!r.at("match").get<bool>()) all_match = false;
  return all_match ? 0 : 1;
}

int run_verify_cmd(const CommonOptions& opt, const std::string& suite) {
  Budget budget{opt.budget};
  auto results = run_verify(suite, budget);
  bool all_ok = true;
  for (const auto& s : results) {
    for (const auto& c : s.checks) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << s.name << ": "
                << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
      if (!c.passed) all_ok = false;
    }
  }
  std::cout << (all_ok ? "all checks passed" : "FAILURES present") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation engine for Hurwitz-type enumerations"};
  app.require_subcommand(1);

  CommonOptions opt;
  if (const char* env = std::getenv("HURWITZ_CACHE")) opt.cache_path = env;

  std::string family = "pruned-simple";
  long a = 1;
  int g = 0;
  int n = 0;
  MuTuple mu;
  std::vector<int> d;
  std::string direction = "pruned-to-full";
  std::string which = "khat";
  std::string suite = "all";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache", opt.cache_path,
                    "cache file (default: HURWITZ_CACHE env var)");
    cmd->add_flag("--verify-cache", opt.verify_cache,
                  "revalidate cache entries against recomputation");
    cmd->add_option("--budget", opt.budget, "enumeration budget ceiling");
  };

  CLI::App* compute = app.add_subcommand("compute", "one exact value");
  compute->add_option("--family", family)->required();
  compute->add_option("--a", a);
  compute->add_option("--g", g);
  compute->add_option("--mu", mu, "ramification profile")
      ->delimiter(',')
      ->required();
  add_common(compute);

  CLI::App* poly = app.add_subcommand("poly", "closed-form reconstruction");
  poly->add_option("--family", family)->required();
  poly->add_option("--a", a);
  poly->add_option("--g", g)->required();
  poly->add_option("--n", n)->required();
  add_common(poly);

  CLI::App* transform = app.add_subcommand("transform", "pruning transforms");
  transform->add_option("--family", family)->required();
  transform->add_option("--a", a);
  transform->add_option("--direction", direction)
      ->check(CLI::IsMember({"pruned-to-full", "full-to-pruned"}));
  transform->add_option("--g", g)->required();
  transform->add_option("--mu", mu)->delimiter(',')->required();
  add_common(transform);

  CLI::App* intersect =
      app.add_subcommand("intersect", "psi-class intersection numbers");
  intersect->add_option("--g", g)->required();
  intersect->add_option("--d", d, "exponent vector")
      ->delimiter(',')
      ->required();
  add_common(intersect);

  CLI::App* table = app.add_subcommand("table", "reference tables");
  table->add_option("--which", which)
      ->check(CLI::IsMember({"khat", "q", "gw"}));
  add_common(table);

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(opt, family, a, g, mu);
    if (poly->parsed()) return run_poly(opt, family, a, g, n);
    if (transform->parsed())
      return run_transform(opt, family, a, direction, g, mu);
    if (intersect->parsed()) return run_intersect(opt, g, d);
    if (table->parsed()) return run_table(opt, which);
    if (verify->parsed()) {
      // the suites run fixed desk-scale grids; give them room unless the
      // user asked for a specific ceiling
      if (verify->count("--budget") == 0) opt.budget = 10'000'000'000'000UL;
      return run_verify_cmd(opt, suite);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
