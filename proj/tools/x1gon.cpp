// x1gon: command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "x1gon/cusps.hpp"
#include "x1gon/gonality.hpp"
#include "x1gon/lattice.hpp"
#include "x1gon/modeq.hpp"
#include "x1gon/ntheory.hpp"

using namespace x1gon;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kCacheFormat = "v1";

struct RunConfig {
  std::string cache_dir;
  uint64_t seed = 1;
  std::string lll_delta = "99/100";
  long search_budget = 200;
  long precision_bits = 128;
  std::string output = "text";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
  r.canonicalize();
  return r;
}

void validate(const RunConfig& c) {
  Rational d = parse_rational(c.lll_delta);
  if (d <= Rational(1, 4) || d > 1) throw UsageError("lll_delta must lie in (1/4, 1]");
  if (c.search_budget < 1) throw UsageError("search_budget must be >= 1");
  if (c.precision_bits < 64) throw UsageError("precision_bits must be >= 64");
  if (c.output != "text" && c.output != "json" && c.output != "csv") throw UsageError("output: text, json or csv");
}

void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw UsageError("bad config line: " + line);
      continue;
    }
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    try {
      if (k == "cache_dir") c.cache_dir = v;
      else if (k == "seed") c.seed = std::stoull(v);
      else if (k == "lll_delta") c.lll_delta = v;
      else if (k == "search_budget") c.search_budget = std::stol(v);
      else if (k == "precision_bits") c.precision_bits = std::stol(v);
      else if (k == "output") c.output = v;
      else throw UsageError("unknown config key " + k);
    } catch (const std::logic_error&) {
      throw UsageError("bad value for " + k);
    }
  }
}

void atomic_write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << text;
  }
  fs::rename(tmp, path);
}

std::string join(const std::vector<long>& v, const char* sep = " ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

lattice::SearchOptions search_options(const RunConfig& c) {
  lattice::SearchOptions o;
  o.budget = c.search_budget;
  o.seed = c.seed;
  o.delta = parse_rational(c.lll_delta);
  return o;
}

// search result, cached by level, seed, budget and delta
lattice::SearchResult cached_search(int N, const RunConfig& c) {
  auto o = search_options(c);
  fs::path path;
  if (!c.cache_dir.empty()) {
    std::string d = o.delta.get_str();
    for (auto& ch : d)
      if (ch == '/') ch = '_';
    path = fs::path(c.cache_dir) / "search" /
           ("X1_" + std::to_string(N) + "_s" + std::to_string(o.seed) + "_b" + std::to_string(o.budget) + "_d" + d +
            "_" + kCacheFormat + ".json");
    std::ifstream in(path);
    if (in) {
      try {
        auto j = json::parse(in);
        lattice::SearchResult r;
        r.degree = j.at("degree");
        r.exponents = j.at("exponents").get<std::vector<long>>();
        r.divisor = j.at("divisor").get<std::vector<long>>();
        r.restarts = j.at("restarts");
        return r;
      } catch (const std::exception&) {
      }
    }
  }
  auto L = lattice::UnitLattice::from_table(cusps::divisor_table(N));
  auto r = lattice::search_min_degree(L, o);
  if (!path.empty()) {
    json j;
    j["level"] = N;
    j["degree"] = r.degree;
    j["exponents"] = r.exponents;
    j["divisor"] = r.divisor;
    j["restarts"] = r.restarts;
    atomic_write(path, j.dump() + "\n");
  }
  return r;
}

// smallest prime not dividing N
long good_prime(int N) {
  for (long p = 2;; ++p)
    if (nt::is_prime((uint64_t)p) && N % p) return p;
}

int cmd_equations(int N, const RunConfig& c) {
  auto F = modeq::modular_equation_F(N);
  if (c.output == "json") {
    json j;
    j["level"] = N;
    j["F"] = F.str();
    if (N >= 10) j["f"] = modeq::f_poly(N).num.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "F_" << N << "(b,c) = " << F.str() << "\n";
    if (N >= 10) std::cout << "f_" << N << "(x,y) = " << modeq::f_poly(N).num.str() << "\n";
  }
  return 0;
}

int cmd_divisors(int N, const RunConfig& c) {
  auto T = cusps::divisor_table(N);
  if (c.output == "json") {
    json j;
    j["level"] = N;
    json labels = json::array();
    for (auto& o : cusps::orbits(N)) labels.push_back({{"label", o.label}, {"degree", o.degree}});
    j["orbits"] = labels;
    json rows = json::array();
    for (size_t i = 0; i < T.rows.size(); ++i) rows.push_back({{"k", i + 2}, {"divisor", T.rows[i]}});
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else if (c.output == "csv") {
    std::cout << "k";
    for (auto& o : cusps::orbits(N)) std::cout << ",C" << o.label;
    std::cout << "\n";
    for (size_t i = 0; i < T.rows.size(); ++i) std::cout << i + 2 << "," << join(T.rows[i], ",") << "\n";
  } else {
    std::cout << cusps::to_rowvec(T);
  }
  return 0;
}

int cmd_search(int N, long certify, const RunConfig& c) {
  auto r = cached_search(N, c);
  json floor = nullptr;
  if (certify > 0) {
    auto L = lattice::UnitLattice::from_table(cusps::divisor_table(N));
    long d = std::min(certify, r.degree - 1);
    if (d < 1) {
      floor = r.degree;
    } else {
      auto u = lattice::unit_up_to_degree(L, d);
      if (!u.exists) floor = d + 1;
    }
  }
  json j;
  j["level"] = N;
  j["degree"] = r.degree;
  j["exponents"] = r.exponents;
  j["certified_floor"] = floor;
  if (c.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "level " << N << "\ndegree " << r.degree << "\nexponents " << join(r.exponents) << "\n";
    std::cout << "certified_floor " << (floor.is_null() ? std::string("none") : floor.dump()) << "\n";
  }
  return 0;
}

int cmd_classgroup(int N, const RunConfig& c) {
  auto L = lattice::UnitLattice::from_table(cusps::divisor_table(N));
  auto G = lattice::class_group_quotient(L);
  std::vector<std::string> inv;
  for (auto& x : G.invariants) inv.push_back(x.get_str());
  if (c.output == "json") {
    json j;
    j["level"] = N;
    j["invariants"] = inv;
    j["free_rank"] = G.free_rank;
    j["order"] = G.order().get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "level " << N << "\ninvariants";
    for (auto& s : inv) std::cout << " " << s;
    std::cout << "\nfree_rank " << G.free_rank << "\norder " << G.order().get_str() << "\n";
  }
  return 0;
}

int cmd_bounds(int N, std::optional<long> q, const RunConfig& c) {
  gonality::BoundReport R;
  R.N = N;
  auto s = cached_search(N, c);
  R.upper = s.degree;
  R.exponents = s.exponents;
  R.lower_abramovich = gonality::abramovich_bound(N, gonality::lambda_kim_sarnak());
  if (R.lower_abramovich > R.upper) throw Inconsistency("index lower bound exceeds the unit degree");
  if (q) {
    auto C = gonality::count_places_fq(N, *q, 1);
    R.lower_pigeonhole = std::make_pair(*q, gonality::pigeonhole_bound(*q, C.rational()));
  }
  auto t = gonality::table1_degree(N);
  R.exact = N <= gonality::kTable1Exact && t && *t == R.upper;
  auto imp = gonality::improvement_factor(N, R.upper);
  if (c.output == "json") {
    auto j = json::parse(R.to_json());
    j["lower_selberg"] = gonality::abramovich_bound(N, gonality::lambda_selberg());
    j["improvement_factor"] = imp.factor.get_str();
    j["level_class"] = gonality::level_class_name(imp.level_class);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "level " << N << "\nupper " << R.upper << "\nlower_kim_sarnak " << R.lower_abramovich
              << "\nlower_selberg " << gonality::abramovich_bound(N, gonality::lambda_selberg());
    if (R.lower_pigeonhole)
      std::cout << "\nlower_pigeonhole q=" << R.lower_pigeonhole->first << " " << R.lower_pigeonhole->second;
    std::cout << "\nimprovement_factor " << imp.factor.get_str() << " (" << gonality::level_class_name(imp.level_class)
              << ")\nstatus " << (R.exact ? "exact" : "bounded") << "\n";
  }
  return 0;
}

int cmd_census(int N, long q, int maxdeg, const RunConfig& c) {
  auto C = gonality::count_places_fq(N, q, maxdeg);
  if (c.output == "json") {
    json j;
    j["level"] = N;
    j["q"] = q;
    json d = json::object(), cu = json::object();
    for (auto [k, v] : C.degree_counts) d[std::to_string(k)] = v;
    for (auto [k, v] : C.cusp_counts) cu[std::to_string(k)] = v;
    j["degree_counts"] = d;
    j["cusp_counts"] = cu;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "degree,places,cusps\n";
    for (auto [k, v] : C.degree_counts) std::cout << k << "," << v << "," << C.cusp_counts.at(k) << "\n";
  }
  return 0;
}

int cmd_plan(int N, long q, long d, const std::string& out) {
  auto P = gonality::plan_lower_bound(N, q, d);
  std::string text = P.to_json() + "\n";
  if (out.empty()) std::cout << text;
  else atomic_write(fs::absolute(out), text);
  return 0;
}

// degree-d unit census over a range of levels
int cmd_census_table(int from, int to, long dmin, long dmax, const RunConfig&) {
  std::cout << "N,d,exists,exponents\n";
  for (int N = from; N <= to; ++N)
    for (long d = dmin; d <= dmax; ++d) {
      auto u = gonality::degree_d_unit_census(N, d);
      std::cout << N << "," << d << "," << (u.exists ? "yes" : "no") << "," << join(u.exponents) << "\n";
    }
  return 0;
}

int cmd_table1(int upto, const RunConfig& c) {
  std::cout << "N,upper,lower_ks,lower_pigeonhole,status\n";
  for (int N = 10; N <= upto; ++N) {
    auto s = cached_search(N, c);
    long ks = gonality::abramovich_bound(N, gonality::lambda_kim_sarnak());
    long p = good_prime(N);
    long ph = gonality::pigeonhole_bound(p, gonality::count_places_fq(N, p, 1).rational());
    auto t = gonality::table1_degree(N);
    bool exact = N <= gonality::kTable1Exact && t && *t == s.degree;
    std::cout << N << "," << s.degree << "," << ks << "," << ph << "," << (exact ? "exact" : "bounded") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"x1gon: gonality bounds for X_1(N)"};
  app.require_subcommand(1);
  std::string config_path, cache_flag, delta_flag, output_flag;
  std::optional<uint64_t> seed_flag;
  std::optional<long> budget_flag, prec_flag;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--cache", cache_flag, "cache directory");
  app.add_option("--seed", seed_flag, "random seed");
  app.add_option("--delta", delta_flag, "LLL parameter, rational in (1/4,1]");
  app.add_option("--budget", budget_flag, "search restarts");
  app.add_option("--precision", prec_flag, "working precision in bits");
  app.add_option("--format", output_flag, "text, json or csv");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "same as --format json");

  int level = 0, from = 10, to = 40, upto = 40;
  long q = 2, maxdeg = 1, target = 0, certify = 0, dmin = 5, dmax = 8;
  std::optional<long> qopt;
  std::string out;
  auto lvl = [&](CLI::App* s) { s->add_option("--level,-N", level, "level N")->required()->check(CLI::Range(1, 100000)); };
  // options may be given before or after the subcommand
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", seed_flag);
    s->add_option("--budget", budget_flag);
    s->add_option("--delta", delta_flag);
    s->add_option("--format", output_flag);
    s->add_flag("--json", json_flag);
  };
  auto* eq = app.add_subcommand("equations", "modular equation F_N and model polynomial f_N");
  lvl(eq), common(eq);
  auto* dv = app.add_subcommand("divisors", "divisor table of f_2 .. f_{N/2+1}");
  lvl(dv), common(dv);
  auto* se = app.add_subcommand("search", "randomized LLL search for a unit of small degree");
  lvl(se), common(se);
  se->add_option("--certify-upto", certify, "certify that no unit of degree <= D exists");
  auto* cg = app.add_subcommand("classgroup", "cuspidal class group");
  lvl(cg), common(cg);
  auto* bo = app.add_subcommand("bounds", "upper and lower gonality bounds");
  lvl(bo), common(bo);
  bo->add_option("--q", qopt, "prime for the point-count bound");
  auto* ce = app.add_subcommand("census", "places over F_q by degree");
  lvl(ce), common(ce);
  ce->add_option("--q", q)->required();
  ce->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 24));
  auto* pl = app.add_subcommand("plan", "lower-bound proof plan");
  lvl(pl), common(pl);
  pl->add_option("--q", q)->required();
  pl->add_option("--target", target, "show no function of degree <= target")->required();
  pl->add_option("--out", out, "write the plan here");
  auto* ct = app.add_subcommand("census-table", "degree-d unit census over a range of levels");
  common(ct);
  ct->add_option("--from", from);
  ct->add_option("--to", to);
  ct->add_option("--dmin", dmin);
  ct->add_option("--dmax", dmax);
  auto* t1 = app.add_subcommand("table1", "CSV of bounds for N = 10 .. upto");
  common(t1);
  t1->add_option("--upto", upto)->check(CLI::Range(10, 250));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (const char* env = std::getenv("X1GON_CACHE"); env && *env) cfg.cache_dir = env;
    if (!cache_flag.empty()) cfg.cache_dir = cache_flag;
    if (seed_flag) cfg.seed = *seed_flag;
    if (budget_flag) cfg.search_budget = *budget_flag;
    if (prec_flag) cfg.precision_bits = *prec_flag;
    if (!delta_flag.empty()) cfg.lll_delta = delta_flag;
    if (!output_flag.empty()) cfg.output = output_flag;
    if (json_flag) cfg.output = "json";
    validate(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!cfg.cache_dir.empty()) ::setenv("X1GON_CACHE", cfg.cache_dir.c_str(), 1);
  else ::unsetenv("X1GON_CACHE");

  try {
    if (*eq) return cmd_equations(level, cfg);
    if (*dv) return cmd_divisors(level, cfg);
    if (*se) return cmd_search(level, certify, cfg);
    if (*cg) return cmd_classgroup(level, cfg);
    if (*bo) return cmd_bounds(level, qopt, cfg);
    if (*ce) return cmd_census(level, q, (int)maxdeg, cfg);
    if (*pl) return cmd_plan(level, q, target, out);
    if (*ct) return cmd_census_table(from, to, dmin, dmax, cfg);
    if (*t1) return cmd_table1(upto, cfg);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "InvalidArgument: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
