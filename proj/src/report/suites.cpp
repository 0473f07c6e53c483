#include "slecft/report/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "slecft/geom/builders.hpp"
#include "slecft/geom/checks.hpp"
#include "slecft/loewner/loewner.hpp"
#include "slecft/spectral/spectral.hpp"
#include "slecft/symbolic/binary_io.hpp"
#include "slecft/symbolic/linalg.hpp"
#include "slecft/verma/verma.hpp"

namespace slecft::report {

using geom::CheckResult;
using geom::Family;
using geom::OperatorTable;
using nlohmann::json;
using sym::CoeffPoly;
using sym::Generator;
using sym::make_rational;
using sym::Partition;
using sym::Rational;

namespace {

CheckRecord from_check(const std::string& name, const CheckResult& r) {
  CheckRecord rec = verdict(name, r.ok, r.witness);
  rec.data["cases"] = r.cases;
  return rec;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

CoeffPoly lam() { return CoeffPoly::gen(Generator::lambda()); }
CoeffPoly cc() { return CoeffPoly::gen(Generator::cc()); }

Rational kappa_of(const RunConfig& cfg) { return sym::parse_rational(cfg.kappa); }

// Level-N determinant at c(kappa) as a polynomial in lambda.
CoeffPoly det_at_kappa(int N, const Rational& kappa) {
  return verma::kac_det(N, std::max(N, verma::kDefaultMaxKacLevel))
      .substitute({{Generator::cc(), sym::central_charge(kappa)}});
}

struct KacFactorization {
  CoeffPoly det;
  CoeffPoly product;
  std::vector<Rational> roots;
};

// det = lead * prod_{rs <= N} (lambda - lambda_{r,s})^{p(N - rs)}
KacFactorization kac_factorization(int N, const Rational& kappa) {
  KacFactorization f;
  f.det = det_at_kappa(N, kappa);
  const auto deg = f.det.degree_in(Generator::lambda());
  Rational lead = f.det.coefficient_of(Generator::lambda(), deg).constant_value();
  f.product = CoeffPoly(lead);
  std::set<Rational> roots;
  for (int r = 1; r <= N; ++r)
    for (int s = 1; r * s <= N; ++s) {
      Rational root = verma::kac_lambda(r, s, kappa);
      roots.insert(root);
      auto mult = static_cast<unsigned>(sym::partitions_of(N - r * s).size());
      f.product *= (lam() - CoeffPoly(root)).pow(mult);
    }
  f.roots.assign(roots.begin(), roots.end());
  return f;
}

bool off_kac(const Rational& weight, const Rational& kappa, int N) {
  for (int r = 1; r <= N; ++r)
    for (int s = 1; r * s <= N; ++s)
      if (verma::kac_lambda(r, s, kappa) == weight) return false;
  return true;
}

Rational first_off_kac_weight(const Rational& kappa, int N) {
  for (long d = 7;; ++d) {
    Rational w = make_rational(1, d);
    if (off_kac(w, kappa, N)) return w;
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"verify-commutators", "gram", "kac", "singular", "operators",
                                                 "reflection", "bubble-limit", "loewner-demo", "report-all"};
  return names;
}

Report run_command(const std::string& command, const RunConfig& cfg, OperatorTable& table) {
  if (command == "verify-commutators") return verify_commutators(cfg, table);
  if (command == "gram") return gram(cfg, table);
  if (command == "kac") return kac(cfg);
  if (command == "singular") return singular(cfg, table);
  if (command == "operators") return operators(cfg, table);
  if (command == "reflection") return reflection(cfg);
  if (command == "bubble-limit") return bubble_limit(cfg);
  if (command == "loewner-demo") return loewner_demo(cfg);
  if (command == "report-all") return report_all(cfg, table);
  throw UnknownCommand("unknown command '" + command + "'");
}

// ---------------------------------------------------------------- symbolic

Report verify_commutators(const RunConfig& cfg, OperatorTable& table) {
  Report rep("verify-commutators", {{"max_mode", cfg.max_mode}, {"max_degree", cfg.max_degree}});
  geom::CommutatorVerifier v(table, cfg.max_degree);
  rep.run("prepare operators", [&] {
    v.prepare(cfg.max_mode);
    return pass("prepare operators", std::to_string(table.size()) + " operators ready");
  });
  json pairs = json::array();
  for (int n = -cfg.max_mode; n <= cfg.max_mode; ++n)
    for (int m = -cfg.max_mode; m <= cfg.max_mode; ++m) {
      std::string name = "[L_" + std::to_string(n) + ", L_" + std::to_string(m) + "]";
      rep.run(name, [&] { return from_check(name, v.check(n, m)); });
      pairs.push_back({n, m});
    }
  rep.extra()["pairs"] = std::move(pairs);
  rep.extra()["monomials"] = geom::test_monomials(cfg.max_degree).size();
  return rep;
}

Report gram(const RunConfig& cfg, OperatorTable& table) {
  Report rep("gram", {{"level", cfg.level}, {"kappa", cfg.kappa}, {"lambda", cfg.lambda}});
  verma::GramMatrix g = verma::gram(cfg.level);
  rep.extra()["gram"] = verma::to_json(g);
  rep.extra()["determinant"] = sym::determinant(g.entries).to_string();
  rep.run("geometric vs algebraic", [&] { return from_check("geometric vs algebraic", geom::gram_consistency(table, cfg.level)); });
  rep.run("B B^-1 = I", [&] {
    auto r = spectral::gram_inverse_check(cfg.level, sym::parse_rational(cfg.lambda), kappa_of(cfg));
    CheckRecord rec = verdict("B B^-1 = I", r.singular || r.identity, r.witness);
    rec.data["singular"] = r.singular;
    return rec;
  });
  return rep;
}

Report kac(const RunConfig& cfg) {
  Report rep("kac", {{"level", cfg.level}, {"kappa", cfg.kappa}});
  const Rational kappa = kappa_of(cfg);
  KacFactorization f = kac_factorization(cfg.level, kappa);
  json roots = json::array();
  for (auto& r : f.roots) roots.push_back(sym::to_short(r));
  rep.extra()["determinant"] = f.det.to_string();
  rep.extra()["central_charge"] = sym::to_short(sym::central_charge(kappa));
  rep.extra()["roots"] = roots;
  rep.run("roots are zeros", [&] {
    for (auto& r : f.roots)
      if (!f.det.substitute({{Generator::lambda(), r}}).is_zero())
        return fail("roots are zeros", "det does not vanish at " + sym::to_short(r));
    return pass("roots are zeros", roots.dump());
  });
  rep.run("Kac product formula", [&] {
    return verdict("Kac product formula", f.det == f.product, "det = " + f.det.to_string());
  });
  return rep;
}

Report singular(const RunConfig& cfg, OperatorTable& table) {
  Report rep("singular", {{"kappa", cfg.kappa}});
  const Rational kappa = kappa_of(cfg);
  const Rational c = sym::central_charge(kappa);
  rep.run("identity in kappa", [&] { return from_check("identity in kappa", geom::singular_vector_identity(table)); });
  json vectors = json::object();
  for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const Rational weight = verma::kac_lambda(r, s, kappa);
    std::string name = "lambda_" + std::to_string(r) + std::to_string(s) + "=" + sym::to_short(weight);
    rep.run(name, [&] {
      auto sv = verma::singular_vectors(2, weight, c);
      if (sv.empty()) return fail(name, "no singular vector at level 2");
      vectors[name] = sv.front().to_string();
      geom::StatePoly one = geom::StatePoly::one();
      CoeffPoly l11 = table.apply(Family::L, -1, table.apply(Family::L, -1, one)).poly;
      CoeffPoly l2 = table.apply(Family::L, -2, one).poly;
      std::map<Generator, Rational> at = {{Generator::lambda(), weight}, {Generator::cc(), c}};
      CoeffPoly geo = (l11 - (lam() * Rational(2) + CoeffPoly(1L)) * make_rational(2, 3) * l2).substitute(at);
      return verdict(name, geo.is_zero(), "verma: " + sv.front().to_string() + "; geometric residue " + geo.to_string());
    });
  }
  rep.extra()["singular_vectors"] = vectors;
  return rep;
}

Report operators(const RunConfig& cfg, OperatorTable& table) {
  const int K = cfg.max_mode, M = cfg.max_index;
  Report rep("operators", {{"max_mode", K}, {"max_index", M}, {"extra_order", cfg.extra_order}});
  rep.run("highest weight", [&] { return from_check("highest weight", geom::highest_weight_check(table, std::max(K, 6))); });
  rep.run("degree constraints", [&] { return from_check("degree constraints", geom::degree_constraints(table, K, M)); });
  for (int ell = 2; ell <= std::max(2, K - 1); ++ell) {
    std::string name = "recursion l=" + std::to_string(ell);
    rep.run(name, [&] { return from_check(name, geom::recursion_check(ell, std::min(M, 6))); });
  }
  rep.run("closed forms", [&] { return from_check("closed forms", geom::explicit_agreement(-1, K, M)); });
  rep.run("solver L_{-2}", [&] { return from_check("solver L_{-2}", geom::solver_agreement(std::min(M, 5))); });
  for (int n = -K; n <= K; ++n) {
    std::string name = "series order L_" + std::to_string(n);
    rep.run(name, [&] { return from_check(name, geom::order_independence(n, M, cfg.extra_order)); });
  }
  json ops = json::array();
  for (auto& e : table.entries())
    ops.push_back({{"family", geom::to_string(e.family)},
                   {"mode", e.mode},
                   {"max_index", e.max_index},
                   {"route", geom::to_string(e.provenance.route)},
                   {"series_order", e.provenance.series_order}});
  rep.extra()["operators"] = ops;
  return rep;
}

// ----------------------------------------------------------------- numeric

Report reflection(const RunConfig& cfg) {
  Report rep("reflection", {{"kappa", cfg.kappa}, {"lambda", cfg.lambda}});
  const double kappa = sym::to_double(kappa_of(cfg));
  const double weight = sym::to_double(sym::parse_rational(cfg.lambda));
  rep.run("evaluate", [&] {
    spectral::Complex R = spectral::reflection_R(weight, kappa);
    rep.extra()["R"] = R.real();
    rep.extra()["R_imag"] = R.imag();
    return pass("evaluate", "R(" + cfg.lambda + ") = " + fmt(R.real()));
  });
  rep.run("R(0) = 1", [&] {
    double err = std::abs(spectral::reflection_R(0.0, kappa) - 1.0);
    return verdict("R(0) = 1", err < 1e-12, "|R(0) - 1| = " + fmt(err));
  });
  rep.run("smallest pole", [&] {
    double pole = spectral::smallest_real_pole(kappa);
    double expected = 0.5 * (1 - kappa / 8);
    rep.extra()["smallest_pole"] = pole;
    return verdict("smallest pole", std::abs(pole - expected) < 1e-9,
                   "pole " + fmt(pole) + " vs (1 - kappa/8)/2 = " + fmt(expected));
  });
  rep.run("level-1 spectral term", [&] {
    spectral::SpectralQuery qy{weight, kappa, Partition::from_parts({1}), Partition::from_parts({1}), {}, {}};
    spectral::Complex v = spectral::spectral_rhs(qy);
    spectral::Complex expected = spectral::reflection_R(weight, kappa) * (2.0 * weight);
    rep.extra()["spectral_rhs_level1"] = {v.real(), v.imag()};
    return verdict("level-1 spectral term", std::abs(v - expected) <= 1e-12 * std::max(1.0, std::abs(expected)),
                   "R B((1),(1)) = " + fmt(v.real()));
  });
  return rep;
}

Report bubble_limit(const RunConfig& cfg) {
  Report rep("bubble-limit", {{"q", cfg.q},
                              {"dtheta", cfg.dtheta},
                              {"x0", cfg.x0},
                              {"radius", cfg.radius},
                              {"theta", cfg.theta},
                              {"tolerance", cfg.tolerance}});
  const double pi = std::acos(-1.0);
  rep.run("annulus kernel limit", [&] {
    double u = spectral::U_of_q(cfg.q);
    double est = pi * (spectral::poisson_disc(1.0, std::polar(1.0, cfg.dtheta)) -
                       spectral::poisson_annulus(cfg.q, 0.0, cfg.dtheta));
    double rel = std::abs(est - u) / std::abs(u);
    rep.extra()["U"] = u;
    rep.extra()["kernel_limit"] = est;
    return verdict("annulus kernel limit", rel < cfg.tolerance, "U(q)=" + fmt(u) + ", relative error " + fmt(rel));
  });
  rep.run("off-centre bubble mass", [&] {
    auto map = spectral::mobius_annulus(cfg.x0, cfg.radius);
    double mass = spectral::bubble_mass(map, cfg.theta);
    double est = spectral::bubble_limit_estimate(map, cfg.theta, cfg.dtheta);
    double rel = std::abs(mass - est) / std::abs(mass);
    rep.extra()["alpha"] = map.alpha;
    rep.extra()["modulus"] = map.q;
    rep.extra()["bubble_mass"] = mass;
    return verdict("off-centre bubble mass", rel < cfg.tolerance, "mass " + fmt(mass) + ", relative error " + fmt(rel));
  });
  rep.run("U at q=1e-30", [&] {
    double u = spectral::U_of_q(1e-30);
    double scaled = u * std::abs(std::log(1e-30));
    return verdict("U at q=1e-30", u < 0.01 && scaled > 0.45 && scaled < 0.55,
                   "U=" + fmt(u) + ", U |log q| = " + fmt(scaled));
  });
  if (!cfg.csv.empty()) {
    std::ofstream out(cfg.csv);
    if (!out) throw ConfigError("cannot write " + cfg.csv);
    std::vector<double> ds;
    for (double d = 0.5; d > 1e-4; d /= 2) ds.push_back(d);
    spectral::write_limit_csv(out, cfg.q, ds);
  }
  return rep;
}

Report loewner_demo(const RunConfig& cfg) {
  Report rep("loewner-demo", {{"t_max", cfg.t_max},
                              {"dt", cfg.dt},
                              {"kappa", cfg.kappa},
                              {"seed", cfg.seed},
                              {"sle_runs", cfg.sle_runs},
                              {"sle_dt", cfg.sle_dt}});
  const double T = cfg.t_max;
  rep.run("forward map, W = 0", [&] {
    auto w = loewner::DrivingFunction::constant(0.0, T, cfg.dt);
    loewner::Complex z(0, 3);
    loewner::Complex got = loewner::forward_map(w, z, T);
    loewner::Complex expected = std::sqrt(z * z + 4.0 * T);
    double err = std::abs(got - expected);
    return verdict("forward map, W = 0", err < 1e-6, "g_T(3i) = " + fmt(got.imag()) + "i, error " + fmt(err));
  });
  rep.run("trace tip, W = 0", [&] {
    auto tr = loewner::trace(loewner::DrivingFunction::constant(0.0, T, cfg.dt));
    loewner::Complex tip = tr.points.back();
    double err = std::abs(tip - loewner::Complex(0, 2 * std::sqrt(T)));
    return verdict("trace tip, W = 0", err < 1e-3, "tip " + fmt(tip.imag()) + "i, error " + fmt(err));
  });
  rep.run("SLE driving variance", [&] {
    const double kappa = sym::to_double(kappa_of(cfg));
    std::vector<double> end(static_cast<std::size_t>(cfg.sle_runs));
    for (int i = 0; i < cfg.sle_runs; ++i)
      end[static_cast<std::size_t>(i)] = loewner::sample_sle_driving(kappa, T, cfg.sle_dt, cfg.seed + static_cast<std::uint64_t>(i)).samples().back();
    // W_0 = 0 and E W_T = 0, so the second moment is the variance.
    double m2 = 0, m4 = 0;
    for (double x : end) {
      m2 += x * x;
      m4 += x * x * x * x;
    }
    const double n = static_cast<double>(end.size());
    m2 /= n;
    m4 /= n;
    double se = std::sqrt((m4 - m2 * m2) / n);
    double z = std::abs(m2 - kappa * T) / se;
    rep.extra()["sle_variance"] = m2;
    return verdict("SLE driving variance", z < 3, "Var(W_T) = " + fmt(m2) + " vs kappa T = " + fmt(kappa * T) +
                                                       " (" + fmt(z) + " standard errors)");
  });
  if (!cfg.csv.empty()) {
    std::ofstream out(cfg.csv);
    if (!out) throw ConfigError("cannot write " + cfg.csv);
    auto w = loewner::sample_sle_driving(sym::to_double(kappa_of(cfg)), T, std::max(cfg.dt, 1e-3), cfg.seed);
    loewner::write_trace_csv(out, loewner::trace(w));
  }
  return rep;
}

// -------------------------------------------------------------- acceptance

CheckRecord criterion(int index, const RunConfig& cfg, OperatorTable& table) {
  const std::string name = "criterion " + std::to_string(index);
  switch (index) {
    case 1: {
      geom::CommutatorVerifier v(table, cfg.max_degree);
      return from_check(name, v.sweep(cfg.max_mode));
    }
    case 2:
      return from_check(name, geom::highest_weight_check(table, 6));
    case 3: {
      verma::GramMatrix g = verma::gram(2);
      sym::PolyMatrix expected = {{lam() * (lam() * Rational(2) + CoeffPoly(1L)) * Rational(4), lam() * Rational(6)},
                                  {lam() * Rational(6), lam() * Rational(4) + cc() * make_rational(1, 2)}};
      if (g.entries != expected) return fail(name, "level-2 Gram matrix differs");
      for (const Rational& kappa : {Rational(2), make_rational(8, 3), Rational(3), Rational(4)}) {
        CoeffPoly det = det_at_kappa(2, kappa);
        CoeffPoly target = lam() * Rational(32) * (lam() - CoeffPoly(verma::kac_lambda(1, 2, kappa))) *
                           (lam() - CoeffPoly(verma::kac_lambda(2, 1, kappa)));
        if (!(det == target)) return fail(name, "kappa=" + sym::to_short(kappa) + ": det " + det.to_string());
      }
      return pass(name, "Gram matrix and determinant for kappa in {2, 8/3, 3, 4}");
    }
    case 4:
      return from_check(name, geom::singular_vector_identity(table));
    case 5: {
      std::size_t cases = 0;
      for (int N = 0; N <= cfg.max_level; ++N) {
        CheckResult r = geom::gram_consistency(table, N);
        cases += r.cases;
        if (!r.ok) return fail(name, r.witness);
      }
      return pass(name, std::to_string(cases) + " entries for N <= " + std::to_string(cfg.max_level));
    }
    case 6:
      return from_check(name, geom::duality_check(table, cfg.max_level));
    case 7: {
      const Rational kappa = 3;
      const Rational c = sym::central_charge(kappa);
      const Rational w = first_off_kac_weight(kappa, cfg.rank_level);
      for (int N = 0; N <= cfg.rank_level; ++N) {
        auto expected = sym::partitions_of(N).size();
        auto got = geom::level_rank(table, w, c, N);
        if (got != expected)
          return fail(name, "lambda=" + sym::to_short(w) + " level " + std::to_string(N) + ": rank " +
                                std::to_string(got) + " != p(N) = " + std::to_string(expected));
      }
      for (auto [r, s] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 3}}) {
        const Rational kw = verma::kac_lambda(r, s, kappa);
        auto got = geom::level_rank(table, kw, c, r * s);
        auto full = sym::partitions_of(r * s).size();
        if (got + 1 > full)
          return fail(name, "no rank deficiency at lambda_" + std::to_string(r) + std::to_string(s));
      }
      return pass(name, "full rank at lambda=" + sym::to_short(w) + "; deficient at lambda_12, lambda_21, lambda_13");
    }
    case 8:
      return from_check(name, geom::degree_constraints(table, cfg.max_mode, cfg.max_index));
    case 9: {
      for (int ell : {2, 3}) {
        CheckResult r = geom::recursion_check(ell, std::min(cfg.max_index, 6));
        if (!r.ok) return fail(name, r.witness);
      }
      return pass(name, "l = 2, 3");
    }
    case 10: {
      std::string w;
      for (double kappa : {2.0, 8.0 / 3.0, 3.0, 4.0}) {
        double r0 = std::abs(spectral::reflection_R(0.0, kappa) - 1.0);
        double pole = spectral::smallest_real_pole(kappa);
        double err = std::abs(pole - 0.5 * (1 - kappa / 8));
        if (r0 >= 1e-12 || err >= 1e-9)
          return fail(name, "kappa=" + fmt(kappa) + ": |R(0)-1|=" + fmt(r0) + ", pole error " + fmt(err));
      }
      return pass(name, "R(0)=1 and pole at (1-kappa/8)/2 for kappa in {2, 8/3, 3, 4}");
    }
    case 11: {
      RunConfig c = cfg;
      c.q = 0.3;
      c.dtheta = 1e-3;
      c.x0 = 0.3;
      c.radius = 0.2;
      c.tolerance = 1e-4;
      c.csv.clear();
      Report r = bubble_limit(c);
      std::string w;
      for (auto& ch : r.checks()) w += (w.empty() ? "" : "; ") + ch.name + ": " + ch.witness;
      return verdict(name, r.ok(), w);
    }
    case 12: {
      RunConfig c = cfg;
      c.t_max = 1.0;
      c.dt = 1e-4;
      c.sle_runs = 10000;
      c.csv.clear();
      Report r = loewner_demo(c);
      std::string w;
      for (auto& ch : r.checks()) w += (w.empty() ? "" : "; ") + ch.name + ": " + ch.witness;
      return verdict(name, r.ok(), w);
    }
    default:
      throw std::out_of_range("criteria are numbered 1..12");
  }
}

Report report_all(const RunConfig& cfg, OperatorTable& table) {
  Report rep("report-all", cfg.to_json());
  for (int i = 1; i <= 12; ++i) rep.run("criterion " + std::to_string(i), [&] { return criterion(i, cfg, table); });
  return rep;
}

// ------------------------------------------------------------------- cache

CacheLoad load_cache(OperatorTable& table, const std::filesystem::path& dir) {
  CacheLoad out;
  auto file = geom::operator_cache_file(dir);
  try {
    out.loaded = table.load(file);
  } catch (const sym::FormatError& e) {
    out.warning = "corrupt cache file " + file.string() + " ignored (" + e.what() + "); operators will be rebuilt";
  }
  return out;
}

Report cache_warm(const RunConfig& cfg, const std::filesystem::path& dir) {
  Report rep("cache-warm", {{"dir", dir.string()},
                            {"max_mode", cfg.max_mode},
                            {"max_index", cfg.max_index},
                            {"extra_order", cfg.extra_order}});
  OperatorTable table;
  CacheLoad l = load_cache(table, dir);
  if (!l.warning.empty()) rep.extra()["warning"] = l.warning;
  auto previous = table.entries();
  for (int n = -cfg.max_mode; n <= cfg.max_mode; ++n)
    for (Family f : {Family::L, Family::Lbar}) table.get(f, n, cfg.max_index);
  rep.run("order independence", [&] {
    std::size_t compared = 0;
    for (auto& e : table.entries()) {
      if (e.family != Family::L) continue;
      geom::DiffOperator cached = table.get(e.family, e.mode, 1);
      geom::DiffOperator deeper = geom::build_L(e.mode, cached.max_index, cfg.extra_order);
      std::string diff = geom::first_difference(cached, deeper, cached.max_index);
      ++compared;
      if (!diff.empty()) return fail("order independence", "L_" + std::to_string(e.mode) + ": " + diff);
    }
    return pass("order independence", std::to_string(compared) + " cached operators unchanged at +" +
                                           std::to_string(cfg.extra_order) + " series order");
  });
  table.save(geom::operator_cache_file(dir));
  rep.extra()["operators"] = table.size();
  rep.extra()["previously_cached"] = previous.size();
  return rep;
}

Report cache_stat(const std::filesystem::path& dir) {
  Report rep("cache-stat", {{"dir", dir.string()}});
  OperatorTable table;
  CacheLoad l = load_cache(table, dir);
  if (!l.warning.empty()) rep.extra()["warning"] = l.warning;
  json ops = json::array();
  for (auto& e : table.entries())
    ops.push_back({{"family", geom::to_string(e.family)},
                   {"mode", e.mode},
                   {"max_index", e.max_index},
                   {"route", geom::to_string(e.provenance.route)},
                   {"series_order", e.provenance.series_order}});
  rep.extra()["present"] = l.loaded;
  rep.extra()["operators"] = ops;
  rep.add(pass("read cache", l.loaded ? std::to_string(ops.size()) + " operators" : "no usable cache"));
  return rep;
}

Report cache_clear(const std::filesystem::path& dir) {
  Report rep("cache-clear", {{"dir", dir.string()}});
  // Only files this tool writes; the directory may be shared.
  auto file = geom::operator_cache_file(dir);
  auto tmp = file;
  tmp += ".tmp";
  std::size_t removed = 0;
  for (const auto& p : {file, tmp}) removed += std::filesystem::remove(p) ? 1 : 0;
  rep.add(verdict("clear", !std::filesystem::exists(file), std::to_string(removed) + " files removed"));
  return rep;
}

}  // namespace slecft::report
