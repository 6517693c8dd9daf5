#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/cli_support.hpp"
#include "bergman/moment.hpp"
#include "bergman/profiles.hpp"
#include "bergman/report.hpp"
#include "bergman/spectra.hpp"
#include "bergman/symplectic.hpp"
#include "bergman/toeplitz.hpp"

using namespace bergman;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 2;
  double lambda = 0.0;
  int degree = -1;
  std::string action = "elliptic";
  int k = 1;
  std::string beta;
  std::string partition;
  std::vector<std::string> profiles;
  std::vector<std::string> profile_args;
  std::string grid_xi;
  std::string grid_y;
  int quad_radial = 0;
  int quad_angular = 0;
  std::uint64_t seed = 1;
  std::string out;
  double tol = -1.0;
  std::vector<std::string> points;
  bool check_invariance = false;
  bool counterexample = false;
  bool diagonal = false;
  std::string inject_fault;
};

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool above = false;  // pass when residual > tol instead of below
  long count = 0;

  bool pass() const { return above ? residual > tol : residual < tol; }
  json to_json() const {
    return {{"name", name}, {"residual", residual}, {"tol", tol},
            {"criterion", above ? "greater" : "less"}, {"count", count},
            {"status", pass() ? "pass" : "fail"}};
  }
};

MasgAction resolve_action(const Config& c) {
  MasgKind kind;
  try {
    kind = parse_masg_kind(c.action);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return make_action(kind, c.n, c.k);
}

BetaBasis resolve_beta(const Config& c, const MasgAction& g) {
  if (!c.beta.empty() && !c.partition.empty()) throw ConfigError("give either --beta or --partition, not both");
  if (!c.beta.empty()) {
    BetaBasis b = BetaBasis::from_rows(parse_rows(c.beta));
    if (b.n() != g.n) throw ConfigError("--beta rows must have length n");
    return b;
  }
  if (!c.partition.empty()) {
    const Partition p = parse_int_list(c.partition);
    BetaBasis b = BetaBasis::canonical(1);
    switch (g.kind) {
      case MasgKind::QuasiElliptic: b = partition_beta_elliptic(p); break;
      case MasgKind::QuasiParabolic:
      case MasgKind::QuasiHyperbolic: b = partition_beta_parabolic(p); break;
      case MasgKind::QuasiNilpotent: b = partition_beta_quasinilpotent(p, g.n); break;
      case MasgKind::Nilpotent: throw ConfigError("--partition is not defined for the nilpotent action");
    }
    if (b.n() != g.n) throw ConfigError("--partition must sum to n");
    return b;
  }
  return BetaBasis::canonical(g.n);
}

std::vector<NamedProfile> resolve_profiles(const Config& c, int m, std::size_t fallback_count) {
  std::vector<std::string> names = c.profiles;
  if (names.empty()) names.assign(fallback_count, "const");
  if (!c.profile_args.empty() && c.profile_args.size() != names.size()) {
    throw ConfigError("--profile-args must be given once per --profile");
  }
  std::vector<NamedProfile> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string args = c.profile_args.empty() ? "" : c.profile_args[i];
    out.push_back(make_profile(names[i], parse_profile_params(args), m));
  }
  return out;
}

json config_json(const Config& c, const std::string& command) {
  return {{"command", command}, {"n", c.n}, {"lambda", c.lambda}, {"degree", c.degree},
          {"action", c.action}, {"k", c.k}, {"beta", c.beta}, {"partition", c.partition},
          {"profiles", c.profiles}, {"profile_args", c.profile_args}, {"grid_xi", c.grid_xi},
          {"grid_y", c.grid_y}, {"quad_radial", c.quad_radial}, {"quad_angular", c.quad_angular},
          {"seed", c.seed}, {"tol", c.tol}, {"points", c.points},
          {"check_invariance", c.check_invariance}, {"counterexample", c.counterexample},
          {"diagonal", c.diagonal}, {"inject_fault", c.inject_fault}};
}

json profile_json(const NamedProfile& p) {
  json params = json::object();
  for (const auto& [key, values] : p.params) params[key] = values;
  return {{"name", p.name}, {"params", params}};
}

std::string sibling(const std::string& out, const std::string& suffix) {
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  const std::string stem = (dot != std::string::npos && (slash == std::string::npos || dot > slash)) ? out.substr(0, dot) : out;
  return stem + suffix;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

// ---------------------------------------------------------------- moment

json cmd_moment(const Config& c, std::vector<Check>& checks) {
  const MasgAction g = resolve_action(c);
  const BetaBasis beta = resolve_beta(c, g);
  std::mt19937_64 rng(c.seed);
  std::vector<Point> pts;
  for (const std::string& s : c.points) {
    CVector z;
    try {
      z = parse_point(s);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("--point: ") + e.what());
    }
    if (z.size() != g.n) throw ConfigError("--point must have n coordinates");
    const DomainSpec d{g.domain(), g.n, c.lambda};
    if (!contains(d, z)) {
      throw ConfigError("--point " + s + " is not in the " + std::string(to_string(g.domain())) +
                        " domain of the " + g.label() + " action");
    }
    pts.emplace_back(g.domain(), z);
  }
  if (pts.empty()) {
    for (int i = 0; i < 5; ++i) pts.push_back(random_point(g, rng));
  }
  json rows = json::array();
  const bool orth = beta.is_orthogonal();
  double worst = 0.0;
  for (const Point& z : pts) {
    json row = {{"z", to_json(z.z())}, {"mu_G", to_json(moment_masg(g, z))},
                {"a", to_json(coordinate_functions(g, beta, z))}};
    row["mu_H"] = to_json(orth ? moment_subgroup(g, beta, z) : project_span(beta, moment_masg(g, z)));
    if (c.check_invariance) {
      double r = 0.0;
      for (int t = 0; t < 20; ++t) {
        const Point w = act(g, random_param(g, rng), z);
        r = std::max(r, (moment_masg(g, w) - moment_masg(g, z)).norm());
      }
      row["invariance_residual"] = r;
      worst = std::max(worst, r);
    }
    rows.push_back(row);
  }
  if (c.check_invariance) {
    checks.push_back({"invariance", worst, c.tol > 0 ? c.tol : 1e-10, false, static_cast<long>(pts.size()) * 20});
  }
  return {{"action", g.label()}, {"beta", to_json(beta.matrix())},
          {"mu_H_projection", orth ? "orthogonal" : "span"}, {"points", rows}};
}

// ---------------------------------------------------------------- toeplitz

json cmd_toeplitz(const Config& c, std::vector<Check>& checks) {
  const MasgAction g = resolve_action(c);
  const BetaBasis beta = resolve_beta(c, g);
  const int d = c.degree >= 0 ? c.degree : 8;
  const int radial = c.quad_radial > 0 ? c.quad_radial : (g.n >= 3 ? 16 : kDefaultRadialOrder);
  const int angular = c.quad_angular > 0 ? c.quad_angular : (g.n >= 3 ? 32 : kDefaultAngularOrder);
  const BallRule rule = ball_full_rule(g.n, c.lambda, radial, angular);
  const auto profiles = resolve_profiles(c, beta.m(), 1);

  std::vector<ToeplitzMatrix> mats;
  json symbols = json::array();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    SymbolSpec s{g, beta, profiles[i].fn, profiles[i].name + "#" + std::to_string(i)};
    mats.push_back(assemble_toeplitz(s, d, rule));
    const ToeplitzMatrix& M = mats.back();
    json diag = json::array();
    for (Eigen::Index j = 0; j < M.entries.rows(); ++j) diag.push_back(to_json(M.entries(j, j)));
    json sym = {{"profile", profile_json(profiles[i])}, {"hermitian_residual", M.hermitian_residual()},
                {"off_diagonal_max", M.off_diagonal_max()}, {"diagonal", diag}};
    if (!c.out.empty()) {
      const std::string path = sibling(c.out, "_matrix" + std::to_string(i) + ".csv");
      std::ofstream f(path);
      if (!f) throw ConfigError("cannot write '" + path + "'");
      write_csv(M, f);
      sym["csv"] = path;
    }
    symbols.push_back(sym);
  }
  if (c.counterexample) {
    auto re = [](const CVector& z) { return cplx(z[0].real()); };
    auto im = [](const CVector& z) { return cplx(z[0].imag()); };
    mats.push_back(assemble_toeplitz(BallSymbol(re), "Re z1", d, rule));
    mats.push_back(assemble_toeplitz(BallSymbol(im), "Im z1", d, rule));
  }
  json pairs = json::array();
  const std::size_t np = profiles.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = i + 1; j < np; ++j) {
      json by_degree = json::object();
      for (int dd = 4; dd <= d; dd += 2) {
        by_degree[std::to_string(dd)] = commutator_norm(mats[i].truncate(dd), mats[j].truncate(dd));
      }
      const double r = commutator_norm(mats[i], mats[j]);
      worst = std::max(worst, r);
      pairs.push_back({{"first", i}, {"second", j}, {"commutator_norm", r}, {"by_degree", by_degree}});
    }
  }
  if (g.kind == MasgKind::QuasiElliptic && np >= 2) {
    checks.push_back({"elliptic_commutativity", worst, c.tol > 0 ? c.tol : 1e-10, false, static_cast<long>(pairs.size())});
  }
  json out = {{"action", g.label()}, {"beta", to_json(beta.matrix())}, {"degree", d},
              {"rule", rule.description()}, {"symbols", symbols}, {"pairs", pairs}};
  if (c.counterexample) {
    const double r = commutator_norm(mats[np], mats[np + 1]);
    out["counterexample"] = {{"pair", "Re z1, Im z1"}, {"commutator_norm", r}};
    checks.push_back({"counterexample_noncommuting", r, 0.01, true, 1});
  }
  return out;
}

// ---------------------------------------------------------------- spectrum

json cmd_spectrum(const Config& c, std::vector<Check>& checks) {
  SpectralFamily fam;
  if (c.action == "hyperbolic") {
    throw ConfigError("no spectral formula is implemented for the quasi-hyperbolic family");
  }
  try {
    fam = parse_spectral_family(c.action);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  const int n = c.n;
  const int k = fam == SpectralFamily::QuasiNilpotent ? c.k : 0;
  BetaBasis beta = BetaBasis::canonical(n);
  if (!c.beta.empty()) beta = BetaBasis::from_rows(parse_rows(c.beta));
  if (beta.n() != n) throw ConfigError("--beta rows must have length n");
  const auto profiles = resolve_profiles(c, beta.m(), 1);
  if (profiles.size() != 1) throw ConfigError("spectrum takes a single --profile");
  const int maxdeg = c.degree >= 0 ? c.degree : 6;
  std::vector<SpectrumQuery> grid = standard_grid(fam, n, c.lambda, k, maxdeg);
  const std::vector<double> xis = parse_real_list(c.grid_xi);
  const std::vector<double> ys = parse_real_list(c.grid_y);
  for (double xi : xis) {
    if (!(xi > 0.0)) throw ConfigError("--grid-xi values must be positive");
  }
  if (!xis.empty() && fam != SpectralFamily::Elliptic) {
    // The standard grid at xi = 1 fixes the (p, y') pairs; each requested xi
    // is paired with all of them.
    std::vector<SpectrumQuery> resampled;
    for (double xi : xis) {
      for (const SpectrumQuery& q : grid) {
        if (q.xi != 1.0) continue;
        SpectrumQuery e = q;
        e.xi = xi;
        resampled.push_back(e);
      }
    }
    grid = resampled;
  }
  if (!ys.empty()) {
    std::vector<SpectrumQuery> resampled;
    for (const SpectrumQuery& q : grid) {
      if ((q.yprime.array() != 0.0).any()) continue;
      const Eigen::Index l = q.yprime.size();
      std::vector<std::size_t> digit(static_cast<std::size_t>(l), 0);
      while (true) {
        SpectrumQuery e = q;
        for (Eigen::Index i = 0; i < l; ++i) e.yprime[i] = ys[digit[static_cast<std::size_t>(i)]];
        resampled.push_back(e);
        Eigen::Index i = 0;
        while (i < l && ++digit[static_cast<std::size_t>(i)] == ys.size()) digit[static_cast<std::size_t>(i++)] = 0;
        if (i == l) break;
      }
    }
    grid = resampled;
  }
  if (grid.empty()) throw ConfigError("the requested grid is empty");
  SpectralOrders orders;
  if (c.quad_radial > 0) {
    orders.simplex = c.quad_radial;
    orders.line = c.quad_radial;
  }
  const SpectrumTable table = spectrum_table(
      grid, {Representation::Beta, Representation::Moment, Representation::ABeta}, profiles[0].fn,
      profiles[0].name, beta, orders);
  json out = {{"family", to_string(fam)}, {"profile", profile_json(profiles[0])},
              {"beta", to_json(beta.matrix())}, {"rows", table.rows.size()},
              {"cross_residual", table.cross_residual()}};
  if (!c.out.empty()) {
    const std::string path = sibling(c.out, "_spectrum.csv");
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write '" + path + "'");
    table.write_csv(f);
    out["csv"] = path;
  } else {
    json rows = json::array();
    for (const SpectrumRow& r : table.rows) {
      json vals = json::array();
      for (const cplx& v : r.values) vals.push_back(to_json(v));
      rows.push_back({{"p", r.query.p}, {"xi", r.query.xi}, {"yprime", to_json(r.query.yprime)}, {"values", vals}});
    }
    out["table"] = rows;
  }
  checks.push_back({"cross_representation", table.cross_residual(), c.tol > 0 ? c.tol : 1e-6, false,
                    static_cast<long>(table.rows.size())});
  if (c.diagonal) {
    if (fam != SpectralFamily::Elliptic) throw ConfigError("--diagonal needs the elliptic family");
    const MasgAction g = make_action(MasgKind::QuasiElliptic, n);
    const int radial = c.quad_radial > 0 ? c.quad_radial : kDefaultRadialOrder;
    const int angular = c.quad_angular > 0 ? c.quad_angular : 2 * maxdeg + 4;
    const BallRule rule = ball_full_rule(n, c.lambda, radial, angular + angular % 2);
    const DiagonalComparison cmp = diagonal_vs_gamma(SymbolSpec{g, beta, profiles[0].fn, profiles[0].name},
                                                     maxdeg, rule, orders);
    json diag = json::array();
    for (std::size_t i = 0; i < cmp.basis.size(); ++i) {
      diag.push_back({{"p", cmp.basis[i]}, {"toeplitz", to_json(cmp.diagonal[i])}, {"gamma", to_json(cmp.gamma[i])}});
    }
    out["diagonal"] = {{"rule", rule.description()}, {"max_residual", cmp.max_residual},
                       {"off_diagonal_max", cmp.off_diagonal}, {"entries", diag}};
    checks.push_back({"diagonal_equals_gamma", cmp.max_residual, c.tol > 0 ? c.tol : 1e-8, false,
                      static_cast<long>(cmp.basis.size())});
  }
  return out;
}

// ---------------------------------------------------------------- verify

std::vector<MasgAction> verify_actions(int n) {
  std::vector<MasgAction> out{make_action(MasgKind::QuasiElliptic, n), make_action(MasgKind::QuasiParabolic, n),
                              make_action(MasgKind::QuasiHyperbolic, n), make_action(MasgKind::Nilpotent, n)};
  if (n >= 3) out.push_back(make_action(MasgKind::QuasiNilpotent, n, 1));
  return out;
}

RVector random_direction(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RVector X(n);
  for (int j = 0; j < n; ++j) X[j] = gauss(rng);
  return X;
}

json cmd_verify(const Config& c, std::vector<Check>& checks) {
  if (!c.inject_fault.empty() && c.inject_fault != "mu-sign") {
    throw ConfigError("unknown --inject-fault '" + c.inject_fault + "' (known: mu-sign)");
  }
  const int n = std::max(c.n, 3);
  std::mt19937_64 rng(c.seed);
  const auto actions = verify_actions(n);

  {
    double worst = 0.0;
    long count = 0;
    for (const MasgAction& g : actions) {
      for (int t = 0; t < 20; ++t) {
        const Point z = random_point(g, rng);
        const RVector X = random_direction(n, rng);
        double r;
        if (c.inject_fault == "mu-sign" && g.kind == MasgKind::QuasiElliptic) {
          const CVector field = hamiltonian_field_ball(-moment_dbar(g, X, z), z);
          r = (field - fundamental_field(g, X, z)).norm();
        } else {
          r = verify_moment_property(g, X, z);
        }
        worst = std::max(worst, r);
        ++count;
      }
    }
    checks.push_back({"moment_property", worst, 1e-6, false, count});
  }
  {
    double worst = 0.0;
    long count = 0;
    for (const MasgAction& g : actions) {
      for (int t = 0; t < 200; ++t) {
        const Point z = random_point(g, rng);
        const Point w = act(g, random_param(g, rng), z);
        worst = std::max(worst, (moment_masg(g, w) - moment_masg(g, z)).norm());
        ++count;
      }
    }
    checks.push_back({"invariance", worst, 1e-10, false, count});
  }
  {
    double worst = 0.0;
    long count = 0;
    for (const MasgAction& g : actions) {
      for (int t = 0; t < 50; ++t) {
        const Point w = random_point(g, rng);
        const Point z = act(g, random_param(g, rng), w);
        const OrbitTransport tr = orbit_transport(g, w, z);
        worst = std::max(worst, tr.same_fiber ? tr.residual : 1.0);
        ++count;
      }
    }
    checks.push_back({"fiber_transport", worst, 1e-8, false, count});
  }
  {
    const MasgAction g = make_action(MasgKind::QuasiElliptic, n);
    RMatrix A1 = RMatrix::Zero(1, n), A2 = RMatrix::Zero(2, n);
    A1(0, 0) = 1.0;
    A1(0, 1) = 1.0;
    A2.row(0) = A1.row(0);
    A2(1, 0) = 1.0;
    A2(1, 1) = -1.0;
    const BetaBasis b1(A1), b2(A2);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Point z = random_point(g, rng);
      worst = std::max(worst, (moment_subgroup(g, b1, z) - project_orthogonal(b1, moment_subgroup(g, b2, z))).norm());
    }
    checks.push_back({"projection_nesting", worst, 1e-12, false, 200});
  }
  const auto one = [](const RVector&) { return cplx(1.0); };
  {
    double worst = 0.0;
    long count = 0;
    const SpectralOrders orders;
    for (auto [fam, nn, kk] : {std::tuple{SpectralFamily::Elliptic, 2, 0}, std::tuple{SpectralFamily::Parabolic, 2, 0},
                               std::tuple{SpectralFamily::Nilpotent, 2, 0},
                               std::tuple{SpectralFamily::QuasiNilpotent, 3, 1}}) {
      for (const SpectrumQuery& q : standard_grid(fam, nn, c.lambda, kk, 2)) {
        for (Representation r : {Representation::Beta, Representation::Moment}) {
          worst = std::max(worst, std::abs(evaluate(q, r, one, BetaBasis::canonical(nn), orders) - 1.0));
          ++count;
        }
      }
    }
    checks.push_back({"normalization", worst, 1e-10, false, count});
  }
  {
    // Profiles that depend on u' only through u'/u_n stay smooth in both
    // integration variables.
    const auto smooth2 = [](const RVector& u) {
      const double r = u[0] / u[1];
      return cplx(std::exp(-0.5 * u[1]) / (1.0 + (r - 0.5) * (r - 0.5)));
    };
    const auto smooth3 = [](const RVector& u) {
      const double r = u[0] / u[2], s = u[1] / u[2];
      return cplx(std::exp(-0.5 * u[2]) / (1.0 + r * r + (s - 0.5) * (s - 0.5)));
    };
    double worst = 0.0;
    long count = 0;
    const auto add = [&](const SpectrumTable& t) {
      worst = std::max(worst, t.cross_residual());
      count += static_cast<long>(t.rows.size());
    };
    const std::vector<Representation> reps{Representation::Beta, Representation::Moment, Representation::ABeta};
    add(spectrum_table(standard_grid(SpectralFamily::Elliptic, 2, c.lambda, 0, 3), reps,
                       make_profile("reciprocal", {}, 1).fn, "reciprocal", BetaBasis::from_rows({{1.0, 2.0}})));
    add(spectrum_table(standard_grid(SpectralFamily::Parabolic, 2, c.lambda, 0, 3), reps,
                       make_profile("gaussian", parse_profile_params("w=0.3,0.6;b=-0.5"), 2).fn, "gaussian",
                       BetaBasis::canonical(2)));
    add(spectrum_table(standard_grid(SpectralFamily::Nilpotent, 2, c.lambda), reps, smooth2, "ratio-lorentzian",
                       BetaBasis::canonical(2)));
    add(spectrum_table(standard_grid(SpectralFamily::QuasiNilpotent, 3, c.lambda, 1, 1), reps, smooth3,
                       "ratio-lorentzian", BetaBasis::canonical(3)));
    checks.push_back({"cross_representation", worst, 1e-6, false, count});
  }
  {
    const MasgAction g = make_action(MasgKind::QuasiElliptic, 2);
    const BallRule rule = ball_full_rule(2, c.lambda, 24, 16);
    const SymbolSpec s{g, BetaBasis::from_rows({{1.0, 1.0}}), make_profile("reciprocal", {}, 1).fn, "1-|z|^2"};
    const ToeplitzMatrix M = assemble_toeplitz(s, 4, rule);
    double worst = M.off_diagonal_max();
    for (std::size_t i = 0; i < M.basis.size(); ++i) {
      worst = std::max(worst, std::abs(M.entries(i, i) - gamma_elliptic_defining(2, c.lambda, M.basis[i])));
    }
    checks.push_back({"elliptic_closed_form", worst, 1e-10, false, static_cast<long>(M.basis.size())});
  }
  return {{"dimension", n}, {"actions", actions.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operators, moment maps and spectra on the ball and the Siegel domain"};
  app.require_subcommand(1);
  Config cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "complex dimension")->check(CLI::Range(1, kMaxDim));
    sub->add_option("--lambda", cfg.lambda, "weight parameter, > -1");
    sub->add_option("--degree", cfg.degree, "maximal monomial degree");
    sub->add_option("--action", cfg.action, "elliptic|parabolic|hyperbolic|nilpotent|quasinilpotent");
    sub->add_option("--k", cfg.k, "torus rank of the quasi-nilpotent action");
    sub->add_option("--beta", cfg.beta, "rows of A(beta), e.g. \"1,0;0,1\"");
    sub->add_option("--partition", cfg.partition, "partition giving beta, e.g. \"1,2\"");
    sub->add_option("--profile", cfg.profiles, "profile name (repeatable)");
    sub->add_option("--profile-args", cfg.profile_args, "profile parameters \"key=v,v;key=v\" (repeatable)");
    sub->add_option("--grid-xi", cfg.grid_xi, "xi values, comma separated");
    sub->add_option("--grid-y", cfg.grid_y, "y' component values, comma separated");
    sub->add_option("--quad-radial", cfg.quad_radial, "radial quadrature order");
    sub->add_option("--quad-angular", cfg.quad_angular, "angular quadrature order");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out, "JSON report path");
    sub->add_option("--tol", cfg.tol, "tolerance override");
  };
  CLI::App* moment = app.add_subcommand("moment", "moment maps and coordinate functions at points");
  add_common(moment);
  moment->add_option("--point", cfg.points, "point \"re,im;re,im;...\" (repeatable)");
  moment->add_flag("--check-invariance", cfg.check_invariance, "check mu^G along random orbits");
  CLI::App* toeplitz = app.add_subcommand("toeplitz", "Toeplitz matrices and commutators");
  add_common(toeplitz);
  toeplitz->add_flag("--counterexample", cfg.counterexample, "add the pair (Re z1, Im z1)");
  CLI::App* spectrum = app.add_subcommand("spectrum", "spectral functions over grids");
  add_common(spectrum);
  spectrum->add_flag("--diagonal", cfg.diagonal, "compare with the Toeplitz diagonal (elliptic)");
  CLI::App* verify = app.add_subcommand("verify", "invariant battery");
  add_common(verify);
  verify->add_option("--inject-fault", cfg.inject_fault, "deliberate fault for self-testing (mu-sign)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  std::string command;
  for (CLI::App* sub : {moment, toeplitz, spectrum, verify}) {
    if (sub->parsed()) command = sub->get_name();
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  json result;
  try {
    if (!(cfg.lambda > -1.0)) throw ConfigError("--lambda must exceed -1");
    if (command == "moment") result = cmd_moment(cfg, checks);
    if (command == "toeplitz") result = cmd_toeplitz(cfg, checks);
    if (command == "spectrum") result = cmd_spectrum(cfg, checks);
    if (command == "verify") result = cmd_verify(cfg, checks);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool pass = true;
  json check_list = json::array();
  for (const Check& ch : checks) {
    pass = pass && ch.pass();
    check_list.push_back(ch.to_json());
    std::cerr << (ch.pass() ? "PASS " : "FAIL ") << ch.name << " residual=" << ch.residual << " tol=" << ch.tol
              << "\n";
  }
  const json report = {{"version", kLibraryVersion}, {"config", config_json(cfg, command)},
                       {"result", result}, {"checks", check_list}, {"status", pass ? "pass" : "fail"}};
  const json timing = {{"version", kLibraryVersion}, {"command", command}, {"wall_clock_seconds", seconds}};
  try {
    if (cfg.out.empty()) {
      std::cout << to_json_text(report);
    } else {
      write_text(cfg.out, to_json_text(report));
      write_text(cfg.out + ".timing.json", to_json_text(timing));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  std::cerr << "wall-clock " << seconds << " s\n";
  return pass ? kExitPass : kExitCheckFailed;
}
