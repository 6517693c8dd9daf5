#include "bergman/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace bergman {

namespace {

const double kLogPi = std::log(M_PI);

struct Line {
  std::vector<double> x, w;
};

Line jacobi_line(int N, double a, double b) {
  const QuadratureRule r = gauss_jacobi_01(N, a, b);
  return {r.nodes, r.weights};
}

// Trapezoid rule for the weight exp(-t^2) on [-range, range], nodes at
// (k + offset) h. Exponentially accurate for integrands analytic in a strip,
// which Gauss-Hermite is not once f varies faster than the weight.
Line gaussian_line(double h, double range, double offset) {
  if (!(h > 0.0) || !(range > 0.0)) throw std::invalid_argument("Gaussian axis needs positive step and range");
  Line l;
  const int K = static_cast<int>(std::ceil(range / h));
  for (int k = -K - 1; k <= K; ++k) {
    const double t = (k + offset) * h;
    if (std::abs(t) > range) continue;
    l.x.push_back(t);
    l.w.push_back(h * std::exp(-t * t));
  }
  return l;
}

Line laguerre_line(int N, double alpha, double rate) {
  const QuadratureRule r = orthant_rule({AxisWeight::laguerre(N, alpha, rate)});
  return {r.nodes, r.weights};
}

struct Tensor {
  int dim = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Visits every index tuple of a tensor grid (last index fastest).
template <class F>
void tensor(const std::vector<int>& sizes, F&& visit) {
  std::vector<int> idx(sizes.size(), 0);
  for (int s : sizes) {
    if (s == 0) return;
  }
  while (true) {
    visit(idx);
    int c = static_cast<int>(sizes.size()) - 1;
    for (; c >= 0; --c) {
      if (++idx[c] < sizes[c]) break;
      idx[c] = 0;
    }
    if (c < 0) return;
  }
}

Tensor tensor_of(const std::vector<Line>& lines) {
  Tensor t;
  t.dim = static_cast<int>(lines.size());
  std::vector<int> sizes;
  for (const Line& l : lines) sizes.push_back(static_cast<int>(l.x.size()));
  tensor(sizes, [&](const std::vector<int>& idx) {
    double w = 1.0;
    for (int a = 0; a < t.dim; ++a) {
      t.nodes.push_back(lines[a].x[idx[a]]);
      w *= lines[a].w[idx[a]];
    }
    t.weights.push_back(w);
  });
  return t;
}

int total(const MultiIndex& p) {
  int s = 0;
  for (int x : p) {
    if (x < 0) throw std::invalid_argument("multi-index entries must be non-negative");
    s += x;
  }
  return s;
}

void check_lambda(double lambda) {
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
}

void check_xi(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw std::invalid_argument("xi must be positive");
}

Profile compose(const Profile& f, const BetaBasis& beta) {
  const RMatrix A = beta.matrix();
  return [f, A](const RVector& u) {
    const RVector v = A * u;
    return f(v);
  };
}

// Raw integral of f(A u) r^p x_n^lambda exp(-2 xi (x_n + |r|) - |y' - sqrt(xi) x'|^2) with
//   u = (r / x_n, x' / x_n, 1 / (2 x_n)),
// r_j ~ Laguerre(p_j, 2 xi) and x'_i = (t_i + y'_i) / sqrt(xi) with t_i on the
// half-step trapezoid grid. f varies on the scale of x_n near x_n = 0, so x_n
// uses the exp-sinh rule.
cplx beta_form_integral(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                        const RVector& yprime, double xi, const SpectralOrders& orders) {
  const int k = static_cast<int>(p.size());
  const int l = static_cast<int>(yprime.size());
  const int n = k + l + 1;
  if (beta.n() != n) throw DimensionError("beta vectors must have length n");
  std::vector<Line> lines;
  for (int j = 0; j < k; ++j) lines.push_back(laguerre_line(orders.line, p[j], 2.0 * xi));
  for (int i = 0; i < l; ++i) lines.push_back(gaussian_line(orders.gauss_step, orders.gauss_range, 0.5));
  const Tensor inner = tensor_of(lines);
  const QuadratureRule outer = exp_sinh_rule(orders.de_step);
  const RMatrix& A = beta.matrix();
  const double sq = std::sqrt(xi);
  CompensatedSum<cplx> acc;
  RVector u(n);
  for (std::size_t o = 0; o < outer.size(); ++o) {
    const double xn = outer.nodes[o];
    const double w = outer.weights[o] * std::exp(lambda * std::log(xn) - 2.0 * xi * xn);
    if (w == 0.0) continue;
    u[n - 1] = 0.5 / xn;
    CompensatedSum<cplx> in;
    for (std::size_t q = 0; q < inner.weights.size(); ++q) {
      const double* x = inner.nodes.data() + q * inner.dim;
      for (int j = 0; j < k; ++j) u[j] = x[j] / xn;
      for (int i = 0; i < l; ++i) u[k + i] = (x[k + i] + yprime[i]) / sq / xn;
      const RVector a = A * u;
      in.add(inner.weights[q] * f(a));
    }
    acc.add(w * in.value());
  }
  return acc.value() * std::pow(xi, -0.5 * l);
}

// Raw integral of
//   f(u) u_(1)^p exp(-xi (1 + |u_(1)|) / u_n - |y' - sqrt(xi) u_(2) / (2 u_n)|^2) u_n^{-(lambda+|p|+n+1)}
// over R^k_+ x R^l x R_+, offset by log_scale. For fixed u_n the inner variables
// are u_j = y_j u_n / xi (Gauss-Laguerre with alpha = 0, the factor y^p kept in
// the integrand) and u_(2) = (2 u_n / sqrt(xi)) (t + y') (trapezoid grid
// through 0); the outer variable is u_n = xi t / (1 - t) with Gauss-Jacobi weight
// (1-t)^lambda.
cplx moment_form_integral(const Profile& f, double lambda, const MultiIndex& p, const RVector& yprime,
                          double xi, double log_scale, const SpectralOrders& orders) {
  const int k = static_cast<int>(p.size());
  const int l = static_cast<int>(yprime.size());
  const int n = k + l + 1;
  const int P = total(p);
  std::vector<Line> lines;
  for (int j = 0; j < k; ++j) {
    Line line = laguerre_line(orders.line, 0.0, 1.0);
    for (std::size_t i = 0; i < line.x.size(); ++i) line.w[i] *= std::pow(line.x[i], p[j]);
    lines.push_back(std::move(line));
  }
  for (int i = 0; i < l; ++i) lines.push_back(gaussian_line(orders.gauss_step, orders.gauss_range, 0.0));
  const Tensor inner = tensor_of(lines);
  const Line outer = jacobi_line(orders.outer, lambda, 0.0);
  const double log_xi = std::log(xi);
  const double sq = std::sqrt(xi);
  CompensatedSum<cplx> acc;
  RVector u(n);
  for (std::size_t o = 0; o < outer.x.size(); ++o) {
    const double t = outer.x[o];
    const double un = xi * t / (1.0 - t);
    const double log_un = std::log(un);
    const double log_1mt = std::log1p(-t);
    const double log_factor = log_scale - xi / un - (lambda + P + n + 1.0) * log_un +
                              (P + k) * (log_un - log_xi) + l * (std::log(2.0) + log_un - 0.5 * log_xi) +
                              log_xi - (2.0 + lambda) * log_1mt;
    const double factor = std::exp(log_factor);
    if (factor == 0.0) continue;
    CompensatedSum<cplx> in;
    u[n - 1] = un;
    for (std::size_t q = 0; q < inner.weights.size(); ++q) {
      const double* y = inner.nodes.data() + q * inner.dim;
      for (int j = 0; j < k; ++j) u[j] = y[j] * un / xi;
      for (int i = 0; i < l; ++i) u[k + i] = 2.0 * un / sq * (y[k + i] + yprime[i]);
      in.add(inner.weights[q] * f(u));
    }
    acc.add(outer.w[o] * factor * in.value());
  }
  return acc.value();
}

void check_dims(int n, std::size_t got, std::size_t want, const char* what) {
  if (n < 1 || n > kMaxDim) throw DimensionError("dimension out of range");
  if (got != want) throw DimensionError(what);
}

}  // namespace

const char* to_string(SpectralFamily f) {
  switch (f) {
    case SpectralFamily::Elliptic: return "elliptic";
    case SpectralFamily::Parabolic: return "parabolic";
    case SpectralFamily::Nilpotent: return "nilpotent";
    case SpectralFamily::QuasiNilpotent: return "quasinilpotent";
  }
  return "?";
}

SpectralFamily parse_spectral_family(const std::string& name) {
  for (SpectralFamily f : {SpectralFamily::Elliptic, SpectralFamily::Parabolic, SpectralFamily::Nilpotent,
                           SpectralFamily::QuasiNilpotent}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown spectral family '" + name + "'");
}

cplx gamma_elliptic_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                         const SpectralOrders& orders) {
  check_lambda(lambda);
  const int n = beta.n();
  check_dims(n, p.size(), n, "elliptic p must have length n");
  const int P = total(p);
  // s_i = t_i (1 - t_1)...(1 - t_{i-1}); axis i carries t^{p_i} (1-t)^{lambda + n - i + p_{i+1} + ... + p_n}.
  std::vector<Line> axes;
  std::vector<int> sizes;
  int tail = P;
  for (int i = 0; i < n; ++i) {
    tail -= p[i];
    axes.push_back(jacobi_line(orders.simplex, lambda + (n - 1 - i) + tail, p[i]));
    sizes.push_back(orders.simplex);
  }
  const RMatrix& A = beta.matrix();
  CompensatedSum<cplx> acc;
  RVector s(n);
  tensor(sizes, [&](const std::vector<int>& idx) {
    double rem = 1.0, w = 1.0;
    for (int i = 0; i < n; ++i) {
      const double t = axes[i].x[idx[i]];
      s[i] = t * rem;
      rem *= 1.0 - t;
      w *= axes[i].w[idx[i]];
    }
    const RVector a = A * (s / rem);
    acc.add(w * f(a));
  });
  const double log_pref = n * std::log(2.0) + std::lgamma(n + P + lambda + 1.0) - log_factorial(p) -
                          std::lgamma(lambda + 1.0);
  return std::exp(log_pref - n * std::log(2.0)) * acc.value();
}

cplx gamma_elliptic_moment(const Profile& f, int n, double lambda, const MultiIndex& p,
                           const SpectralOrders& orders) {
  check_lambda(lambda);
  check_dims(n, p.size(), n, "elliptic p must have length n");
  const int P = total(p);
  // u = rho sigma; rho = t / (1 - t) with weight t^{n-1+|p|} (1-t)^lambda, sigma nested on the simplex.
  const Line radial = jacobi_line(orders.line, lambda, n - 1.0 + P);
  std::vector<Line> axes{radial};
  std::vector<int> sizes{orders.line};
  int tail = P;
  for (int i = 0; i + 1 < n; ++i) {
    tail -= p[i];
    axes.push_back(jacobi_line(orders.simplex, (n - 2 - i) + tail, p[i]));
    sizes.push_back(orders.simplex);
  }
  CompensatedSum<cplx> acc;
  RVector u(n);
  tensor(sizes, [&](const std::vector<int>& idx) {
    const double t = radial.x[idx[0]];
    const double rho = t / (1.0 - t);
    double rem = 1.0, w = radial.w[idx[0]];
    for (int i = 0; i + 1 < n; ++i) {
      const double tau = axes[i + 1].x[idx[i + 1]];
      u[i] = rho * tau * rem;
      rem *= 1.0 - tau;
      w *= axes[i + 1].w[idx[i + 1]];
    }
    u[n - 1] = rho * rem;
    acc.add(w * f(u));
  });
  const double log_pref = std::lgamma(lambda + P + n + 1.0) - log_factorial(p) - std::lgamma(lambda + 1.0);
  return std::exp(log_pref) * acc.value();
}

cplx gamma_elliptic_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                          const SpectralOrders& orders) {
  return gamma_elliptic_moment(compose(f, beta), beta.n(), lambda, p, orders);
}

double gamma_elliptic_defining(int n, double lambda, const MultiIndex& p) {
  return (lambda + 1.0) / (lambda + total(p) + n + 1.0);
}

cplx gamma_parabolic_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                          double xi, const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  const int n = beta.n();
  check_dims(n, p.size(), n - 1, "parabolic p must have length n-1");
  const int P = total(p);
  const double log_pref = (lambda + P + n) * std::log(2.0 * xi) - log_factorial(p) - std::lgamma(lambda + 1.0);
  return std::exp(log_pref) * beta_form_integral(f, beta, lambda, p, RVector(0), xi, orders);
}

cplx gamma_parabolic_moment(const Profile& f, int n, double lambda, const MultiIndex& p, double xi,
                            const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  check_dims(n, p.size(), n - 1, "parabolic p must have length n-1");
  const int P = total(p);
  const double log_pref = (lambda + P + n) * std::log(xi) - log_factorial(p) - std::lgamma(lambda + 1.0);
  return moment_form_integral(f, lambda, p, RVector(0), xi, log_pref, orders);
}

cplx gamma_parabolic_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                           double xi, const SpectralOrders& orders) {
  return gamma_parabolic_moment(compose(f, beta), beta.n(), lambda, p, xi, orders);
}

cplx gamma_nilpotent_beta(const Profile& f, const BetaBasis& beta, double lambda, const RVector& yprime,
                          double xi, const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  const int n = beta.n();
  check_dims(n, yprime.size(), n - 1, "nilpotent y' must have length n-1");
  const double log_pref = (lambda + 1.0) * std::log(2.0) + (lambda + 0.5 * (n + 1)) * std::log(xi) -
                          0.5 * (n - 1) * kLogPi - std::lgamma(lambda + 1.0);
  return std::exp(log_pref) * beta_form_integral(f, beta, lambda, MultiIndex{}, yprime, xi, orders);
}

cplx gamma_nilpotent_moment(const Profile& f, int n, double lambda, const RVector& yprime, double xi,
                            const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  check_dims(n, yprime.size(), n - 1, "nilpotent y' must have length n-1");
  const double log_pref = (lambda + 0.5 * (n + 1)) * std::log(xi) - (n - 1) * std::log(2.0) -
                          0.5 * (n - 1) * kLogPi - std::lgamma(lambda + 1.0);
  return moment_form_integral(f, lambda, MultiIndex{}, yprime, xi, log_pref, orders);
}

cplx gamma_nilpotent_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const RVector& yprime,
                           double xi, const SpectralOrders& orders) {
  return gamma_nilpotent_moment(compose(f, beta), beta.n(), lambda, yprime, xi, orders);
}

namespace {

void check_quasinilpotent(int n, const MultiIndex& p, const RVector& yprime) {
  const int k = static_cast<int>(p.size());
  if (k < 1 || k > n - 1) throw std::invalid_argument("quasi-nilpotent needs 1 <= k <= n-1");
  check_dims(n, yprime.size(), n - k - 1, "quasi-nilpotent y' must have length n-k-1");
}

}  // namespace

cplx gamma_quasinilpotent_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                               const RVector& yprime, double xi, const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  const int n = beta.n();
  check_quasinilpotent(n, p, yprime);
  const int k = static_cast<int>(p.size());
  const int P = total(p);
  const double log_pref = (lambda + P + k + 1.0) * std::log(2.0) +
                          (lambda + P + 0.5 * (n + k + 1)) * std::log(xi) - 0.5 * (n - k - 1) * kLogPi -
                          log_factorial(p) - std::lgamma(lambda + 1.0);
  return std::exp(log_pref) * beta_form_integral(f, beta, lambda, p, yprime, xi, orders);
}

cplx gamma_quasinilpotent_moment(const Profile& f, int n, double lambda, const MultiIndex& p,
                                 const RVector& yprime, double xi, const SpectralOrders& orders) {
  check_lambda(lambda);
  check_xi(xi);
  check_quasinilpotent(n, p, yprime);
  const int k = static_cast<int>(p.size());
  const int P = total(p);
  const double log_pref = (lambda + P + 0.5 * (n + k + 1)) * std::log(xi) - (n - k - 1) * std::log(2.0) -
                          0.5 * (n - k - 1) * kLogPi - log_factorial(p) - std::lgamma(lambda + 1.0);
  return moment_form_integral(f, lambda, p, yprime, xi, log_pref, orders);
}

cplx gamma_quasinilpotent_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                                const RVector& yprime, double xi, const SpectralOrders& orders) {
  return gamma_quasinilpotent_moment(compose(f, beta), beta.n(), lambda, p, yprime, xi, orders);
}

double HyperbolicCoordinates::cot_residual() const { return std::abs(cot_lhs - cot_rhs); }

double HyperbolicCoordinates::ratio_residual() const {
  return ratio_lhs.size() ? (ratio_lhs - ratio_rhs).cwiseAbs().maxCoeff() : 0.0;
}

HyperbolicCoordinates hyperbolic_coordinates(const Point& z) {
  if (z.kind() != DomainKind::Siegel) throw DomainError("hyperbolic coordinates need a Siegel point");
  const int n = z.dim();
  double norm2 = 0.0;
  for (int j = 0; j + 1 < n; ++j) norm2 += std::norm(z[j]);
  const cplx w = z[n - 1] - cplx(0.0, norm2);
  const double denom = std::sqrt(norm2 + std::abs(w));
  HyperbolicCoordinates h;
  h.f.resize(n);
  for (int j = 0; j + 1 < n; ++j) h.f[j] = std::abs(z[j]) / denom;
  h.f[n - 1] = std::arg(w);
  const double delta = z[n - 1].imag() - norm2;
  h.cot_lhs = z[n - 1].real() / delta;
  h.cot_rhs = 1.0 / std::tan(h.f[n - 1]);
  double fsum = 0.0;
  for (int j = 0; j + 1 < n; ++j) fsum += h.f[j] * h.f[j];
  const double csc = 1.0 / std::sin(h.f[n - 1]);
  h.ratio_lhs.resize(n - 1);
  h.ratio_rhs.resize(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    h.ratio_lhs[j] = std::norm(z[j]) / delta;
    h.ratio_rhs[j] = h.f[j] * h.f[j] * csc / (1.0 - fsum);
  }
  return h;
}

void validate(const SpectrumQuery& q) {
  if (q.n < 1 || q.n > kMaxDim) throw DimensionError("dimension out of range");
  check_lambda(q.lambda);
  const auto np = static_cast<int>(q.p.size());
  const auto ny = static_cast<int>(q.yprime.size());
  switch (q.family) {
    case SpectralFamily::Elliptic:
      if (np != q.n || ny != 0) throw DimensionError("elliptic query needs p of length n and no y'");
      return;
    case SpectralFamily::Parabolic:
      if (np != q.n - 1 || ny != 0) throw DimensionError("parabolic query needs p of length n-1 and no y'");
      break;
    case SpectralFamily::Nilpotent:
      if (np != 0 || ny != q.n - 1) throw DimensionError("nilpotent query needs y' of length n-1 and no p");
      break;
    case SpectralFamily::QuasiNilpotent:
      if (q.k < 1 || q.k > q.n - 1) throw std::invalid_argument("quasi-nilpotent query needs 1 <= k <= n-1");
      if (np != q.k || ny != q.n - q.k - 1) {
        throw DimensionError("quasi-nilpotent query needs p of length k and y' of length n-k-1");
      }
      break;
  }
  check_xi(q.xi);
}

const char* to_string(Representation r) {
  switch (r) {
    case Representation::Beta: return "beta";
    case Representation::Moment: return "moment";
    case Representation::ABeta: return "Abeta";
  }
  return "?";
}

cplx evaluate(const SpectrumQuery& q, Representation r, const Profile& f, const BetaBasis& beta,
              const SpectralOrders& orders) {
  validate(q);
  if (beta.n() != q.n) throw DimensionError("beta vectors must have length n");
  const Profile fm = compose(f, beta);
  switch (q.family) {
    case SpectralFamily::Elliptic:
      if (r == Representation::Beta) return gamma_elliptic_beta(f, beta, q.lambda, q.p, orders);
      if (r == Representation::Moment) return gamma_elliptic_moment(fm, q.n, q.lambda, q.p, orders);
      return gamma_elliptic_Abeta(f, beta, q.lambda, q.p, orders);
    case SpectralFamily::Parabolic:
      if (r == Representation::Beta) return gamma_parabolic_beta(f, beta, q.lambda, q.p, q.xi, orders);
      if (r == Representation::Moment) return gamma_parabolic_moment(fm, q.n, q.lambda, q.p, q.xi, orders);
      return gamma_parabolic_Abeta(f, beta, q.lambda, q.p, q.xi, orders);
    case SpectralFamily::Nilpotent:
      if (r == Representation::Beta) return gamma_nilpotent_beta(f, beta, q.lambda, q.yprime, q.xi, orders);
      if (r == Representation::Moment) {
        return gamma_nilpotent_moment(fm, q.n, q.lambda, q.yprime, q.xi, orders);
      }
      return gamma_nilpotent_Abeta(f, beta, q.lambda, q.yprime, q.xi, orders);
    case SpectralFamily::QuasiNilpotent:
      if (r == Representation::Beta) {
        return gamma_quasinilpotent_beta(f, beta, q.lambda, q.p, q.yprime, q.xi, orders);
      }
      if (r == Representation::Moment) {
        return gamma_quasinilpotent_moment(fm, q.n, q.lambda, q.p, q.yprime, q.xi, orders);
      }
      return gamma_quasinilpotent_Abeta(f, beta, q.lambda, q.p, q.yprime, q.xi, orders);
  }
  throw std::invalid_argument("unknown spectral family");
}

std::vector<SpectrumQuery> standard_grid(SpectralFamily family, int n, double lambda, int k, int max_degree) {
  const std::vector<double> xis{0.25, 0.5, 1.0, 2.0, 4.0};
  const std::vector<double> ys{-2.0, -1.0, 0.0, 1.0, 2.0};
  int np = 0, ny = 0;
  switch (family) {
    case SpectralFamily::Elliptic: np = n; break;
    case SpectralFamily::Parabolic: np = n - 1; break;
    case SpectralFamily::Nilpotent: ny = n - 1; break;
    case SpectralFamily::QuasiNilpotent: np = k; ny = n - k - 1; break;
  }
  std::vector<MultiIndex> ps = np ? enumerate_basis(np, max_degree) : std::vector<MultiIndex>{MultiIndex{}};
  std::vector<RVector> yvals;
  {
    std::vector<int> sizes(ny, static_cast<int>(ys.size()));
    if (ny == 0) {
      yvals.push_back(RVector(0));
    } else {
      tensor(sizes, [&](const std::vector<int>& idx) {
        RVector y(ny);
        for (int i = 0; i < ny; ++i) y[i] = ys[idx[i]];
        yvals.push_back(y);
      });
    }
  }
  std::vector<SpectrumQuery> out;
  const std::vector<double> xi_list = family == SpectralFamily::Elliptic ? std::vector<double>{1.0} : xis;
  for (const MultiIndex& p : ps) {
    for (const RVector& y : yvals) {
      for (double xi : xi_list) {
        SpectrumQuery q{family, n, lambda, family == SpectralFamily::QuasiNilpotent ? k : 0, p, xi, y};
        validate(q);
        out.push_back(q);
      }
    }
  }
  return out;
}

double SpectrumTable::cross_residual() const {
  double worst = 0.0;
  for (const SpectrumRow& row : rows) {
    for (std::size_t a = 0; a < row.values.size(); ++a) {
      for (std::size_t b = a + 1; b < row.values.size(); ++b) {
        worst = std::max(worst, std::abs(row.values[a] - row.values[b]));
      }
    }
  }
  return worst;
}

void SpectrumTable::write_csv(std::ostream& out) const {
  out << "family,n,lambda,k,p,xi,yprime";
  for (Representation r : representations) out << "," << to_string(r) << "_re," << to_string(r) << "_im";
  out << "\n" << std::setprecision(17);
  for (const SpectrumRow& row : rows) {
    const SpectrumQuery& q = row.query;
    out << to_string(q.family) << "," << q.n << "," << q.lambda << "," << q.k << ",";
    for (std::size_t i = 0; i < q.p.size(); ++i) out << (i ? " " : "") << q.p[i];
    out << "," << (q.family == SpectralFamily::Elliptic ? 0.0 : q.xi) << ",";
    for (Eigen::Index i = 0; i < q.yprime.size(); ++i) out << (i ? " " : "") << q.yprime[i];
    for (const cplx& v : row.values) out << "," << v.real() << "," << v.imag();
    out << "\n";
  }
}

SpectrumTable spectrum_table(const std::vector<SpectrumQuery>& queries,
                             const std::vector<Representation>& reps, const Profile& f,
                             const std::string& profile_name, const BetaBasis& beta,
                             const SpectralOrders& orders) {
  SpectrumTable t;
  t.profile_name = profile_name;
  t.beta = beta.matrix();
  t.representations = reps;
  for (const SpectrumQuery& q : queries) {
    SpectrumRow row{q, {}};
    for (Representation r : reps) row.values.push_back(evaluate(q, r, f, beta, orders));
    t.rows.push_back(std::move(row));
  }
  return t;
}

DiagonalComparison diagonal_vs_gamma(const SymbolSpec& s, int d, const BallRule& rule,
                                     const SpectralOrders& orders) {
  if (s.action.kind != MasgKind::QuasiElliptic) {
    throw std::invalid_argument("diagonal_vs_gamma needs a quasi-elliptic symbol");
  }
  const ToeplitzMatrix M = assemble_toeplitz(s, d, rule);
  DiagonalComparison c;
  c.basis = M.basis;
  c.off_diagonal = M.off_diagonal_max();
  for (std::size_t i = 0; i < M.basis.size(); ++i) {
    const cplx g = gamma_elliptic_beta(s.profile, s.beta, rule.lambda, M.basis[i], orders);
    c.diagonal.push_back(M.entries(i, i));
    c.gamma.push_back(g);
    c.max_residual = std::max(c.max_residual, std::abs(M.entries(i, i) - g));
  }
  return c;
}

}  // namespace bergman
