#include "bergman/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "bergman/domains.hpp"

namespace bergman {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first components of the normalized eigenvectors.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag_sq, double mu0,
                            std::string description) {
  const int N = static_cast<int>(diag.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag_sq.cwiseSqrt(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolver failed");
  QuadratureRule rule;
  rule.dim = 1;
  rule.description = std::move(description);
  rule.nodes.resize(N);
  rule.weights.resize(N);
  for (int i = 0; i < N; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double v = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v * v;
  }
  return rule;
}

void check_order(int N) {
  if (N < 1) throw std::invalid_argument("quadrature order must be positive");
}

struct Line {
  std::vector<double> x;
  std::vector<double> w;
};

Line line_of(const QuadratureRule& r) { return {r.nodes, r.weights}; }

// Iterates the tensor product of per-axis index ranges.
template <class F>
void for_each_tensor(const std::vector<int>& sizes, F&& visit) {
  const std::size_t d = sizes.size();
  std::vector<int> idx(d, 0);
  for (int s : sizes) {
    if (s == 0) return;
  }
  while (true) {
    visit(idx);
    std::size_t a = d;
    while (a > 0) {
      --a;
      if (++idx[a] < sizes[a]) break;
      idx[a] = 0;
      if (a == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(const double*)>& f) const {
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i < size(); ++i) acc.add(weights[i] * f(node(i)));
  return acc.value();
}

QuadratureRule gauss_jacobi_01(int N, double a, double b) {
  check_order(N);
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Jacobi exponents must exceed -1");
  // Monic Jacobi recurrence on [-1, 1] with weight (1-x)^a (1+x)^b.
  Eigen::VectorXd diag(N), off(std::max(N - 1, 0));
  const double ab = a + b;
  for (int k = 0; k < N; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < N; ++k) {
    const double s = 2.0 * k + ab;
    off[k - 1] = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                        : 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
  }
  const double log_beta = std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0);
  std::ostringstream desc;
  desc << "gauss-jacobi N=" << N << " (1-t)^" << a << " t^" << b << " on [0,1]";
  QuadratureRule r = golub_welsch(diag, off, std::exp(log_beta), desc.str());
  for (double& x : r.nodes) x = 0.5 * (1.0 + x);
  return r;
}

QuadratureRule gauss_laguerre(int N, double alpha) {
  check_order(N);
  if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre exponent must exceed -1");
  Eigen::VectorXd diag(N), off(std::max(N - 1, 0));
  for (int k = 0; k < N; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < N; ++k) off[k - 1] = k * (k + alpha);
  std::ostringstream desc;
  desc << "gauss-laguerre N=" << N << " alpha=" << alpha;
  return golub_welsch(diag, off, std::tgamma(alpha + 1.0), desc.str());
}

QuadratureRule gauss_hermite(int N) {
  check_order(N);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N), off(std::max(N - 1, 0));
  for (int k = 1; k < N; ++k) off[k - 1] = 0.5 * k;
  return golub_welsch(diag, off, std::sqrt(M_PI), "gauss-hermite N=" + std::to_string(N));
}

QuadratureRule exp_sinh_rule(double h, double t_max) {
  if (!(h > 0.0) || !(t_max > 0.0)) throw std::invalid_argument("exp-sinh rule needs positive step and range");
  QuadratureRule r;
  r.dim = 1;
  std::ostringstream desc;
  desc << "exp-sinh(h=" << h << ",tmax=" << t_max << ")";
  r.description = desc.str();
  const int K = static_cast<int>(std::floor(t_max / h));
  for (int k = -K; k <= K; ++k) {
    const double t = k * h;
    const double x = std::exp(0.5 * M_PI * std::sinh(t));
    const double w = h * 0.5 * M_PI * std::cosh(t) * x;
    if (!(x > 0.0) || !std::isfinite(x) || !(w > 0.0) || !std::isfinite(w)) continue;
    r.nodes.push_back(x);
    r.weights.push_back(w);
  }
  return r;
}

std::string BallRule::description() const {
  std::ostringstream s;
  s << "ball n=" << n << " lambda=" << lambda << " radial=" << radial_N << " angular=" << angular_N;
  return s.str();
}

QuadratureRule BallRule::flatten() const {
  QuadratureRule r;
  r.dim = 2 * n;
  r.description = description();
  std::vector<int> sizes(n, angular_N);
  const double avg = std::pow(static_cast<double>(angular_N), -n);
  for (std::size_t i = 0; i < radial_size(); ++i) {
    const double* m = modulus(i);
    for_each_tensor(sizes, [&](const std::vector<int>& a) {
      for (int j = 0; j < n; ++j) {
        r.nodes.push_back(m[j] * std::cos(angle(a[j])));
        r.nodes.push_back(m[j] * std::sin(angle(a[j])));
      }
      r.weights.push_back(radial_weights[i] * avg);
    });
  }
  return r;
}

double BallRule::integrate(const std::function<double(const CVector&)>& f) const {
  std::vector<int> sizes(n, angular_N);
  const double avg = std::pow(static_cast<double>(angular_N), -n);
  CompensatedSum<double> acc;
  CVector z(n);
  for (std::size_t i = 0; i < radial_size(); ++i) {
    const double* m = modulus(i);
    CompensatedSum<double> inner;
    for_each_tensor(sizes, [&](const std::vector<int>& a) {
      for (int j = 0; j < n; ++j) z[j] = std::polar(m[j], angle(a[j]));
      inner.add(f(z));
    });
    acc.add(radial_weights[i] * avg * inner.value());
  }
  return acc.value();
}

BallRule ball_full_rule(int n, double lambda, int radial_N, int angular_N) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("ball rule dimension out of range");
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
  check_order(radial_N);
  if (angular_N < 2 || angular_N % 2 != 0) throw std::invalid_argument("angular order must be even and >= 2");
  BallRule rule;
  rule.n = n;
  rule.lambda = lambda;
  rule.radial_N = radial_N;
  rule.angular_N = angular_N;
  std::vector<Line> axes;
  for (int i = 1; i <= n; ++i) axes.push_back(line_of(gauss_jacobi_01(radial_N, lambda + n - i)));
  // c_lambda * 2^{-n} * (2 pi)^n, the angular factor being the full torus volume.
  const double front = std::exp(log_normalization_constant(n, lambda) + n * std::log(M_PI));
  std::vector<int> sizes(n, radial_N);
  for_each_tensor(sizes, [&](const std::vector<int>& idx) {
    double remaining = 1.0;
    double w = front;
    for (int j = 0; j < n; ++j) {
      const double t = axes[j].x[idx[j]];
      rule.moduli.push_back(std::sqrt(t * remaining));
      remaining *= 1.0 - t;
      w *= axes[j].w[idx[j]];
    }
    rule.radial_weights.push_back(w);
  });
  return rule;
}

QuadratureRule orthant_rule(const std::vector<AxisWeight>& axes) {
  if (axes.empty()) throw std::invalid_argument("orthant rule needs at least one axis");
  std::vector<Line> lines;
  std::ostringstream desc;
  desc << "tensor[";
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const AxisWeight& ax = axes[a];
    Line line;
    switch (ax.kind) {
      case AxisWeight::Kind::Laguerre: {
        if (!(ax.rate > 0.0)) throw std::invalid_argument("Laguerre rate must be positive");
        line = line_of(gauss_laguerre(ax.order, ax.alpha));
        const double f = std::pow(ax.rate, -ax.alpha - 1.0);
        for (double& x : line.x) x /= ax.rate;
        for (double& w : line.w) w *= f;
        desc << "laguerre(" << ax.order << "," << ax.alpha << "," << ax.rate << ")";
        break;
      }
      case AxisWeight::Kind::Algebraic: {
        if (!(ax.power > 1.0)) throw std::invalid_argument("algebraic weight power must exceed 1");
        line = line_of(gauss_jacobi_01(ax.order, ax.power - 2.0));
        for (double& x : line.x) x = x / (1.0 - x);
        desc << "algebraic(" << ax.order << "," << ax.power << ")";
        break;
      }
      case AxisWeight::Kind::Hermite:
        line = line_of(gauss_hermite(ax.order));
        desc << "hermite(" << ax.order << ")";
        break;
    }
    if (a + 1 < axes.size()) desc << ",";
    lines.push_back(std::move(line));
  }
  desc << "]";
  QuadratureRule r;
  r.dim = static_cast<int>(axes.size());
  r.description = desc.str();
  std::vector<int> sizes;
  for (const Line& l : lines) sizes.push_back(static_cast<int>(l.x.size()));
  for_each_tensor(sizes, [&](const std::vector<int>& idx) {
    double w = 1.0;
    for (std::size_t a = 0; a < lines.size(); ++a) {
      r.nodes.push_back(lines[a].x[idx[a]]);
      w *= lines[a].w[idx[a]];
    }
    r.weights.push_back(w);
  });
  return r;
}

QuadratureRule dirichlet_orthant_rule(int n, double s, int radial_N, int simplex_N) {
  if (n < 1) throw std::invalid_argument("orthant dimension must be positive");
  if (!(s > n)) throw std::invalid_argument("Dirichlet orthant weight needs s > n");
  const Line radial = line_of(gauss_jacobi_01(radial_N, s - n - 1.0, n - 1.0));
  std::vector<Line> simplex;
  for (int i = 1; i <= n - 1; ++i) simplex.push_back(line_of(gauss_jacobi_01(simplex_N, n - 1.0 - i)));
  QuadratureRule r;
  r.dim = n;
  std::ostringstream desc;
  desc << "dirichlet-orthant n=" << n << " s=" << s << " radial=" << radial_N << " simplex=" << simplex_N;
  r.description = desc.str();
  std::vector<int> sizes{static_cast<int>(radial.x.size())};
  for (const Line& l : simplex) sizes.push_back(static_cast<int>(l.x.size()));
  for_each_tensor(sizes, [&](const std::vector<int>& idx) {
    const double t = radial.x[idx[0]];
    const double rho = t / (1.0 - t);
    double w = radial.w[idx[0]];
    double remaining = 1.0;
    for (int i = 0; i + 1 < n; ++i) {
      const double tau = simplex[i].x[idx[i + 1]];
      r.nodes.push_back(rho * tau * remaining);
      remaining *= 1.0 - tau;
      w *= simplex[i].w[idx[i + 1]];
    }
    r.nodes.push_back(rho * remaining);
    r.weights.push_back(w);
  });
  return r;
}

MonteCarloEstimate monte_carlo(const std::function<double(std::mt19937_64&)>& draw, long N,
                               std::uint64_t seed) {
  if (N < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (long i = 1; i <= N; ++i) {
    const double x = draw(rng);
    const double d = x - mean;
    mean += d / i;
    m2 += d * (x - mean);
  }
  return {mean, std::sqrt(m2 / (N - 1) / N), N};
}

CVector sample_ball(int n, double lambda, std::mt19937_64& rng) {
  std::gamma_distribution<double> unit(1.0, 1.0), tail(lambda + 1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  RVector g(n);
  double total = tail(rng);
  for (int j = 0; j < n; ++j) {
    g[j] = unit(rng);
    total += g[j];
  }
  CVector z(n);
  for (int j = 0; j < n; ++j) z[j] = std::polar(std::sqrt(g[j] / total), phase(rng));
  return z;
}

}  // namespace bergman
