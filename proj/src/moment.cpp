#include "bergman/moment.hpp"

#include <array>
#include <cmath>
#include <numeric>

namespace bergman {

namespace {

const cplx I(0.0, 1.0);

enum class Slot { Torus, Translation, Dilation, Shift };

// Role of coordinate j under the action; the last slot is either the
// dilation of H(n) or the real shift of z_n.
Slot slot(const MasgAction& g, int j) {
  if (g.kind == MasgKind::QuasiElliptic) return Slot::Torus;
  if (j == g.n - 1) return g.kind == MasgKind::QuasiHyperbolic ? Slot::Dilation : Slot::Shift;
  return j < g.torus_count() ? Slot::Torus : Slot::Translation;
}

void check_point(const MasgAction& g, const Point& z) {
  if (z.kind() != g.domain()) {
    throw DomainError(g.label() + " needs a point in the " + to_string(g.domain()));
  }
  if (z.dim() != g.n) throw DimensionError(g.label() + ": point dimension mismatch");
}

// Pairing vector c(z) and scale s(z) with mu^G = -s c.
template <class T>
T pairing_component(const MasgAction& g, int j, const T& x, const T& y) {
  switch (slot(g, j)) {
    case Slot::Torus: return g.kind == MasgKind::QuasiElliptic ? x * x + y * y : 2.0 * (x * x + y * y);
    case Slot::Translation: return -4.0 * y;
    case Slot::Dilation: return x;
    case Slot::Shift: return T(1.0);
  }
  return T(0.0);
}

template <class T>
T scale_real(const MasgAction& g, const T* x, const T* y) {
  const int n = g.n;
  if (g.kind == MasgKind::QuasiElliptic) {
    T rho(1.0);
    for (int j = 0; j < n; ++j) rho -= x[j] * x[j] + y[j] * y[j];
    return 1.0 / rho;
  }
  T delta = y[n - 1];
  for (int j = 0; j + 1 < n; ++j) delta -= x[j] * x[j] + y[j] * y[j];
  return 1.0 / (2.0 * delta);
}

// mu_X written in real coordinates so that it accepts complex steps.
template <class T>
T moment_x_real(const MasgAction& g, const RVector& X, const T* x, const T* y) {
  T c(0.0);
  for (int j = 0; j < g.n; ++j) c += X[j] * pairing_component(g, j, x[j], y[j]);
  return -scale_real(g, x, y) * c;
}

RVector pairing_vector(const MasgAction& g, const Point& z) {
  RVector c(g.n);
  for (int j = 0; j < g.n; ++j) c[j] = pairing_component(g, j, z[j].real(), z[j].imag());
  return c;
}

double scale(const MasgAction& g, const Point& z) {
  return g.kind == MasgKind::QuasiElliptic ? 1.0 / z.defining() : 1.0 / (2.0 * z.defining());
}

}  // namespace

RVector moment_masg(const MasgAction& g, const Point& z) {
  check_point(g, z);
  return -scale(g, z) * pairing_vector(g, z);
}

CVector moment_dbar(const MasgAction& g, const RVector& X, const Point& z) {
  check_point(g, z);
  if (X.size() != g.n) throw DimensionError("moment_dbar: X must have length n");
  const int n = g.n;
  const double rho = z.defining();
  const double C = X.dot(pairing_vector(g, z));
  CVector d(n);
  if (g.kind == MasgKind::QuasiElliptic) {
    for (int k = 0; k < n; ++k) d[k] = -X[k] * z[k] / rho - C * z[k] / (rho * rho);
    return d;
  }
  for (int k = 0; k < n; ++k) {
    cplx dC = 0.0;
    switch (slot(g, k)) {
      case Slot::Torus: dC = 2.0 * X[k] * z[k]; break;
      case Slot::Translation: dC = -2.0 * I * X[k]; break;
      case Slot::Dilation: dC = 0.5 * X[k]; break;
      case Slot::Shift: break;
    }
    const cplx dDelta = k == n - 1 ? cplx(0.0, 0.5) : -z[k];
    d[k] = -dC / (2.0 * rho) + C * dDelta / (2.0 * rho * rho);
  }
  return d;
}

CVector moment_dbar_complex_step(const MasgAction& g, const RVector& X, const Point& z) {
  check_point(g, z);
  const int n = g.n;
  constexpr double h = 1e-20;
  std::array<cplx, kMaxDim> x{}, y{};
  for (int j = 0; j < n; ++j) {
    x[j] = z[j].real();
    y[j] = z[j].imag();
  }
  CVector d(n);
  for (int k = 0; k < n; ++k) {
    x[k] += cplx(0.0, h);
    const double dx = moment_x_real(g, X, x.data(), y.data()).imag() / h;
    x[k] = z[k].real();
    y[k] += cplx(0.0, h);
    const double dy = moment_x_real(g, X, x.data(), y.data()).imag() / h;
    y[k] = z[k].imag();
    d[k] = 0.5 * cplx(dx, dy);
  }
  return d;
}

std::optional<Point> moment_section(const MasgAction& g, const RVector& mu) {
  if (mu.size() != g.n) throw DimensionError("moment_section: mu must have length n");
  const int n = g.n;
  CVector z(n);
  if (g.kind == MasgKind::QuasiElliptic) {
    if ((mu.array() > 0.0).any()) return std::nullopt;
    const double total = -mu.sum();
    for (int j = 0; j < n; ++j) z[j] = std::sqrt(-mu[j] / (1.0 + total));
    return Point::ball(z);
  }
  double delta = 1.0;
  if (g.kind != MasgKind::QuasiHyperbolic) {
    if (!(mu[n - 1] < 0.0)) return std::nullopt;
    delta = -1.0 / (2.0 * mu[n - 1]);
  }
  double norm2 = 0.0;
  double re_last = 0.0;
  for (int j = 0; j < n; ++j) {
    switch (slot(g, j)) {
      case Slot::Torus:
        if (mu[j] > 0.0) return std::nullopt;
        z[j] = std::sqrt(-mu[j] * delta);
        break;
      case Slot::Translation: z[j] = cplx(0.0, 0.5 * mu[j] * delta); break;
      case Slot::Dilation: re_last = -2.0 * mu[j] * delta; break;
      case Slot::Shift: break;
    }
    if (j + 1 < n) norm2 += std::norm(z[j]);
  }
  z[n - 1] = cplx(re_last, delta + norm2);
  try {
    return Point::siegel(z);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

BetaBasis::BetaBasis(RMatrix A) : A_(std::move(A)) {
  if (A_.rows() < 1 || A_.cols() < 1) throw std::invalid_argument("beta basis must be non-empty");
  if (A_.rows() > A_.cols()) throw std::invalid_argument("beta basis has more vectors than n");
  Eigen::JacobiSVD<RMatrix> svd(A_);
  const auto& sv = svd.singularValues();
  if (!(sv[sv.size() - 1] > kRankTol * std::max(1.0, sv[0]))) {
    throw std::invalid_argument("beta vectors are not linearly independent");
  }
}

BetaBasis BetaBasis::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("beta basis must be non-empty");
  RMatrix A(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) throw DimensionError("beta rows differ in length");
    for (std::size_t j = 0; j < rows[i].size(); ++j) A(i, j) = rows[i][j];
  }
  return BetaBasis(std::move(A));
}

BetaBasis BetaBasis::canonical(int n) { return BetaBasis(RMatrix::Identity(n, n)); }

bool BetaBasis::is_orthogonal(double tol) const {
  const RMatrix G = A_ * A_.transpose();
  for (int i = 0; i < m(); ++i) {
    for (int j = i + 1; j < m(); ++j) {
      if (std::abs(G(i, j)) > tol * std::sqrt(G(i, i) * G(j, j))) return false;
    }
  }
  return true;
}

RMatrix BetaBasis::kernel() const {
  Eigen::JacobiSVD<RMatrix> svd(A_, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(n() - m());
}

RVector project_orthogonal(const BetaBasis& beta, const RVector& s) {
  if (s.size() != beta.n()) throw DimensionError("project_orthogonal: length mismatch");
  if (!beta.is_orthogonal()) throw std::invalid_argument("project_orthogonal needs an orthogonal beta");
  RVector out = RVector::Zero(beta.n());
  for (int j = 0; j < beta.m(); ++j) {
    const RVector v = beta.vector(j);
    out += (s.dot(v) / v.dot(v)) * v;
  }
  return out;
}

RVector project_span(const BetaBasis& beta, const RVector& s) {
  if (s.size() != beta.n()) throw DimensionError("project_span: length mismatch");
  const RMatrix& A = beta.matrix();
  const RMatrix G = A * A.transpose();
  const Eigen::VectorXd coef = G.ldlt().solve(A * Eigen::VectorXd(s));
  return A.transpose() * coef;
}

RVector moment_subgroup(const MasgAction& g, const BetaBasis& beta, const Point& z) {
  return project_orthogonal(beta, moment_masg(g, z));
}

RVector coordinate_functions(const MasgAction& g, const BetaBasis& beta, const Point& z) {
  check_point(g, z);
  if (beta.n() != g.n) throw DimensionError("coordinate_functions: beta has wrong n");
  const RVector c = pairing_vector(g, z);
  return scale(g, z) * (beta.matrix() * Eigen::VectorXd(c));
}

cplx eval_symbol(const SymbolSpec& s, const Point& z) {
  return s.profile(coordinate_functions(s.action, s.beta, z));
}

namespace {

void check_partition(const Partition& k) {
  if (k.empty()) throw std::invalid_argument("partition must be non-empty");
  for (int part : k) {
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
  }
}

BetaBasis blocks(const Partition& k) {
  const int n = std::accumulate(k.begin(), k.end(), 0);
  RMatrix A = RMatrix::Zero(k.size(), n);
  int offset = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    A.row(j).segment(offset, k[j]).setOnes();
    offset += k[j];
  }
  return BetaBasis(std::move(A));
}

}  // namespace

BetaBasis partition_beta_elliptic(const Partition& k) {
  check_partition(k);
  return blocks(k);
}

BetaBasis partition_beta_parabolic(const Partition& k) {
  check_partition(k);
  if (k.size() < 2 || k.back() != 1) {
    throw std::invalid_argument("parabolic partition must have at least two parts and end in 1");
  }
  return blocks(k);
}

BetaBasis partition_beta_quasinilpotent(const Partition& alpha, int n) {
  check_partition(alpha);
  const int k = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (k < 1 || k > n - 2) throw std::invalid_argument("quasi-nilpotent partition needs 1 <= k <= n-2");
  Partition full = alpha;
  full.insert(full.end(), n - k, 1);
  return blocks(full);
}

Point random_point(const MasgAction& g, std::mt19937_64& rng) {
  const int n = g.n;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  CVector z(n);
  if (g.domain() == DomainKind::Ball) {
    for (int j = 0; j < n; ++j) z[j] = cplx(gauss(rng), gauss(rng));
    const double r = 0.95 * std::pow(unif(rng), 1.0 / (2 * n));
    z *= r / z.norm();
    return Point::ball(z);
  }
  double norm2 = 0.0;
  for (int j = 0; j + 1 < n; ++j) {
    z[j] = 0.7 * cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(z[j]);
  }
  const double delta = 0.05 + 1.95 * unif(rng);
  z[n - 1] = cplx(gauss(rng), norm2 + delta);
  return Point::siegel(z);
}

GroupParam random_param(const MasgAction& g, std::mt19937_64& rng, double scale_factor) {
  std::normal_distribution<double> gauss(0.0, scale_factor);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  GroupParam p(g.n);
  for (int j = 0; j < g.n; ++j) {
    switch (slot(g, j)) {
      case Slot::Torus: p[j] = angle(rng); break;
      case Slot::Dilation: p[j] = 0.5 * gauss(rng); break;
      default: p[j] = gauss(rng); break;
    }
  }
  return p;
}

FiberWitness fiber_witness(const MasgAction& g, const BetaBasis& beta,
                           const std::function<double(const Point&)>& discriminator, int trials,
                           std::uint64_t seed) {
  if (beta.n() != g.n) throw DimensionError("fiber_witness: beta has wrong n");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const RMatrix K = beta.kernel();
  FiberWitness out;
  for (int t = 0; t < trials; ++t) {
    out.attempts = t + 1;
    const Point z = random_point(g, rng);
    const RVector mu = moment_masg(g, z);
    // Moving mu^G along ker A(beta) keeps mu^H fixed; the group action moves
    // within the fiber of mu^G itself.
    RVector target = mu;
    if (K.cols() > 0) {
      const Eigen::VectorXd c = Eigen::VectorXd::NullaryExpr(K.cols(), [&] { return gauss(rng); });
      target += RVector(K * c) * (0.5 + std::abs(gauss(rng))) * std::max(1.0, mu.norm());
    }
    const std::optional<Point> base = moment_section(g, target);
    if (!base) continue;
    const Point w = act(g, random_param(g, rng), *base);
    const double gap = project_span(beta, moment_masg(g, z) - moment_masg(g, w)).norm();
    const double dgap = std::abs(discriminator(z) - discriminator(w));
    if (gap < kWitnessMomentTol && dgap > kWitnessGap) {
      out.found = true;
      out.z = z;
      out.w = w;
      out.moment_gap = gap;
      out.discriminator_gap = dgap;
      return out;
    }
  }
  return out;
}

}  // namespace bergman
