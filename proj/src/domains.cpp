#include "bergman/domains.hpp"

#include <cmath>
#include <string>

namespace bergman {

namespace {

const cplx I(0.0, 1.0);

void check_dim(int n, const CVector& v) {
  if (static_cast<int>(v.size()) != n) {
    throw DimensionError("expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(v.size()));
  }
}

void check_kind(const Point& z, DomainKind kind, const char* what) {
  if (z.kind() != kind) {
    throw DomainError(std::string(what) + ": point lies in the " + to_string(z.kind()) +
                      ", expected the " + to_string(kind));
  }
}

}  // namespace

const char* to_string(DomainKind kind) {
  return kind == DomainKind::Ball ? "ball" : "siegel";
}

DomainSpec make_domain(DomainKind kind, int n, double lambda) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("dimension n must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
  return DomainSpec{kind, n, lambda};
}

double defining_function(DomainKind kind, const CVector& z) {
  const Eigen::Index n = z.size();
  if (kind == DomainKind::Ball) return 1.0 - z.squaredNorm();
  return z[n - 1].imag() - z.head(n - 1).squaredNorm();
}

Point::Point(DomainKind kind, CVector z) : kind_(kind), z_(std::move(z)) {
  if (z_.size() < 1 || z_.size() > kMaxDim) {
    throw DimensionError("point dimension must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  rho_ = defining_function(kind_, z_);
  if (!(rho_ > kBoundaryGuard)) {
    throw DomainError(std::string("point is not strictly inside the ") + to_string(kind_));
  }
}

bool contains(const DomainSpec& d, const CVector& v) {
  check_dim(d.n, v);
  return defining_function(d.kind, v) > 0.0;
}

double log_normalization_constant(int n, double lambda) {
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
  return std::lgamma(n + 1.0 + lambda) - n * std::log(M_PI) - std::lgamma(lambda + 1.0);
}

double normalization_constant(int n, double lambda) {
  return std::exp(log_normalization_constant(n, lambda));
}

Point cayley_to_siegel(const Point& z) {
  check_kind(z, DomainKind::Ball, "cayley_to_siegel");
  const int n = z.dim();
  const cplx den = 1.0 + z[n - 1];
  if (std::abs(den) < kBoundaryGuard) throw DomainError("cayley_to_siegel: pole at z_n = -1");
  const cplx c = I / den;
  CVector w(n);
  for (int j = 0; j + 1 < n; ++j) w[j] = c * z[j];
  w[n - 1] = c * (1.0 - z[n - 1]);
  return Point::siegel(std::move(w));
}

Point cayley_to_ball(const Point& w) {
  check_kind(w, DomainKind::Siegel, "cayley_to_ball");
  const int n = w.dim();
  const cplx den = 1.0 - I * w[n - 1];
  if (std::abs(den) < kBoundaryGuard) throw DomainError("cayley_to_ball: pole at w_n = -i");
  const cplx c = 1.0 / den;
  CVector z(n);
  for (int j = 0; j + 1 < n; ++j) z[j] = -2.0 * I * c * w[j];
  z[n - 1] = c * (1.0 + I * w[n - 1]);
  return Point::ball(std::move(z));
}

cplx bergman_kernel(const DomainSpec& d, const Point& z, const Point& w) {
  check_kind(z, d.kind, "bergman_kernel");
  check_kind(w, d.kind, "bergman_kernel");
  check_dim(d.n, z.z());
  check_dim(d.n, w.z());
  const int n = d.n;
  cplx base;
  if (d.kind == DomainKind::Ball) {
    cplx inner = 0.0;
    for (int j = 0; j < n; ++j) inner += z[j] * std::conj(w[j]);
    base = 1.0 - inner;
  } else {
    cplx inner = 0.0;
    for (int j = 0; j + 1 < n; ++j) inner += z[j] * std::conj(w[j]);
    base = (z[n - 1] - std::conj(w[n - 1])) / (2.0 * I) - inner;
  }
  if (!(base.real() > 0.0)) throw DomainError("bergman_kernel: base left the right half-plane");
  return std::pow(base, -(d.lambda + n + 1.0));
}

double weight_density(const DomainSpec& d, const Point& z) {
  check_kind(z, d.kind, "weight_density");
  check_dim(d.n, z.z());
  const double log_c = log_normalization_constant(d.n, d.lambda);
  const double rho = z.defining();
  if (d.kind == DomainKind::Ball) return std::exp(log_c + d.lambda * std::log(rho));
  return 0.25 * std::exp(log_c + d.lambda * std::log(rho));
}

cplx u_lambda_apply(double lambda, const BallFunction& f, const Point& w) {
  check_kind(w, DomainKind::Siegel, "u_lambda_apply");
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
  const int n = w.dim();
  const cplx base = 2.0 / (1.0 - I * w[n - 1]);
  if (!(base.real() > 0.0)) throw DomainError("u_lambda_apply: base left the right half-plane");
  return std::pow(base, lambda + n + 1.0) * f(cayley_to_ball(w));
}

}  // namespace bergman
