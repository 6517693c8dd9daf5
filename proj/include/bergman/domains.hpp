#pragma once

#include <functional>

#include "bergman/types.hpp"

namespace bergman {

enum class DomainKind { Ball, Siegel };

const char* to_string(DomainKind kind);

struct DomainSpec {
  DomainKind kind = DomainKind::Ball;
  int n = 1;
  double lambda = 0.0;
};

// Validating constructor: n in [1, kMaxDim], lambda > -1.
DomainSpec make_domain(DomainKind kind, int n, double lambda);

// Points closer than this to the boundary (measured by the defining
// function) are rejected as boundary-degenerate.
inline constexpr double kBoundaryGuard = 1e-14;

// 1 - |z|^2 on the ball, Im z_n - |z'|^2 on the Siegel domain.
double defining_function(DomainKind kind, const CVector& z);

class Point {
 public:
  Point(DomainKind kind, CVector z);

  static Point ball(CVector z) { return Point(DomainKind::Ball, std::move(z)); }
  static Point siegel(CVector z) { return Point(DomainKind::Siegel, std::move(z)); }

  DomainKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(z_.size()); }
  const CVector& z() const { return z_; }
  cplx operator[](int j) const { return z_[j]; }
  double defining() const { return rho_; }

 private:
  DomainKind kind_;
  CVector z_;
  double rho_;
};

bool contains(const DomainSpec& d, const CVector& v);

double log_normalization_constant(int n, double lambda);
double normalization_constant(int n, double lambda);

Point cayley_to_siegel(const Point& z);
Point cayley_to_ball(const Point& w);

cplx bergman_kernel(const DomainSpec& d, const Point& z, const Point& w);
double weight_density(const DomainSpec& d, const Point& z);

using BallFunction = std::function<cplx(const Point&)>;

// (U_lambda f)(w) = (2 / (1 - i w_n))^(lambda + n + 1) f(psi(w)).
cplx u_lambda_apply(double lambda, const BallFunction& f, const Point& w);

}  // namespace bergman
