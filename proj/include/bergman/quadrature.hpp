#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(const T& x) {
    const T t = sum_ + x;
    if constexpr (std::is_same_v<T, double>) {
      comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    } else {
      comp_ += T(part(sum_.real(), x.real(), t.real()), part(sum_.imag(), x.imag(), t.imag()));
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static double part(double s, double x, double t) {
    return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
  }
  T sum_{};
  T comp_{};
};

struct QuadratureRule {
  int dim = 1;
  std::vector<double> nodes;  // row-major, size() * dim entries
  std::vector<double> weights;
  std::string description;

  std::size_t size() const { return weights.size(); }
  const double* node(std::size_t i) const { return nodes.data() + i * dim; }
  double integrate(const std::function<double(const double*)>& f) const;
};

// Weight (1-t)^a t^b on [0,1]; exact for polynomials of degree <= 2N-1.
QuadratureRule gauss_jacobi_01(int N, double a, double b = 0.0);
// Weight t^alpha e^{-t} on [0, inf).
QuadratureRule gauss_laguerre(int N, double alpha = 0.0);
// Weight e^{-t^2} on the real line.
QuadratureRule gauss_hermite(int N);

// Double-exponential rule for the unweighted integral over (0, inf):
// x = exp(pi/2 sinh t) on the grid t = k h, |t| <= t_max. Nodes whose weight
// underflows or whose abscissa overflows are dropped.
QuadratureRule exp_sinh_rule(double h, double t_max = 4.5);

// Polar tensor rule for the probability measure dv_lambda on B^n. Moduli come
// from the nested substitution r_j^2 = t_j (1 - sum_{i<j} r_i^2) with Gauss-Jacobi
// weights (1-t_j)^(lambda+n-j); angles use the trapezoid rule with angular_N
// points per coordinate.
struct BallRule {
  int n = 1;
  double lambda = 0.0;
  int radial_N = 0;
  int angular_N = 0;
  std::vector<double> moduli;          // radial node i occupies n entries
  std::vector<double> radial_weights;  // include the angular average, sum to 1

  std::size_t radial_size() const { return radial_weights.size(); }
  const double* modulus(std::size_t i) const { return moduli.data() + i * n; }
  double angle(int a) const { return 2.0 * M_PI * a / angular_N; }
  std::string description() const;
  // Full tensor rule with nodes (x_1, y_1, ..., x_n, y_n).
  QuadratureRule flatten() const;
  double integrate(const std::function<double(const CVector&)>& f) const;
};

inline constexpr int kDefaultRadialOrder = 40;
inline constexpr int kDefaultAngularOrder = 64;
inline constexpr int kDefaultLineOrder = 64;

BallRule ball_full_rule(int n, double lambda, int radial_N = kDefaultRadialOrder,
                        int angular_N = kDefaultAngularOrder);

// Per-axis weights for tensor rules on products of half-lines and lines.
struct AxisWeight {
  enum class Kind { Laguerre, Algebraic, Hermite };
  Kind kind = Kind::Laguerre;
  int order = kDefaultLineOrder;
  double alpha = 0.0;  // Laguerre: u^alpha e^{-rate u}
  double rate = 1.0;
  double power = 2.0;  // Algebraic: (1+u)^{-power}, power > 1

  static AxisWeight laguerre(int N, double alpha = 0.0, double rate = 1.0) {
    return {Kind::Laguerre, N, alpha, rate, 0.0};
  }
  static AxisWeight algebraic(int N, double power) { return {Kind::Algebraic, N, 0.0, 1.0, power}; }
  static AxisWeight hermite(int N) { return {Kind::Hermite, N, 0.0, 1.0, 0.0}; }
};

// Sum w_i g(u_i) approximates the integral of prod_axis weight(u) * g(u).
QuadratureRule orthant_rule(const std::vector<AxisWeight>& axes);

// Weight (1 + |u|)^{-s} on the open orthant R_+^n (|u| = u_1 + ... + u_n),
// via u = rho * sigma with sigma on the simplex; needs s > n.
QuadratureRule dirichlet_orthant_rule(int n, double s, int radial_N = kDefaultLineOrder,
                                      int simplex_N = kDefaultRadialOrder);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  long samples = 0;
};

// Averages draws of an unbiased single-sample estimator.
MonteCarloEstimate monte_carlo(const std::function<double(std::mt19937_64&)>& draw, long N,
                               std::uint64_t seed);

// Draws z from dv_lambda on B^n exactly (Dirichlet moduli, uniform phases).
CVector sample_ball(int n, double lambda, std::mt19937_64& rng);

}  // namespace bergman
