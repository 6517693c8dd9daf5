#pragma once

#include <functional>

#include "bergman/group_actions.hpp"

namespace bergman {

// Real tangent vectors are encoded by their (1,0)-components u, i.e.
// U = sum u_j d/dz_j + conj(u_j) d/dconj(z_j). Then dz_j(U) = u_j and
//   (dz_j ^ dconj(z_k))(U, V) = u_j conj(v_k) - v_j conj(u_k).
struct TangentVector {
  Point base;
  CVector components;
};

// Bergman metric coefficients g_jk (coefficient of dz_j (x) dconj(z_k)),
// normalized with the weightless kernel and the factor 1/(n+1).
CMatrix kahler_metric(DomainKind kind, const Point& z);

// The inverse of the Siegel metric in closed form:
// Delta * [[I, 2i conj(z')^T], [-2i z', 4 Im z_n]].
CMatrix siegel_inverse_metric(const Point& z);

// (1/(n+1)) d^2/dz_j dconj(z_k) log K(z, z) by central differences.
CMatrix metric_from_log_kernel(const Point& z, double h = 1e-4);

// omega_z(U, V) = i sum g_jk (u_j conj(v_k) - v_j conj(u_k)).
double kahler_pair(const DomainSpec& d, const Point& z, const CVector& U, const CVector& V);

using ScalarField = std::function<double(const Point&)>;

inline constexpr double kFiniteDifferenceStep = 1e-5;

// d f / dconj(z_k) = (df/dx_k + i df/dy_k) / 2 by central differences.
CVector dbar_finite_difference(const ScalarField& f, const Point& z,
                               double h = kFiniteDifferenceStep);

// A real function together with its dconj(z) partials. When dbar is empty the
// partials are taken by central differences.
struct SmoothField {
  ScalarField value;
  std::function<CVector(const Point&)> dbar;
};

// Holomorphic components of X_f given the dconj(z) partials of a real f.
CVector hamiltonian_field_ball(const CVector& dbar_f, const Point& z);
CVector hamiltonian_field_siegel(const CVector& dbar_f, const Point& z);
CVector hamiltonian_field(const SmoothField& f, const Point& z);

// df(Y) = 2 Re sum_k (df/dz_k) y_k for real f.
double differential(const CVector& dbar_f, const CVector& Y);

enum class Partials { Analytic, ComplexStep, FiniteDifference };

// |X_{mu_X}(z) - X#_z| with mu_X = <mu^G, X>.
double verify_moment_property(const MasgAction& g, const RVector& X, const Point& z,
                              Partials partials = Partials::Analytic);

}  // namespace bergman
