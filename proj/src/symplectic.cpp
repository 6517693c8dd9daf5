#include "bergman/symplectic.hpp"

#include <cmath>

#include "bergman/moment.hpp"

namespace bergman {

namespace {

const cplx I(0.0, 1.0);

double log_kernel_diag(DomainKind kind, const CVector& z) {
  const int n = static_cast<int>(z.size());
  return -(n + 1.0) * std::log(defining_function(kind, z));
}

}  // namespace

CMatrix kahler_metric(DomainKind kind, const Point& z) {
  if (z.kind() != kind) throw DomainError("kahler_metric: point in the wrong domain");
  const int n = z.dim();
  const double rho = z.defining();
  CMatrix g = CMatrix::Zero(n, n);
  if (kind == DomainKind::Ball) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) g(j, k) = (j == k ? rho : 0.0) + std::conj(z[j]) * z[k];
    }
    return g / (rho * rho);
  }
  for (int j = 0; j + 1 < n; ++j) {
    for (int k = 0; k + 1 < n; ++k) g(j, k) = (j == k ? rho : 0.0) + std::conj(z[j]) * z[k];
    g(j, n - 1) = std::conj(z[j]) / (2.0 * I);
    g(n - 1, j) = -z[j] / (2.0 * I);
  }
  g(n - 1, n - 1) = 0.25;
  return g / (rho * rho);
}

CMatrix siegel_inverse_metric(const Point& z) {
  if (z.kind() != DomainKind::Siegel) throw DomainError("siegel_inverse_metric needs a Siegel point");
  const int n = z.dim();
  CMatrix h = CMatrix::Identity(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    h(j, n - 1) = 2.0 * I * std::conj(z[j]);
    h(n - 1, j) = -2.0 * I * z[j];
  }
  h(n - 1, n - 1) = 4.0 * z[n - 1].imag();
  return z.defining() * h;
}

CMatrix metric_from_log_kernel(const Point& z, double h) {
  const int n = z.dim();
  const DomainKind kind = z.kind();
  // Second derivatives of F(x, y) = log K(z, z) along real directions.
  auto F = [&](int a, double sa, int b, double sb) {
    CVector w = z.z();
    auto bump = [&](int dir, double s) {
      if (dir < n) w[dir] += s;
      else w[dir - n] += cplx(0.0, s);
    };
    bump(a, sa);
    bump(b, sb);
    return log_kernel_diag(kind, w);
  };
  auto d2 = [&](int a, int b) {
    return (F(a, h, b, h) - F(a, h, b, -h) - F(a, -h, b, h) + F(a, -h, b, -h)) / (4.0 * h * h);
  };
  CMatrix g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double xx = d2(j, k), yy = d2(n + j, n + k);
      const double xy = d2(j, n + k), yx = d2(n + j, k);
      g(j, k) = 0.25 * cplx(xx + yy, xy - yx) / (n + 1.0);
    }
  }
  return g;
}

double kahler_pair(const DomainSpec& d, const Point& z, const CVector& U, const CVector& V) {
  if (U.size() != d.n || V.size() != d.n || z.dim() != d.n) {
    throw DimensionError("kahler_pair: dimension mismatch");
  }
  const CMatrix g = kahler_metric(d.kind, z);
  cplx s = 0.0;
  for (int j = 0; j < d.n; ++j) {
    for (int k = 0; k < d.n; ++k) s += g(j, k) * (U[j] * std::conj(V[k]) - V[j] * std::conj(U[k]));
  }
  return (I * s).real();
}

CVector dbar_finite_difference(const ScalarField& f, const Point& z, double h) {
  const int n = z.dim();
  CVector out(n);
  for (int k = 0; k < n; ++k) {
    auto shifted = [&](cplx delta) {
      CVector w = z.z();
      w[k] += delta;
      return f(Point(z.kind(), w));
    };
    const double dx = (shifted(h) - shifted(-h)) / (2.0 * h);
    const double dy = (shifted(cplx(0.0, h)) - shifted(cplx(0.0, -h))) / (2.0 * h);
    out[k] = 0.5 * cplx(dx, dy);
  }
  return out;
}

CVector hamiltonian_field_ball(const CVector& dbar_f, const Point& z) {
  if (z.kind() != DomainKind::Ball) throw DomainError("hamiltonian_field_ball needs a ball point");
  const int n = z.dim();
  const double rho = z.defining();
  CVector x(n);
  for (int k = 0; k < n; ++k) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += ((j == k ? 1.0 : 0.0) - std::conj(z[j]) * z[k]) * dbar_f[j];
    x[k] = -I * rho * s;
  }
  return x;
}

CVector hamiltonian_field_siegel(const CVector& dbar_f, const Point& z) {
  if (z.kind() != DomainKind::Siegel) throw DomainError("hamiltonian_field_siegel needs a Siegel point");
  const int n = z.dim();
  const double delta = z.defining();
  CVector x(n);
  cplx last = 4.0 * z[n - 1].imag() * dbar_f[n - 1];
  for (int k = 0; k + 1 < n; ++k) {
    x[k] = -I * delta * (dbar_f[k] - 2.0 * I * z[k] * dbar_f[n - 1]);
    last += 2.0 * I * std::conj(z[k]) * dbar_f[k];
  }
  x[n - 1] = -I * delta * last;
  return x;
}

CVector hamiltonian_field(const SmoothField& f, const Point& z) {
  const CVector d = f.dbar ? f.dbar(z) : dbar_finite_difference(f.value, z);
  return z.kind() == DomainKind::Ball ? hamiltonian_field_ball(d, z) : hamiltonian_field_siegel(d, z);
}

double differential(const CVector& dbar_f, const CVector& Y) {
  cplx s = 0.0;
  for (Eigen::Index k = 0; k < Y.size(); ++k) s += std::conj(dbar_f[k]) * Y[k];
  return 2.0 * s.real();
}

double verify_moment_property(const MasgAction& g, const RVector& X, const Point& z,
                              Partials partials) {
  CVector d;
  switch (partials) {
    case Partials::Analytic: d = moment_dbar(g, X, z); break;
    case Partials::ComplexStep: d = moment_dbar_complex_step(g, X, z); break;
    case Partials::FiniteDifference:
      d = dbar_finite_difference([&](const Point& p) { return moment_masg(g, p).dot(X); }, z);
      break;
  }
  const CVector field = z.kind() == DomainKind::Ball ? hamiltonian_field_ball(d, z)
                                                     : hamiltonian_field_siegel(d, z);
  return (field - fundamental_field(g, X, z)).norm();
}

}  // namespace bergman
