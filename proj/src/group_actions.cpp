#include "bergman/group_actions.hpp"

#include <cmath>

#include "bergman/moment.hpp"

namespace bergman {

namespace {

const cplx I(0.0, 1.0);

// Below this modulus a coordinate is treated as zero and its phase is free.
constexpr double kPhaseFloor = 1e-300;

void check_point(const MasgAction& g, const Point& z) {
  if (z.kind() != g.domain()) {
    throw DomainError(g.label() + " acts on the " + to_string(g.domain()) + ", got a point in the " +
                      to_string(z.kind()));
  }
  if (z.dim() != g.n) throw DimensionError(g.label() + ": point dimension mismatch");
}

void check_vector(const MasgAction& g, const RVector& v, const char* what) {
  if (v.size() != g.n) throw DimensionError(g.label() + ": " + what + " must have length n");
}

double phase_shift(cplx from, cplx to) {
  if (std::abs(from) < kPhaseFloor || std::abs(to) < kPhaseFloor) return 0.0;
  return std::arg(to / from);
}

}  // namespace

const char* to_string(MasgKind kind) {
  switch (kind) {
    case MasgKind::QuasiElliptic: return "elliptic";
    case MasgKind::QuasiParabolic: return "parabolic";
    case MasgKind::QuasiHyperbolic: return "hyperbolic";
    case MasgKind::Nilpotent: return "nilpotent";
    case MasgKind::QuasiNilpotent: return "quasinilpotent";
  }
  return "?";
}

MasgKind parse_masg_kind(const std::string& name) {
  for (MasgKind k : {MasgKind::QuasiElliptic, MasgKind::QuasiParabolic, MasgKind::QuasiHyperbolic,
                     MasgKind::Nilpotent, MasgKind::QuasiNilpotent}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown action '" + name + "'");
}

int MasgAction::torus_count() const {
  switch (kind) {
    case MasgKind::QuasiElliptic: return n;
    case MasgKind::QuasiParabolic:
    case MasgKind::QuasiHyperbolic: return n - 1;
    case MasgKind::Nilpotent: return 0;
    case MasgKind::QuasiNilpotent: return k;
  }
  return 0;
}

std::string MasgAction::label() const {
  switch (kind) {
    case MasgKind::QuasiElliptic: return "E(" + std::to_string(n) + ")";
    case MasgKind::QuasiParabolic: return "P(" + std::to_string(n) + ")";
    case MasgKind::QuasiHyperbolic: return "H(" + std::to_string(n) + ")";
    case MasgKind::Nilpotent: return "N(" + std::to_string(n) + ")";
    case MasgKind::QuasiNilpotent: return "N(" + std::to_string(n) + "," + std::to_string(k) + ")";
  }
  return "?";
}

MasgAction make_action(MasgKind kind, int n, int k) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("action dimension out of range");
  if (kind == MasgKind::QuasiNilpotent) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("quasi-nilpotent action needs 1 <= k <= n-2");
  } else {
    k = 0;
  }
  return MasgAction{kind, n, k};
}

Point act(const MasgAction& g, const GroupParam& p, const Point& z) {
  check_point(g, z);
  check_vector(g, p, "group parameter");
  const int n = g.n;
  const int t = g.torus_count();
  CVector w(n);
  if (g.kind == MasgKind::QuasiElliptic) {
    for (int j = 0; j < n; ++j) w[j] = std::polar(1.0, p[j]) * z[j];
    return Point::ball(std::move(w));
  }
  if (g.kind == MasgKind::QuasiHyperbolic) {
    const double r = std::exp(p[n - 1]);
    const double sr = std::sqrt(r);
    for (int j = 0; j < n - 1; ++j) w[j] = sr * std::polar(1.0, p[j]) * z[j];
    w[n - 1] = r * z[n - 1];
    return Point::siegel(std::move(w));
  }
  cplx shift = p[n - 1];
  for (int j = 0; j < t; ++j) w[j] = std::polar(1.0, p[j]) * z[j];
  for (int j = t; j < n - 1; ++j) {
    w[j] = z[j] + p[j];
    shift += 2.0 * I * z[j] * p[j] + I * p[j] * p[j];
  }
  w[n - 1] = z[n - 1] + shift;
  return Point::siegel(std::move(w));
}

GroupParam compose(const GroupParam& p, const GroupParam& q) {
  if (p.size() != q.size()) throw DimensionError("compose: parameter length mismatch");
  return p + q;
}

GroupParam exp_group(const MasgAction& g, const RVector& X, double s) {
  check_vector(g, X, "Lie algebra element");
  return s * X;
}

CVector fundamental_field(const MasgAction& g, const RVector& X, const Point& z) {
  check_point(g, z);
  check_vector(g, X, "Lie algebra element");
  const int n = g.n;
  const int t = g.torus_count();
  CVector v(n);
  switch (g.kind) {
    case MasgKind::QuasiElliptic:
      for (int j = 0; j < n; ++j) v[j] = I * X[j] * z[j];
      return v;
    case MasgKind::QuasiHyperbolic:
      for (int j = 0; j < n - 1; ++j) v[j] = (0.5 * X[n - 1] + I * X[j]) * z[j];
      v[n - 1] = X[n - 1] * z[n - 1];
      return v;
    default: break;
  }
  cplx last = X[n - 1];
  for (int j = 0; j < t; ++j) v[j] = I * X[j] * z[j];
  for (int j = t; j < n - 1; ++j) {
    v[j] = X[j];
    last += 2.0 * I * X[j] * z[j];
  }
  v[n - 1] = last;
  return v;
}

OrbitTransport orbit_transport(const MasgAction& g, const Point& w, const Point& z, double tol) {
  check_point(g, w);
  check_point(g, z);
  const int n = g.n;
  const int t = g.torus_count();
  OrbitTransport out;
  out.fiber_mismatch = (moment_masg(g, z) - moment_masg(g, w)).norm();
  if (!(out.fiber_mismatch < tol)) return out;

  GroupParam p = GroupParam::Zero(n);
  if (g.kind == MasgKind::QuasiElliptic) {
    for (int j = 0; j < n; ++j) p[j] = phase_shift(w[j], z[j]);
  } else {
    for (int j = 0; j < t; ++j) p[j] = phase_shift(w[j], z[j]);
    if (g.kind == MasgKind::QuasiHyperbolic) {
      p[n - 1] = std::log(z.defining() / w.defining());
    } else {
      double h = z[n - 1].real() - w[n - 1].real();
      for (int j = t; j < n - 1; ++j) {
        p[j] = z[j].real() - w[j].real();
        h += 2.0 * w[j].imag() * p[j];
      }
      p[n - 1] = h;
    }
  }
  const Point moved = act(g, p, w);
  out.residual = (moved.z() - z.z()).norm();
  out.same_fiber = out.residual < 10.0 * tol;
  out.param = std::move(p);
  return out;
}

}  // namespace bergman
