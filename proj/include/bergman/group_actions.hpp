#pragma once

#include <string>

#include "bergman/domains.hpp"

namespace bergman {

enum class MasgKind { QuasiElliptic, QuasiParabolic, QuasiHyperbolic, Nilpotent, QuasiNilpotent };

const char* to_string(MasgKind kind);
MasgKind parse_masg_kind(const std::string& name);

// One of the five maximal Abelian actions. For QuasiNilpotent the first k
// coordinates carry a torus, coordinates k+1..n-1 carry real translations.
struct MasgAction {
  MasgKind kind = MasgKind::QuasiElliptic;
  int n = 1;
  int k = 0;

  DomainKind domain() const {
    return kind == MasgKind::QuasiElliptic ? DomainKind::Ball : DomainKind::Siegel;
  }
  // Number of leading coordinates acted on by rotations.
  int torus_count() const;
  std::string label() const;
};

MasgAction make_action(MasgKind kind, int n, int k = 0);

// Chart on the group: torus angles, translations and log of the dilation,
// so that composition is vector addition.
using GroupParam = RVector;

Point act(const MasgAction& g, const GroupParam& p, const Point& z);
GroupParam compose(const GroupParam& p, const GroupParam& q);
GroupParam exp_group(const MasgAction& g, const RVector& X, double s);
CVector fundamental_field(const MasgAction& g, const RVector& X, const Point& z);

inline constexpr double kFiberTol = 1e-9;

struct OrbitTransport {
  bool same_fiber = false;
  GroupParam param;
  double fiber_mismatch = 0.0;  // Euclidean distance of the moment images
  double residual = 0.0;        // |act(param, w) - z| when same_fiber
};

OrbitTransport orbit_transport(const MasgAction& g, const Point& w, const Point& z,
                               double tol = kFiberTol);

}  // namespace bergman
