#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bergman/group_actions.hpp"

namespace bergman {

// mu^G for the five actions, each carrying the leading minus sign:
//   E(n)    -(|z_1|^2, ..., |z_n|^2) / (1 - |z|^2)
//   P(n)    -(2|z_1|^2, ..., 2|z_{n-1}|^2, 1) / (2 Delta)
//   H(n)    -(2|z_1|^2, ..., 2|z_{n-1}|^2, Re z_n) / (2 Delta)
//   N(n)    -(-4 Im z', 1) / (2 Delta)
//   N(n,k)  -(2|z_(1)|^2, -4 Im z_(2), 1) / (2 Delta)
// with Delta = Im z_n - |z'|^2.
RVector moment_masg(const MasgAction& g, const Point& z);

// Wirtinger derivatives d(mu_X)/d(conj z_k) of mu_X = <mu^G, X>, in closed form.
CVector moment_dbar(const MasgAction& g, const RVector& X, const Point& z);

// The same derivatives by complex-step differentiation in real coordinates.
CVector moment_dbar_complex_step(const MasgAction& g, const RVector& X, const Point& z);

// A point whose moment image is mu, or nullopt when mu is outside the image.
std::optional<Point> moment_section(const MasgAction& g, const RVector& mu);

class BetaBasis {
 public:
  // Rows of A are the vectors v_1..v_m; rank m is required.
  explicit BetaBasis(RMatrix A);
  static BetaBasis from_rows(const std::vector<std::vector<double>>& rows);
  static BetaBasis canonical(int n);

  int n() const { return static_cast<int>(A_.cols()); }
  int m() const { return static_cast<int>(A_.rows()); }
  const RMatrix& matrix() const { return A_; }
  RVector vector(int j) const { return A_.row(j).transpose(); }
  bool is_orthogonal(double tol = 1e-12) const;
  // Orthonormal basis of ker A, as columns.
  RMatrix kernel() const;

 private:
  RMatrix A_;
};

inline constexpr double kRankTol = 1e-10;

RVector project_orthogonal(const BetaBasis& beta, const RVector& s);
// Orthogonal projection onto span(beta) for an arbitrary basis.
RVector project_span(const BetaBasis& beta, const RVector& s);
RVector moment_subgroup(const MasgAction& g, const BetaBasis& beta, const Point& z);

// a_j(z) = <c(z), v_j> * scale(z), i.e. -<mu^G(z), v_j>, for every family.
RVector coordinate_functions(const MasgAction& g, const BetaBasis& beta, const Point& z);

using Profile = std::function<cplx(const RVector&)>;

struct SymbolSpec {
  MasgAction action;
  BetaBasis beta;
  Profile profile;
  std::string name;
};

cplx eval_symbol(const SymbolSpec& s, const Point& z);

using Partition = std::vector<int>;

BetaBasis partition_beta_elliptic(const Partition& k);
BetaBasis partition_beta_parabolic(const Partition& k);
BetaBasis partition_beta_quasinilpotent(const Partition& alpha, int n);

Point random_point(const MasgAction& g, std::mt19937_64& rng);
GroupParam random_param(const MasgAction& g, std::mt19937_64& rng, double scale = 1.0);

struct FiberWitness {
  bool found = false;
  std::optional<Point> z;
  std::optional<Point> w;
  double moment_gap = 0.0;
  double discriminator_gap = 0.0;
  int attempts = 0;
};

inline constexpr double kWitnessMomentTol = 1e-10;
inline constexpr double kWitnessGap = 0.1;

FiberWitness fiber_witness(const MasgAction& g, const BetaBasis& beta,
                           const std::function<double(const Point&)>& discriminator, int trials,
                           std::uint64_t seed);

}  // namespace bergman
