#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/moment.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman {

enum class SpectralFamily { Elliptic, Parabolic, Nilpotent, QuasiNilpotent };

const char* to_string(SpectralFamily f);
SpectralFamily parse_spectral_family(const std::string& name);

// Quadrature orders. simplex: Gauss-Jacobi nodes per simplex axis (elliptic);
// line: Gauss-Laguerre nodes per axis; outer: Gauss-Jacobi nodes for
// the u_n integral of the moment forms; de_step: exp-sinh step for the x_n
// integral of the beta forms; gauss_step, gauss_range: trapezoid grid for the
// Gaussian-weighted axes.
struct SpectralOrders {
  int simplex = 40;
  int line = 96;
  int outer = 96;
  double de_step = 0.05;
  double gauss_step = 0.1;
  double gauss_range = 6.5;
};

// Elliptic family on B^n, p in N^n. The beta forms take f on R^m (m = |beta|),
// the moment form takes f on R^n_+.
cplx gamma_elliptic_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                         const SpectralOrders& orders = {});
cplx gamma_elliptic_moment(const Profile& f, int n, double lambda, const MultiIndex& p,
                           const SpectralOrders& orders = {});
cplx gamma_elliptic_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                          const SpectralOrders& orders = {});

// (lambda + 1) / (lambda + |p| + n + 1), the spectrum of a = 1 - |z|^2.
double gamma_elliptic_defining(int n, double lambda, const MultiIndex& p);

// Parabolic family on D_n, p in N^{n-1}, xi > 0.
cplx gamma_parabolic_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                          double xi, const SpectralOrders& orders = {});
cplx gamma_parabolic_moment(const Profile& f, int n, double lambda, const MultiIndex& p, double xi,
                            const SpectralOrders& orders = {});
cplx gamma_parabolic_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                           double xi, const SpectralOrders& orders = {});

// Nilpotent family on D_n, y' in R^{n-1}, xi > 0.
cplx gamma_nilpotent_beta(const Profile& f, const BetaBasis& beta, double lambda, const RVector& yprime,
                          double xi, const SpectralOrders& orders = {});
cplx gamma_nilpotent_moment(const Profile& f, int n, double lambda, const RVector& yprime, double xi,
                            const SpectralOrders& orders = {});
cplx gamma_nilpotent_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const RVector& yprime,
                           double xi, const SpectralOrders& orders = {});

// Quasi-nilpotent family on D_n with k = |p| entries, 1 <= k <= n-1, and
// y' in R^{n-k-1}.
cplx gamma_quasinilpotent_beta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                               const RVector& yprime, double xi, const SpectralOrders& orders = {});
cplx gamma_quasinilpotent_moment(const Profile& f, int n, double lambda, const MultiIndex& p,
                                 const RVector& yprime, double xi, const SpectralOrders& orders = {});
cplx gamma_quasinilpotent_Abeta(const Profile& f, const BetaBasis& beta, double lambda, const MultiIndex& p,
                                const RVector& yprime, double xi, const SpectralOrders& orders = {});

// Quasi-hyperbolic coordinates f_1..f_n of a Siegel point together with both
// sides of the identities
//   Re z_n / Delta = cot f_n,   |z_j|^2 / Delta = f_j^2 csc f_n / (1 - sum f_k^2).
struct HyperbolicCoordinates {
  RVector f;
  double cot_lhs = 0.0;
  double cot_rhs = 0.0;
  RVector ratio_lhs;
  RVector ratio_rhs;

  double cot_residual() const;
  double ratio_residual() const;
};

HyperbolicCoordinates hyperbolic_coordinates(const Point& z);

struct SpectrumQuery {
  SpectralFamily family = SpectralFamily::Elliptic;
  int n = 1;
  double lambda = 0.0;
  int k = 0;
  MultiIndex p;
  double xi = 1.0;
  RVector yprime;
};

// Throws std::invalid_argument unless the field lengths match the family.
void validate(const SpectrumQuery& q);

enum class Representation { Beta, Moment, ABeta };

const char* to_string(Representation r);

// The moment representation integrates f composed with A(beta), so all three
// representations describe the same symbol.
cplx evaluate(const SpectrumQuery& q, Representation r, const Profile& f, const BetaBasis& beta,
              const SpectralOrders& orders = {});

// p over |p| <= max_degree, xi over {0.25, 0.5, 1, 2, 4}, y' components over
// {-2, -1, 0, 1, 2}.
std::vector<SpectrumQuery> standard_grid(SpectralFamily family, int n, double lambda, int k = 0,
                                         int max_degree = 6);

struct SpectrumRow {
  SpectrumQuery query;
  std::vector<cplx> values;  // one per representation
};

struct SpectrumTable {
  std::string profile_name;
  RMatrix beta;
  std::vector<Representation> representations;
  std::vector<SpectrumRow> rows;

  // Largest pairwise difference between representations over all rows.
  double cross_residual() const;
  void write_csv(std::ostream& out) const;
};

SpectrumTable spectrum_table(const std::vector<SpectrumQuery>& queries,
                             const std::vector<Representation>& reps, const Profile& f,
                             const std::string& profile_name, const BetaBasis& beta,
                             const SpectralOrders& orders = {});

struct DiagonalComparison {
  std::vector<MultiIndex> basis;
  std::vector<cplx> diagonal;
  std::vector<cplx> gamma;
  double max_residual = 0.0;
  double off_diagonal = 0.0;
};

// Assembles the Toeplitz matrix of an elliptic symbol through degree d and
// compares its diagonal with gamma_elliptic_beta at every |p| <= d.
DiagonalComparison diagonal_vs_gamma(const SymbolSpec& s, int d, const BallRule& rule,
                                     const SpectralOrders& orders = {});

}  // namespace bergman
