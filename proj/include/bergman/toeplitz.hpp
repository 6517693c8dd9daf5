#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/moment.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

using MultiIndex = std::vector<int>;

int degree(const MultiIndex& p);
double log_factorial(const MultiIndex& p);

// |z^p|^2 in L^2(B^n, v_lambda) = p! Gamma(n+1+lambda) / Gamma(n+|p|+lambda+1).
double monomial_norm_sq(int n, double lambda, const MultiIndex& p);

// All |p| <= d in graded lexicographic order: by degree, then by decreasing
// leading exponents, e.g. (0,0), (1,0), (0,1), (2,0), (1,1), (0,2).
std::vector<MultiIndex> enumerate_basis(int n, int d);

// Symbol on ball coordinates; the caller guarantees |z| < 1.
using BallSymbol = std::function<cplx(const CVector&)>;
// Symbol on Siegel coordinates.
using SiegelSymbol = std::function<cplx(const Point&)>;

struct ToeplitzMatrix {
  std::string symbol_name;
  int n = 1;
  double lambda = 0.0;
  int degree = 0;
  std::vector<MultiIndex> basis;
  CMatrix entries;  // entries(p, q) = <a e_q, e_p>
  std::string rule_description;

  // Leading block for a lower degree (the basis order is graded).
  ToeplitzMatrix truncate(int d) const;
  double hermitian_residual() const;
  double off_diagonal_max() const;
};

// M[p][q] = int a(z) z^q conj(z^p) dv_lambda / (|z^p| |z^q|) using the ball
// rule; the angular sums are evaluated with an FFT per radial node.
ToeplitzMatrix assemble_toeplitz(const BallSymbol& a, const std::string& name, int d,
                                 const BallRule& rule);
// Siegel-domain symbols are transported to the ball first.
ToeplitzMatrix assemble_toeplitz(const SymbolSpec& s, int d, const BallRule& rule);

// z -> a(phi(z)), phi the Cayley map onto the Siegel domain.
BallSymbol transport_symbol(SiegelSymbol a);
BallSymbol ball_symbol(const SymbolSpec& s);

// Frobenius norm of AB - BA restricted to |p| <= d - buffer, divided by the
// dimension of that block.
double commutator_norm(const ToeplitzMatrix& A, const ToeplitzMatrix& B, int buffer = 2);

// Row-major CSV with the basis list in leading comment lines.
void write_csv(const ToeplitzMatrix& M, std::ostream& out);

}  // namespace bergman
