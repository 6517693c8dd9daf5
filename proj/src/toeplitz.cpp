#include "bergman/toeplitz.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

#include <fftw3.h>

namespace bergman {

int degree(const MultiIndex& p) { return std::accumulate(p.begin(), p.end(), 0); }

double log_factorial(const MultiIndex& p) {
  double s = 0.0;
  for (int x : p) s += std::lgamma(x + 1.0);
  return s;
}

double monomial_norm_sq(int n, double lambda, const MultiIndex& p) {
  if (!(lambda > -1.0)) throw std::invalid_argument("weight lambda must exceed -1");
  if (static_cast<int>(p.size()) != n) throw DimensionError("multi-index length must equal n");
  for (int x : p) {
    if (x < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
  return std::exp(log_factorial(p) + std::lgamma(n + 1.0 + lambda) -
                  std::lgamma(n + degree(p) + lambda + 1.0));
}

namespace {

void compositions(int n, int k, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int first = k; first >= 0; --first) {
    cur[pos] = first;
    compositions(n, k - first, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_basis(int n, int d) {
  if (n < 1) throw std::invalid_argument("basis dimension must be positive");
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  for (int k = 0; k <= d; ++k) compositions(n, k, 0, cur, out);
  return out;
}

ToeplitzMatrix ToeplitzMatrix::truncate(int d) const {
  if (d < 0 || d > degree) throw std::invalid_argument("truncation degree out of range");
  ToeplitzMatrix out = *this;
  out.degree = d;
  std::size_t count = 0;
  while (count < basis.size() && bergman::degree(basis[count]) <= d) ++count;
  out.basis.resize(count);
  out.entries = entries.topLeftCorner(count, count);
  return out;
}

double ToeplitzMatrix::hermitian_residual() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double ToeplitzMatrix::off_diagonal_max() const {
  CMatrix off = entries;
  off.diagonal().setZero();
  return off.size() ? off.cwiseAbs().maxCoeff() : 0.0;
}

ToeplitzMatrix assemble_toeplitz(const BallSymbol& a, const std::string& name, int d,
                                 const BallRule& rule) {
  const int n = rule.n;
  const int NA = rule.angular_N;
  if (NA < 2 * d + 1) throw std::invalid_argument("angular order must exceed twice the degree");
  ToeplitzMatrix M;
  M.symbol_name = name;
  M.n = n;
  M.lambda = rule.lambda;
  M.degree = d;
  M.basis = enumerate_basis(n, d);
  M.rule_description = rule.description();
  const std::size_t B = M.basis.size();

  std::size_t grid = 1;
  for (int j = 0; j < n; ++j) grid *= NA;
  std::vector<cplx> samples(grid), spectrum(grid);
  std::vector<int> dims(n, NA);
  // FFTW_ESTIMATE keeps the plan, and hence the rounding, reproducible.
  fftw_plan plan = fftw_plan_dft(n, dims.data(), reinterpret_cast<fftw_complex*>(samples.data()),
                                 reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD,
                                 FFTW_ESTIMATE);
  if (!plan) throw std::runtime_error("FFTW planning failed");

  // Flattened FFT index of the frequency p - q for every entry.
  std::vector<std::size_t> freq(B * B);
  for (std::size_t i = 0; i < B; ++i) {
    for (std::size_t j = 0; j < B; ++j) {
      std::size_t idx = 0;
      for (int c = 0; c < n; ++c) {
        const int k = ((M.basis[i][c] - M.basis[j][c]) % NA + NA) % NA;
        idx = idx * NA + k;
      }
      freq[i * B + j] = idx;
    }
  }
  std::vector<cplx> phase(NA);
  for (int t = 0; t < NA; ++t) phase[t] = std::polar(1.0, rule.angle(t));

  std::vector<CompensatedSum<cplx>> acc(B * B);
  std::vector<double> powers(B);
  std::vector<int> digit(n);
  CVector z(n);
  const double avg = 1.0 / static_cast<double>(grid);
  for (std::size_t r = 0; r < rule.radial_size(); ++r) {
    const double* m = rule.modulus(r);
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t g = 0; g < grid; ++g) {
      for (int c = 0; c < n; ++c) z[c] = m[c] * phase[digit[c]];
      samples[g] = a(z);
      for (int c = n - 1; c >= 0; --c) {
        if (++digit[c] < NA) break;
        digit[c] = 0;
      }
    }
    fftw_execute(plan);
    for (std::size_t i = 0; i < B; ++i) {
      double pw = 1.0;
      for (int c = 0; c < n; ++c) pw *= std::pow(m[c], M.basis[i][c]);
      powers[i] = pw;
    }
    const double w = rule.radial_weights[r] * avg;
    for (std::size_t i = 0; i < B; ++i) {
      for (std::size_t j = 0; j < B; ++j) {
        acc[i * B + j].add(w * powers[i] * powers[j] * spectrum[freq[i * B + j]]);
      }
    }
  }
  fftw_destroy_plan(plan);

  std::vector<double> norms(B);
  for (std::size_t i = 0; i < B; ++i) norms[i] = std::sqrt(monomial_norm_sq(n, rule.lambda, M.basis[i]));
  M.entries.resize(B, B);
  for (std::size_t i = 0; i < B; ++i) {
    for (std::size_t j = 0; j < B; ++j) M.entries(i, j) = acc[i * B + j].value() / (norms[i] * norms[j]);
  }
  return M;
}

BallSymbol transport_symbol(SiegelSymbol a) {
  return [a = std::move(a)](const CVector& z) { return a(cayley_to_siegel(Point::ball(z))); };
}

BallSymbol ball_symbol(const SymbolSpec& s) {
  if (s.action.domain() == DomainKind::Ball) {
    return [s](const CVector& z) { return eval_symbol(s, Point::ball(z)); };
  }
  return transport_symbol([s](const Point& w) { return eval_symbol(s, w); });
}

ToeplitzMatrix assemble_toeplitz(const SymbolSpec& s, int d, const BallRule& rule) {
  if (s.action.n != rule.n) throw DimensionError("symbol and rule dimensions differ");
  return assemble_toeplitz(ball_symbol(s), s.name, d, rule);
}

double commutator_norm(const ToeplitzMatrix& A, const ToeplitzMatrix& B, int buffer) {
  if (A.n != B.n || A.degree != B.degree || A.lambda != B.lambda || A.basis != B.basis) {
    throw std::invalid_argument("commutator_norm: matrices carry different metadata");
  }
  if (buffer < 0 || buffer > A.degree) throw std::invalid_argument("buffer out of range");
  const CMatrix C = A.entries * B.entries - B.entries * A.entries;
  Eigen::Index block = 0;
  while (block < static_cast<Eigen::Index>(A.basis.size()) && degree(A.basis[block]) <= A.degree - buffer) {
    ++block;
  }
  return C.topLeftCorner(block, block).norm() / static_cast<double>(block);
}

void write_csv(const ToeplitzMatrix& M, std::ostream& out) {
  out << "# symbol: " << M.symbol_name << "\n";
  out << "# n=" << M.n << " lambda=" << std::setprecision(17) << M.lambda << " degree=" << M.degree << "\n";
  out << "# rule: " << M.rule_description << "\n";
  out << "# basis:";
  for (const MultiIndex& p : M.basis) {
    out << " (";
    for (std::size_t c = 0; c < p.size(); ++c) out << (c ? "," : "") << p[c];
    out << ")";
  }
  out << "\n# entries are re;im pairs, row p, column q\n";
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < M.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.entries.cols(); ++j) {
      if (j) out << ",";
      out << M.entries(i, j).real() << ";" << M.entries(i, j).imag();
    }
    out << "\n";
  }
}

}  // namespace bergman
