#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bergman/profiles.hpp"
#include "bergman/spectra.hpp"

using namespace bergman;

namespace {

RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

const Profile kOne = [](const RVector&) { return cplx(1.0); };
const Profile kReciprocal = [](const RVector& a) { return cplx(1.0 / (1.0 + a[0])); };

}  // namespace

// Frozen values below come from adaptive nested quadrature (scipy QUADPACK,
// and mpmath for the elliptic case) of the moment-form integrals.

TEST(Spectra, EllipticFrozenValue) {
  const Profile f = [](const RVector& u) { return cplx(1.0 / (1.0 + u[0] + 2.0 * u[1])); };
  const double want = 0.16722121472549638;
  EXPECT_NEAR(gamma_elliptic_moment(f, 2, 0.5, {1, 2}).real(), want, 1e-13);
  const BetaBasis b = BetaBasis::from_rows({{1.0, 2.0}});
  EXPECT_NEAR(gamma_elliptic_beta(kReciprocal, b, 0.5, {1, 2}).real(), want, 1e-13);
  EXPECT_NEAR(gamma_elliptic_Abeta(kReciprocal, b, 0.5, {1, 2}).real(), want, 1e-13);
}

TEST(Spectra, ParabolicFrozenValue) {
  const Profile f = [](const RVector& u) {
    const double t = 0.3 * u[0] + 0.6 * u[1] - 0.5;
    return cplx(std::exp(-t * t));
  };
  const double want = 0.6040769397998229;
  EXPECT_NEAR(gamma_parabolic_moment(f, 2, 0.5, {2}, 0.5).real(), want, 1e-12);
  EXPECT_NEAR(gamma_parabolic_beta(f, BetaBasis::canonical(2), 0.5, {2}, 0.5).real(), want, 1e-12);
}

TEST(Spectra, NilpotentFrozenValue) {
  const Profile f = [](const RVector& u) {
    const double r = u[0] / u[1] - 0.5;
    return cplx(std::exp(-0.5 * u[1]) / (1.0 + r * r));
  };
  const double want = 0.18155834291065207;
  EXPECT_NEAR(gamma_nilpotent_moment(f, 2, 0.0, vec({0.5}), 2.0).real(), want, 1e-12);
  EXPECT_NEAR(gamma_nilpotent_beta(f, BetaBasis::canonical(2), 0.0, vec({0.5}), 2.0).real(), want, 1e-12);
}

TEST(Spectra, QuasiNilpotentFrozenValue) {
  const Profile f = [](const RVector& u) {
    const double r = u[0] / u[2], s = u[1] / u[2] - 0.5;
    return cplx(std::exp(-0.5 * u[2]) / (1.0 + r * r + s * s));
  };
  const double want = 0.054280571437386745;
  EXPECT_NEAR(gamma_quasinilpotent_moment(f, 3, 0.0, {1}, vec({-1.0}), 1.0).real(), want, 1e-12);
  EXPECT_NEAR(gamma_quasinilpotent_beta(f, BetaBasis::canonical(3), 0.0, {1}, vec({-1.0}), 1.0).real(), want,
              1e-12);
}

TEST(Spectra, ConstantProfileIsNormalized) {
  for (double lambda : {0.0, 1.5}) {
    EXPECT_NEAR(std::abs(gamma_elliptic_beta(kOne, BetaBasis::canonical(2), lambda, {2, 1}) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gamma_elliptic_moment(kOne, 3, lambda, {0, 1, 3}) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gamma_parabolic_beta(kOne, BetaBasis::canonical(2), lambda, {3}, 0.5) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gamma_parabolic_moment(kOne, 3, lambda, {1, 2}, 4.0) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gamma_nilpotent_beta(kOne, BetaBasis::canonical(2), lambda, vec({1.0}), 0.25) - 1.0), 0.0,
                1e-12);
    EXPECT_NEAR(std::abs(gamma_nilpotent_moment(kOne, 2, lambda, vec({-2.0}), 1.0) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gamma_quasinilpotent_moment(kOne, 3, lambda, {2}, vec({1.0}), 2.0) - 1.0), 0.0, 1e-12);
  }
}

TEST(Spectra, EllipticClosedForms) {
  const BetaBasis e = BetaBasis::canonical(1);
  EXPECT_NEAR(gamma_elliptic_beta(kReciprocal, e, 0.0, {0}).real(), 0.5, 1e-13);
  EXPECT_NEAR(gamma_elliptic_beta(kReciprocal, e, 0.0, {3}).real(), 0.2, 1e-13);
  EXPECT_NEAR(gamma_elliptic_defining(1, 0.0, {3}), 0.2, 1e-16);
  const Profile radial = [](const RVector& u) { return cplx(1.0 / (1.0 + u.sum())); };
  EXPECT_NEAR(gamma_elliptic_moment(radial, 1, 0.0, {0}).real(), 0.5, 1e-13);
  // beta = {1_n}: the symbol is 1 - |z|^2.
  const BetaBasis ones = BetaBasis::from_rows({{1.0, 1.0, 1.0}});
  for (const MultiIndex& p : enumerate_basis(3, 4)) {
    EXPECT_NEAR(gamma_elliptic_beta(kReciprocal, ones, 1.5, p).real(), gamma_elliptic_defining(3, 1.5, p), 1e-12);
  }
}

TEST(Spectra, TorusProfilesDoNotDependOnXi) {
  // Dilations move xi but fix u', so a profile of u' alone has a xi-free spectrum.
  const Profile f = [](const RVector& u) { return cplx(1.0 / (1.0 + u[0] * u[0])); };
  const double base = gamma_parabolic_moment(f, 2, 0.5, {2}, 1.0).real();
  for (double xi : {0.25, 0.5, 2.0, 4.0}) {
    EXPECT_NEAR(gamma_parabolic_moment(f, 2, 0.5, {2}, xi).real(), base, 1e-11) << xi;
  }
}

TEST(Spectra, NilpotentTranslation) {
  // f_c(u) = f(u' + c u_n, u_n) shifts the spectrum to y' + sqrt(xi) c / 2.
  const double c = 0.8, xi = 2.0;
  const Profile f = [](const RVector& u) {
    const double r = u[0] / u[1];
    return cplx(std::exp(-0.5 * u[1]) / (1.0 + r * r));
  };
  const Profile fc = [&](const RVector& u) { return f(vec({u[0] + c * u[1], u[1]})); };
  for (double y : {-1.0, 0.0, 0.5}) {
    const cplx shifted = gamma_nilpotent_moment(fc, 2, 0.0, vec({y}), xi);
    const cplx direct = gamma_nilpotent_moment(f, 2, 0.0, vec({y + std::sqrt(xi) * c / 2.0}), xi);
    EXPECT_NEAR(std::abs(shifted - direct), 0.0, 1e-9) << y;
  }
}

TEST(Spectra, QuasiNilpotentReducesToParabolic) {
  // A profile that ignores the translation coordinate sees only the torus and u_n.
  const Profile g = [](const RVector& u) { return cplx(std::exp(-0.3 * u[1]) / (1.0 + u[0])); };
  const Profile f = [&](const RVector& u) { return g(vec({u[0], u[2]})); };
  for (int p : {0, 2}) {
    for (double y : {-1.0, 1.5}) {
      const cplx qn = gamma_quasinilpotent_moment(f, 3, 0.5, {p}, vec({y}), 0.5);
      const cplx par = gamma_parabolic_moment(g, 2, 0.5, {p}, 0.5);
      EXPECT_NEAR(std::abs(qn - par), 0.0, 1e-10) << p << " " << y;
    }
  }
}

TEST(Spectra, BoundedProfilesStayInRange) {
  // 1/(1+exp(-4t)) lies in (0, 1), and so does every average of it.
  const NamedProfile s = make_profile("sigmoid", {{"w", {1.0, -1.0}}, {"b", {-0.5}}}, 2);
  for (const SpectrumQuery& q : standard_grid(SpectralFamily::Parabolic, 2, 0.0, 0, 3)) {
    const cplx v = evaluate(q, Representation::Beta, s.fn, BetaBasis::canonical(2));
    EXPECT_GT(v.real(), 0.0);
    EXPECT_LT(v.real(), 1.0);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
}

TEST(Spectra, HyperbolicCoordinateExamples) {
  CVector z(2);
  z << 0.0, cplx(0.0, 1.0);
  EXPECT_NEAR(hyperbolic_coordinates(Point::siegel(z)).f[1], M_PI / 2, 1e-15);
  z << 0.0, cplx(1.0, 1.0);
  EXPECT_NEAR(hyperbolic_coordinates(Point::siegel(z)).f[1], M_PI / 4, 1e-15);
  z << cplx(0.5, 0.0), cplx(0.0, 1.25);
  const HyperbolicCoordinates h = hyperbolic_coordinates(Point::siegel(z));
  EXPECT_NEAR(h.f[0], 0.5 / std::sqrt(1.25), 1e-15);
  EXPECT_THROW(hyperbolic_coordinates(Point::ball(CVector::Zero(2))), DomainError);
}

TEST(Spectra, HyperbolicIdentitiesAtRandomPoints) {
  std::mt19937_64 rng(41);
  for (int n : {2, 3, 4}) {
    const MasgAction g = make_action(MasgKind::QuasiHyperbolic, n);
    for (int t = 0; t < 1000; ++t) {
      const HyperbolicCoordinates h = hyperbolic_coordinates(random_point(g, rng));
      const double scale = 1.0 + std::abs(h.cot_lhs) + h.ratio_lhs.cwiseAbs().maxCoeff();
      EXPECT_LT(h.cot_residual(), 1e-12 * scale);
      EXPECT_LT(h.ratio_residual(), 1e-12 * scale);
    }
  }
}

TEST(Spectra, DiagonalMatchesGamma) {
  const SymbolSpec s{make_action(MasgKind::QuasiElliptic, 2), BetaBasis::from_rows({{1.0, 2.0}}), kReciprocal,
                     "reciprocal"};
  const DiagonalComparison d = diagonal_vs_gamma(s, 5, ball_full_rule(2, 0.0, 24, 16));
  EXPECT_EQ(d.basis.size(), 21u);
  EXPECT_LT(d.max_residual, 1e-10);
  EXPECT_LT(d.off_diagonal, 1e-14);
}

TEST(Spectra, StandardGridShape) {
  const auto ell = standard_grid(SpectralFamily::Elliptic, 2, 0.0, 0, 6);
  EXPECT_EQ(ell.size(), 28u);
  const auto par = standard_grid(SpectralFamily::Parabolic, 2, 0.0, 0, 6);
  EXPECT_EQ(par.size(), 7u * 5u);
  const auto nil = standard_grid(SpectralFamily::Nilpotent, 2, 0.0);
  EXPECT_EQ(nil.size(), 5u * 5u);
  const auto qn = standard_grid(SpectralFamily::QuasiNilpotent, 3, 0.0, 1, 6);
  EXPECT_EQ(qn.size(), 7u * 5u * 5u);
  for (const auto& q : qn) EXPECT_NO_THROW(validate(q));
}

TEST(Spectra, ValidateRejectsMismatchedQueries) {
  SpectrumQuery q;
  q.family = SpectralFamily::Parabolic;
  q.n = 2;
  q.p = {1, 1};
  EXPECT_THROW(validate(q), DimensionError);
  q.p = {1};
  q.xi = 0.0;
  EXPECT_THROW(validate(q), std::invalid_argument);
  q.family = SpectralFamily::QuasiNilpotent;
  q.xi = 1.0;
  q.k = 2;
  EXPECT_THROW(validate(q), std::invalid_argument);
  q.family = SpectralFamily::Elliptic;
  q.p = {0, 0};
  q.lambda = -1.0;
  EXPECT_THROW(validate(q), std::invalid_argument);
  EXPECT_THROW(parse_spectral_family("hyperbolic"), std::invalid_argument);
}

TEST(Spectra, TableCsv) {
  std::vector<SpectrumQuery> qs(2);
  qs[0].n = qs[1].n = 1;
  qs[0].p = {0};
  qs[1].p = {3};
  const SpectrumTable t = spectrum_table(qs, {Representation::Beta, Representation::ABeta}, kReciprocal,
                                         "reciprocal", BetaBasis::canonical(1));
  EXPECT_LT(t.cross_residual(), 1e-13);
  std::ostringstream out;
  t.write_csv(out);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "family,n,lambda,k,p,xi,yprime,beta_re,beta_im,Abeta_re,Abeta_im");
  std::getline(in, row);
  EXPECT_EQ(row.rfind("elliptic,1,0,0,0,0,,", 0), 0u) << row;
  EXPECT_NEAR(std::stod(row.substr(row.find(",,") + 2)), 0.5, 1e-13);
}
