#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bergman/domains.hpp"
#include "bergman/quadrature.hpp"

using namespace bergman;

namespace {

const cplx I(0.0, 1.0);

CVector vec(std::initializer_list<cplx> v) {
  CVector z(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (cplx c : v) z[i++] = c;
  return z;
}

}  // namespace

TEST(Domains, PointValidation) {
  EXPECT_NO_THROW(Point::ball(vec({0.5, 0.5})));
  EXPECT_THROW(Point::ball(vec({0.8, 0.8})), DomainError);
  EXPECT_THROW(Point::ball(vec({1.0})), DomainError);
  EXPECT_THROW(Point::siegel(vec({1.0, I})), DomainError);
  EXPECT_NO_THROW(Point::siegel(vec({0.5, 0.3 * I})));
  EXPECT_THROW(Point::ball(CVector(0)), DimensionError);
  EXPECT_THROW(make_domain(DomainKind::Ball, 9, 0.0), std::invalid_argument);
  EXPECT_THROW(make_domain(DomainKind::Ball, 2, -1.0), std::invalid_argument);
}

TEST(Domains, ContainsChecksDimension) {
  const DomainSpec d = make_domain(DomainKind::Siegel, 2, 0.0);
  EXPECT_TRUE(contains(d, vec({0.1, I})));
  EXPECT_FALSE(contains(d, vec({2.0, I})));
  EXPECT_THROW(contains(d, vec({I})), DimensionError);
}

TEST(Domains, CayleyFixedValues) {
  const Point w = cayley_to_siegel(Point::ball(vec({0.0, 0.0})));
  EXPECT_NEAR(std::abs(w[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[1] - I), 0.0, 1e-15);
  // n = 1: z = 1/2 maps to i(1 - 1/2)/(1 + 1/2) = i/3.
  EXPECT_NEAR(std::abs(cayley_to_siegel(Point::ball(vec({0.5})))[0] - I / 3.0), 0.0, 1e-15);
}

TEST(Domains, CayleyRoundTripAndDefiningFunction) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t) {
      const CVector z = sample_ball(n, 0.0, rng);
      const Point w = cayley_to_siegel(Point::ball(z));
      EXPECT_LT((cayley_to_ball(w).z() - z).norm(), 1e-11);
      const double expected = (1.0 - z.squaredNorm()) / std::norm(1.0 + z[n - 1]);
      EXPECT_NEAR(w.defining(), expected, 1e-10 * std::max(1.0, expected));
    }
  }
}

TEST(Domains, CayleyRejectsWrongDomain) {
  EXPECT_THROW(cayley_to_siegel(Point::siegel(vec({I}))), DomainError);
  EXPECT_THROW(cayley_to_ball(Point::ball(vec({0.1}))), DomainError);
}

TEST(Domains, NormalizationConstant) {
  EXPECT_NEAR(normalization_constant(1, 0.0), 1.0 / M_PI, 1e-15);
  // Gamma(4.5) / (pi^2 Gamma(2.5)) = 3.5 * 2.5 / pi^2
  EXPECT_NEAR(normalization_constant(2, 1.5), 8.75 / (M_PI * M_PI), 1e-14);
}

TEST(Domains, BergmanKernelDiagonal) {
  const DomainSpec d = make_domain(DomainKind::Ball, 2, 1.5);
  const Point z = Point::ball(vec({0.3, 0.4 * I}));
  EXPECT_NEAR(std::abs(bergman_kernel(d, z, z) - std::pow(0.75, -4.5)), 0.0, 1e-12);
  const Point o = Point::ball(vec({0.0, 0.0}));
  EXPECT_NEAR(std::abs(bergman_kernel(d, z, o) - 1.0), 0.0, 1e-15);
  // Hermitian symmetry.
  const Point w = Point::ball(vec({-0.2 + 0.1 * I, 0.5}));
  EXPECT_LT(std::abs(bergman_kernel(d, z, w) - std::conj(bergman_kernel(d, w, z))), 1e-14);
}

TEST(Domains, KernelDiagonalIsPowerOfDefiningFunction) {
  const DomainSpec b = make_domain(DomainKind::Ball, 2, 0.5);
  const DomainSpec s = make_domain(DomainKind::Siegel, 2, 0.5);
  const Point z = Point::ball(vec({0.2 - 0.3 * I, 0.1 + 0.4 * I}));
  const Point w = cayley_to_siegel(z);
  EXPECT_NEAR(std::abs(bergman_kernel(b, z, z)), std::pow(z.defining(), -3.5), 1e-12);
  EXPECT_NEAR(std::abs(bergman_kernel(s, w, w)), std::pow(w.defining(), -3.5), 1e-10);
}

TEST(Domains, WeightDensityIntegratesToOneOnTheDisc) {
  const DomainSpec d = make_domain(DomainKind::Ball, 1, 2.0);
  const QuadratureRule r = gauss_jacobi_01(30, 0.0, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double rad = r.nodes[i];
    total += r.weights[i] * 2.0 * M_PI * rad * weight_density(d, Point::ball(vec({rad})));
  }
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(Domains, ULambdaIsIsometricOnConstants) {
  // || U_0 1 ||^2 on the upper half-plane with density 1/(4 pi):
  // integral of 16 / ((1+y)^2 + x^2)^2 dx dy / (4 pi) = 1.
  const DomainSpec d = make_domain(DomainKind::Siegel, 1, 0.0);
  const QuadratureRule gl = gauss_jacobi_01(120, 0.0, 0.0);
  const auto one = [](const Point&) { return cplx(1.0); };
  double total = 0.0;
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const double theta = M_PI * (gl.nodes[i] - 0.5);
    for (std::size_t j = 0; j < gl.size(); ++j) {
      const double s = gl.nodes[j];
      const double y = s / (1.0 - s);
      const double jy = 1.0 / ((1.0 - s) * (1.0 - s));
      // x scaled by 1 + y keeps the peak of the integrand at unit width.
      const double x = (1.0 + y) * std::tan(theta);
      const double jx = (1.0 + y) * M_PI / (std::cos(theta) * std::cos(theta));
      const Point w = Point::siegel(vec({cplx(x, y)}));
      total += gl.weights[i] * gl.weights[j] * jx * jy * std::norm(u_lambda_apply(0.0, one, w)) *
               weight_density(d, w);
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}
