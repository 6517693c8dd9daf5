#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bergman/quadrature.hpp"
#include "bergman/toeplitz.hpp"

using namespace bergman;

namespace {

double sum_moment(const QuadratureRule& r, int k) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
  return s;
}

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

}  // namespace

TEST(Quadrature, GaussJacobiFrozenNodes) {
  // scipy.special.roots_jacobi(5, 1.5, 0.5) mapped to [0, 1].
  const double nodes[] = {0.05795586733992525, 0.21854703411189785, 0.4449862887394776, 0.6854068154746431,
                          0.8847706610007227};
  const double weights[] = {0.0250156570796587, 0.0649954023346832, 0.06696123710381863, 0.03340596466593985,
                            0.005971279665261673};
  QuadratureRule r = gauss_jacobi_01(5, 1.5, 0.5);
  std::vector<std::size_t> order(5);
  for (std::size_t i = 0; i < 5; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return r.nodes[a] < r.nodes[b]; });
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(r.nodes[order[i]], nodes[i], 1e-14);
    EXPECT_NEAR(r.weights[order[i]], weights[i], 1e-15);
  }
}

TEST(Quadrature, GaussJacobiExactness) {
  for (double a : {0.0, 1.5, -0.5, 7.0}) {
    for (double b : {0.0, 0.5, 3.0}) {
      const QuadratureRule r = gauss_jacobi_01(12, a, b);
      for (int k = 0; k <= 23; ++k) {
        const double exact = beta_fn(b + k + 1.0, a + 1.0);
        EXPECT_NEAR(sum_moment(r, k), exact, 1e-13 * exact) << a << " " << b << " " << k;
      }
    }
  }
}

TEST(Quadrature, GaussLaguerreExactness) {
  for (double alpha : {0.0, 0.5, 2.0}) {
    const QuadratureRule r = gauss_laguerre(15, alpha);
    for (int k = 0; k <= 20; ++k) {
      const double exact = std::tgamma(alpha + k + 1.0);
      EXPECT_NEAR(sum_moment(r, k), exact, 1e-11 * exact);
    }
  }
}

TEST(Quadrature, GaussHermiteExactness) {
  const QuadratureRule r = gauss_hermite(10);
  for (int k = 0; k < 10; ++k) {
    EXPECT_NEAR(sum_moment(r, 2 * k), std::tgamma(k + 0.5), 1e-12 * std::tgamma(k + 0.5));
    EXPECT_NEAR(sum_moment(r, 2 * k + 1), 0.0, 1e-12 * std::tgamma(k + 1.5));
  }
}

TEST(Quadrature, OrderValidation) {
  EXPECT_THROW(gauss_jacobi_01(0, 0.0), std::invalid_argument);
  EXPECT_THROW(gauss_jacobi_01(4, -1.0), std::invalid_argument);
  EXPECT_THROW(gauss_laguerre(4, -2.0), std::invalid_argument);
  EXPECT_THROW(exp_sinh_rule(0.0), std::invalid_argument);
  EXPECT_THROW(orthant_rule({AxisWeight::algebraic(8, 1.0)}), std::invalid_argument);
  EXPECT_THROW(dirichlet_orthant_rule(3, 3.0), std::invalid_argument);
}

TEST(Quadrature, ExpSinhHalfLine) {
  const QuadratureRule r = exp_sinh_rule(0.05);
  double e = 0.0, c = 0.0, l = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = r.nodes[i];
    e += r.weights[i] * std::exp(-x);
    c += r.weights[i] / (1.0 + x * x);
    l += r.weights[i] * std::exp(-x) * std::log(x);
  }
  EXPECT_NEAR(e, 1.0, 1e-12);
  EXPECT_NEAR(c, M_PI / 2, 1e-10);
  EXPECT_NEAR(l, -0.57721566490153286, 1e-11);
}

TEST(Quadrature, OrthantRuleAxes) {
  const QuadratureRule r = orthant_rule({AxisWeight::laguerre(10, 1.0, 2.0), AxisWeight::algebraic(20, 3.0),
                                         AxisWeight::hermite(8)});
  EXPECT_EQ(r.dim, 3);
  EXPECT_EQ(r.size(), 10u * 20u * 8u);
  // int u e^{-2u} * (1+v)^{-3} * e^{-w^2} w^2 = Gamma(2)/4 * 1/2 * sqrt(pi)/2
  const double got = r.integrate([](const double* x) { return x[2] * x[2]; });
  EXPECT_NEAR(got, 0.25 * 0.5 * std::sqrt(M_PI) / 2.0, 1e-13);
}

TEST(Quadrature, DirichletOrthant) {
  // Homogeneous functions of degree 0 only see the simplex factor, which the
  // rule integrates exactly: int (1+|u|)^{-s} u^p / |u|^|p| du
  //   = B(n, s - n) p! Gamma(n) / Gamma(n + |p|).
  const QuadratureRule r = dirichlet_orthant_rule(3, 9.5, 20, 12);
  const double hom = r.integrate([](const double* u) {
    const double t = u[0] + u[1] + u[2];
    return u[0] * u[1] * u[1] / (t * t * t);
  });
  const double beta = std::tgamma(3.0) * std::tgamma(6.5) / std::tgamma(9.5);
  EXPECT_NEAR(hom, beta * 2.0 / 120.0, 1e-15);
  EXPECT_NEAR(r.integrate([](const double*) { return 1.0; }), std::tgamma(6.5) / std::tgamma(9.5), 1e-15);
  // Powers of |u| are not polynomial in the radial variable; the error in
  // p! Gamma(s - n - |p|) / Gamma(s) decays algebraically.
  const auto moment = [](const double* u) { return u[0] * u[1] * u[1]; };
  const double exact = 2.0 * std::tgamma(9.5 - 3 - 3) / std::tgamma(9.5);
  const double coarse = std::abs(dirichlet_orthant_rule(3, 9.5, 20, 12).integrate(moment) - exact);
  const double fine = std::abs(dirichlet_orthant_rule(3, 9.5, 80, 12).integrate(moment) - exact);
  EXPECT_LT(fine, 0.05 * coarse);
  EXPECT_LT(fine, 1e-6 * exact);
}

TEST(Quadrature, BallRuleIsAProbabilityMeasure) {
  for (int n : {1, 2, 3}) {
    const BallRule r = ball_full_rule(n, 1.5, 10, 8);
    double s = 0.0;
    for (double w : r.radial_weights) s += w;
    EXPECT_NEAR(s, 1.0, 1e-14);
    EXPECT_NE(r.description().find("radial=10"), std::string::npos);
  }
  EXPECT_THROW(ball_full_rule(2, -1.0, 10, 8), std::invalid_argument);
}

TEST(Quadrature, BallRuleMonomialNorms) {
  for (double lambda : {0.0, 1.5}) {
    const BallRule r = ball_full_rule(2, lambda, 12, 8);
    for (const MultiIndex& p : enumerate_basis(2, 6)) {
      const double got = r.integrate([&](const CVector& z) { return std::norm(std::pow(z[0], p[0]) * std::pow(z[1], p[1])); });
      EXPECT_NEAR(got, monomial_norm_sq(2, lambda, p), 1e-14);
    }
  }
}

TEST(Quadrature, BallRuleFlattenMatchesIntegrate) {
  const BallRule r = ball_full_rule(2, 0.5, 6, 6);
  const QuadratureRule flat = r.flatten();
  EXPECT_EQ(flat.dim, 4);
  const auto f = [](const CVector& z) { return std::exp(z[0].real()) * (1.0 + std::norm(z[1])); };
  const double a = r.integrate(f);
  const double b = flat.integrate([&](const double* x) {
    CVector z(2);
    z << cplx(x[0], x[1]), cplx(x[2], x[3]);
    return f(z);
  });
  EXPECT_NEAR(a, b, 1e-14);
}

TEST(Quadrature, SampleBallMatchesMoments) {
  const double lambda = 1.5;
  const auto est = monte_carlo(
      [&](std::mt19937_64& rng) {
        const CVector z = sample_ball(2, lambda, rng);
        return std::norm(z[0]);
      },
      200000, 99);
  const double exact = monomial_norm_sq(2, lambda, {1, 0});
  EXPECT_LT(std::abs(est.value - exact), 5.0 * est.standard_error);
  EXPECT_EQ(est.samples, 200000);
}

TEST(Quadrature, MonteCarloIsSeeded) {
  const auto draw = [](std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0, 1)(rng); };
  EXPECT_EQ(monte_carlo(draw, 1000, 3).value, monte_carlo(draw, 1000, 3).value);
  EXPECT_NE(monte_carlo(draw, 1000, 3).value, monte_carlo(draw, 1000, 4).value);
}

TEST(Quadrature, CompensatedSum) {
  CompensatedSum<double> s;
  for (double x : {1.0, 1e100, 1.0, -1e100}) s.add(x);
  EXPECT_EQ(s.value(), 2.0);
  CompensatedSum<cplx> c;
  for (cplx x : {cplx(1.0, 1e100), cplx(1e100, 1.0), cplx(1.0, -1e100), cplx(-1e100, 1.0)}) c.add(x);
  EXPECT_EQ(c.value(), cplx(2.0, 2.0));
}
