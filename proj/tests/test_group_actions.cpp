#include <gtest/gtest.h>

#include <random>

#include "bergman/moment.hpp"

using namespace bergman;

namespace {

std::vector<MasgAction> all_actions(int n) {
  return {make_action(MasgKind::QuasiElliptic, n), make_action(MasgKind::QuasiParabolic, n),
          make_action(MasgKind::QuasiHyperbolic, n), make_action(MasgKind::Nilpotent, n),
          make_action(MasgKind::QuasiNilpotent, n, 1)};
}

}  // namespace

TEST(GroupActions, NamesRoundTrip) {
  for (const MasgAction& g : all_actions(3)) EXPECT_EQ(parse_masg_kind(to_string(g.kind)), g.kind);
  EXPECT_THROW(parse_masg_kind("loxodromic"), std::invalid_argument);
  EXPECT_EQ(make_action(MasgKind::QuasiNilpotent, 4, 2).label(), "N(4,2)");
  EXPECT_EQ(make_action(MasgKind::QuasiHyperbolic, 3).label(), "H(3)");
}

TEST(GroupActions, QuasiNilpotentRankRange) {
  EXPECT_THROW(make_action(MasgKind::QuasiNilpotent, 3, 0), std::invalid_argument);
  EXPECT_THROW(make_action(MasgKind::QuasiNilpotent, 3, 2), std::invalid_argument);
  EXPECT_NO_THROW(make_action(MasgKind::QuasiNilpotent, 4, 2));
  EXPECT_THROW(make_action(MasgKind::Nilpotent, 9), std::invalid_argument);
}

TEST(GroupActions, TorusCounts) {
  EXPECT_EQ(make_action(MasgKind::QuasiElliptic, 3).torus_count(), 3);
  EXPECT_EQ(make_action(MasgKind::QuasiParabolic, 3).torus_count(), 2);
  EXPECT_EQ(make_action(MasgKind::Nilpotent, 3).torus_count(), 0);
  EXPECT_EQ(make_action(MasgKind::QuasiNilpotent, 4, 2).torus_count(), 2);
}

TEST(GroupActions, ActionIsAHomomorphism) {
  std::mt19937_64 rng(11);
  for (const MasgAction& g : all_actions(3)) {
    for (int t = 0; t < 100; ++t) {
      const Point z = random_point(g, rng);
      const GroupParam p = random_param(g, rng), q = random_param(g, rng);
      const Point lhs = act(g, p, act(g, q, z));
      const Point rhs = act(g, compose(p, q), z);
      EXPECT_LT((lhs.z() - rhs.z()).norm(), 1e-11) << g.label();
    }
  }
}

TEST(GroupActions, IdentityParameterFixesPoints) {
  std::mt19937_64 rng(12);
  for (const MasgAction& g : all_actions(3)) {
    const Point z = random_point(g, rng);
    EXPECT_LT((act(g, GroupParam::Zero(3), z).z() - z.z()).norm(), 1e-15);
  }
}

TEST(GroupActions, ActionPreservesTheDomain) {
  std::mt19937_64 rng(13);
  for (const MasgAction& g : all_actions(4)) {
    for (int t = 0; t < 100; ++t) {
      EXPECT_NO_THROW(act(g, random_param(g, rng, 3.0), random_point(g, rng))) << g.label();
    }
  }
}

TEST(GroupActions, FundamentalFieldIsTheFlowDerivative) {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> gauss;
  const double h = 1e-5;
  for (const MasgAction& g : all_actions(3)) {
    for (int t = 0; t < 20; ++t) {
      const Point z = random_point(g, rng);
      RVector X(3);
      for (int j = 0; j < 3; ++j) X[j] = gauss(rng);
      const CVector fd =
          (act(g, exp_group(g, X, h), z).z() - act(g, exp_group(g, X, -h), z).z()) / (2.0 * h);
      EXPECT_LT((fd - fundamental_field(g, X, z)).norm(), 1e-7 * (1.0 + fd.norm())) << g.label();
    }
  }
}

TEST(GroupActions, RejectsPointsOfTheOtherDomain) {
  CVector z(2);
  z << 0.0, cplx(0.0, 1.0);
  const Point s = Point::siegel(z);
  EXPECT_THROW(act(make_action(MasgKind::QuasiElliptic, 2), GroupParam::Zero(2), s), DomainError);
  EXPECT_THROW(act(make_action(MasgKind::Nilpotent, 2), GroupParam::Zero(3), s), DimensionError);
}

TEST(GroupActions, OrbitTransportRecoversTheParameter) {
  std::mt19937_64 rng(15);
  for (const MasgAction& g : all_actions(3)) {
    for (int t = 0; t < 50; ++t) {
      const Point w = random_point(g, rng);
      const Point z = act(g, random_param(g, rng), w);
      const OrbitTransport tr = orbit_transport(g, w, z);
      ASSERT_TRUE(tr.same_fiber) << g.label();
      EXPECT_LT((act(g, tr.param, w).z() - z.z()).norm(), 1e-8) << g.label();
    }
  }
}

TEST(GroupActions, OrbitTransportDetectsDifferentFibers) {
  std::mt19937_64 rng(16);
  for (const MasgAction& g : all_actions(3)) {
    const Point w = random_point(g, rng);
    const Point z = random_point(g, rng);
    const OrbitTransport tr = orbit_transport(g, w, z);
    EXPECT_FALSE(tr.same_fiber) << g.label();
    EXPECT_GT(tr.fiber_mismatch, 1e-6) << g.label();
  }
}
