#include <gtest/gtest.h>

#include "kiteforge/kite_checks.hpp"

namespace kf = kiteforge;

namespace {

kf::Vec v(std::initializer_list<long> xs) {
  kf::Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

kf::KiteAlgebra kite(kf::VecGroup g, kf::LAut a) { return kf::KiteAlgebra(g, std::move(a)); }

const kf::VecGroup kZ = kf::VecGroup::integers(1);
const kf::VecGroup kQ = kf::VecGroup::rationals(1);

}  // namespace

TEST(LiftLGroupHom, CoordinateProjection) {
  const auto a1 = kite(kf::VecGroup::rationals(2), kf::LAut::identity(2));
  const auto a2 = kite(kQ, kf::LAut::identity(1));
  const auto h = kf::lift_lgroup_hom(kf::LinearMap::selection(2, {0}), a1, a2);
  EXPECT_EQ(h(a1.top(v({-1, -5}))), a2.top(v({-1})));
  EXPECT_EQ(h(a1.bottom(v({2, 7}))), a2.bottom(v({2})));
  EXPECT_TRUE(kf::check_kite_hom("hom", h, 2000, 1).pass);
}

TEST(LiftLGroupHom, IdentityIsIdentity) {
  const auto a = kite(kf::VecGroup::rationals(2), kf::LAut::permutation({1, 0}));
  const auto h = kf::lift_lgroup_hom(kf::LinearMap::identity(2), a, a);
  const auto x = a.bottom(v({3, 4}));
  EXPECT_EQ(h(x), x);
  EXPECT_TRUE(kf::check_kite_hom("hom", h, 2000, 1, true).pass);
}

TEST(LiftLGroupHom, CommutationFailure) {
  const auto a1 = kite(kf::VecGroup::rationals(2), kf::LAut::permutation({1, 0}));
  const auto a2 = kite(kQ, kf::LAut::identity(1));
  try {
    kf::lift_lgroup_hom(kf::LinearMap::selection(2, {0}), a1, a2);
    FAIL() << "expected a commutation error";
  } catch (const kf::CommutationError& e) {
    EXPECT_TRUE(e.witness().contains("basis"));
  }
}

TEST(LiftLGroupHom, RejectsNonLatticeMaps) {
  const auto a = kite(kQ, kf::LAut::identity(1));
  EXPECT_THROW(kf::lift_lgroup_hom(kf::LinearMap(1, 1, {kf::Rational(-1)}), a, a), kf::InputError);
  const auto z = kite(kZ, kf::LAut::identity(1));
  EXPECT_THROW(kf::lift_lgroup_hom(kf::LinearMap(1, 1, {kf::Rational(1, 2)}), z, z), kf::InputError);
}

TEST(LiftFilterHom, ScaleByThree) {
  const auto a = kite(kQ, kf::LAut::identity(1));
  const auto h = kf::lift_filter_hom([](const kf::Vec& x) { return kf::Vec{x[0] * 3}; }, a, a, 1000, 2);
  EXPECT_EQ(h(a.bottom(v({2}))), a.bottom(v({6})));
  EXPECT_EQ(h(a.top(v({-1}))), a.top(v({-3})));
  EXPECT_TRUE(kf::check_kite_hom("filter-hom", h, 2000, 2, true).pass);
}

TEST(LiftFilterHom, IdentityLiftsToIdentity) {
  const auto a = kite(kf::VecGroup::rationals(3), kf::LAut::cyclic_shift(3));
  const auto h = kf::lift_filter_hom([](const kf::Vec& x) { return x; }, a, a, 1000, 3);
  kf::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto x = kf::KiteSampler{}.element(rng, a);
    ASSERT_EQ(h(x), x);
  }
}

TEST(LiftFilterHom, TwistedScalingAgreesWithLGroupLift) {
  const auto a = kite(kf::VecGroup::rationals(2), kf::LAut::permutation({1, 0}));
  const auto f = kf::LinearMap::scalar(2, kf::Rational(5, 2));
  const auto hf = kf::lift_filter_hom([&](const kf::Vec& x) { return f.apply(x); }, a, a, 1000, 4);
  const auto hl = kf::lift_lgroup_hom(f, a, a);
  kf::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto x = kf::KiteSampler{}.element(rng, a);
    ASSERT_EQ(hf(x), hl(x));
  }
}

TEST(LiftFilterHom, CollapsingCoordinatesFailsCommutation) {
  const auto a = kite(kf::VecGroup::rationals(2), kf::LAut::permutation({1, 0}));
  auto collapse = [](const kf::Vec& x) { return kf::Vec{x[0], x[0]}; };
  EXPECT_THROW(kf::lift_filter_hom(collapse, a, a, 1000, 5), kf::CommutationError);
}

TEST(KiteContravariant, UnrollEmbeddingIsInjective) {
  const auto b = kf::bc_from_cycle_type({2, 3});
  const auto u = kf::unroll_hom(6, b);
  const auto h = kf::kite_contravariant(u.map, u.domain, b, kZ);
  EXPECT_EQ(h.source.arity(), 5U);
  EXPECT_EQ(h.target.arity(), 30U);
  EXPECT_TRUE(kf::check_kite_hom("embed", h, 1000, 7, true).pass);
  EXPECT_TRUE(kf::embed_check(b, kZ, 1000, 7).pass);
}

TEST(KiteContravariant, IdentityMap) {
  const auto b = kf::z_n(3);
  const auto h = kf::kite_contravariant({0, 1, 2}, b, b, kQ);
  const auto x = h.source.top(v({-1, -2, -3}));
  EXPECT_EQ(h(x), x);
}

TEST(KiteContravariant, ProjectionInducesHomomorphism) {
  const auto z2 = kf::z_n(2), z3 = kf::z_n(3);
  const auto p = kf::bc_product(z2, z3);
  const auto h = kf::kite_contravariant(kf::bc_projection(z2, z3, 0), p, z2, kZ);
  EXPECT_EQ(h.source.arity(), 2U);
  EXPECT_EQ(h.target.arity(), 6U);
  EXPECT_TRUE(kf::check_kite_hom("projection", h, 1000, 8, true).pass);
}

TEST(KiteContravariant, RejectsNonHomomorphism) {
  const auto b = kf::bc_from_cycle_type({2, 3});
  EXPECT_THROW(kf::kite_contravariant({0, 1, 0, 0, 0}, b, kf::z_n(2), kZ), kf::CommutationError);
}

TEST(PerfectPower, ReshuffleIsIsomorphism) {
  EXPECT_TRUE(kf::powerlemma_check(kf::z_n(2), 2, kZ, 1000, 9).pass);
  EXPECT_TRUE(kf::powerlemma_check(kf::bc_from_cycle_type({2, 3}), 3, kQ, 500, 9).pass);
  EXPECT_TRUE(kf::powerlemma_check(kf::z_n(3), 2, kf::VecGroup::rationals(2), 500, 9).pass);
}

TEST(PerfectPower, SingleCopyIsTheFactor) {
  const kf::PProdKite power(kf::kite_over_bcycle(kf::z_n(2), kZ), 1);
  const auto x = kf::make_pprod_elem({power.factor().top(v({-1, -2}))});
  const auto y = kf::make_pprod_elem({power.factor().bottom(v({3, 0}))});
  EXPECT_EQ(power.coordinate(power.mul(x, y), 0), power.factor().mul(power.coordinate(x, 0), power.coordinate(y, 0)));
  EXPECT_TRUE(kf::powerlemma_check(kf::z_n(2), 1, kZ, 500, 10).pass);
}

TEST(PerfectPower, MisalignedZonesRejected) {
  const auto k = kf::kite_over_bcycle(kf::z_n(2), kZ);
  EXPECT_THROW(kf::make_pprod_elem({k.top(v({-1, 0})), k.bottom(v({1, 0}))}), kf::InputError);
}

TEST(Triangle, Specimens) {
  const auto a = kf::kite_over_bcycle(kf::z_n(2), kZ);
  const auto x = a.top(v({-1, -2}));
  EXPECT_EQ(kf::eta_at_projection(a, x, 0, 1), v({-1}));
  EXPECT_EQ(kf::eta_at_projection(a, x, 1, 1), v({-2}));
  const auto y = a.bottom(v({3, 5}));
  EXPECT_EQ(kf::eta_at_projection(a, y, 0, 1), v({3}));
  EXPECT_EQ(kf::eta_at_projection(a, y, 1, 1), v({5}));
  EXPECT_EQ(kf::eta_at_projection(a, a.zero(), 0, 1), v({0}));
}

TEST(Triangle, HoldsForSmallBCycles) {
  for (const auto& b : {kf::z_n(1), kf::z_n(2), kf::bc_from_cycle_type({2, 3})})
    for (const auto& base : {kZ, kQ, kf::VecGroup::rationals(2)})
      EXPECT_TRUE(kf::triangle_identity_check(b, base, 1000, 11).pass) << b.size() << " " << base.name();
}
