#include <gtest/gtest.h>

#include "kiteforge/kite.hpp"
#include "kiteforge/lgrp.hpp"
#include "kiteforge/sampling.hpp"

namespace kf = kiteforge;

namespace {

kf::Vec v(std::initializer_list<long> xs) {
  kf::Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

const kf::LAut kSwap = kf::LAut::permutation({1, 0});
const kf::LAut kScale2 = kf::LAut::scaling({kf::Rational(2)});

kf::Vec sample_vec(kf::Rng& rng, std::size_t k) { return kf::KiteSampler{}.vector(rng, kf::VecGroup::rationals(k)); }

}  // namespace

TEST(VecGroup, Membership) {
  EXPECT_TRUE(kf::VecGroup::integers(2).contains(v({1, -3})));
  EXPECT_FALSE(kf::VecGroup::integers(1).contains({kf::Rational(1, 2)}));
  EXPECT_TRUE(kf::VecGroup::rationals(1).contains({kf::Rational(1, 2)}));
  EXPECT_FALSE(kf::VecGroup::rationals(2).contains(v({1})));
  EXPECT_THROW(kf::VecGroup::rationals(0), kf::InputError);
}

TEST(VecGroup, LatticeTranslationIdentities) {
  kf::Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const kf::Vec x = sample_vec(rng, 3), y = sample_vec(rng, 3), z = sample_vec(rng, 3), w = sample_vec(rng, 3);
    // x(y∧z)w = xyw ∧ xzw
    ASSERT_EQ(kf::vec::add(kf::vec::add(x, kf::vec::meet(y, z)), w),
              kf::vec::meet(kf::vec::add(kf::vec::add(x, y), w), kf::vec::add(kf::vec::add(x, z), w)));
    // x = (x∨e)(x∧e)
    ASSERT_EQ(kf::vec::add(kf::vec::join_e(x), kf::vec::meet_e(x)), x);
  }
}

TEST(LAut, Apply) {
  EXPECT_EQ(kSwap.apply(v({3, 5})), v({5, 3}));
  EXPECT_EQ(kScale2.apply(v({3})), v({6}));
  EXPECT_THROW(kSwap.apply(v({1})), kf::InputError);
}

TEST(LAut, Validation) {
  EXPECT_THROW(kf::LAut({0, 0}, v({1, 1})), kf::InputError);
  EXPECT_THROW(kf::LAut({0, 1}, v({1, 0})), kf::InputError);
  EXPECT_THROW(kf::LAut({0}, v({1, 1})), kf::InputError);
}

TEST(LAut, Powers) {
  EXPECT_TRUE(kSwap.power(2).is_identity());
  EXPECT_TRUE(kSwap.power(0).is_identity());
  EXPECT_EQ(kScale2.power(-1).apply(v({4})), v({2}));
  EXPECT_EQ(kScale2.power(-3).apply(v({8})), v({1}));
  const kf::LAut mixed({1, 2, 0}, {kf::Rational(2), kf::Rational(1, 3), kf::Rational(5)});
  for (std::int64_t n = -5; n <= 5; ++n) {
    kf::LAut slow = kf::LAut::identity(3);
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) slow = slow.compose(n < 0 ? mixed.inverse() : mixed);
    EXPECT_EQ(mixed.power(n), slow) << n;
  }
  EXPECT_TRUE(mixed.compose(mixed.inverse()).is_identity());
}

TEST(LAut, ComposeIsFunctionComposition) {
  const kf::LAut a({1, 2, 0}, {kf::Rational(2), kf::Rational(1), kf::Rational(3)});
  const kf::LAut b({2, 0, 1}, {kf::Rational(1, 2), kf::Rational(7), kf::Rational(1)});
  const kf::Vec x = v({1, -2, 5});
  EXPECT_EQ(a.compose(b).apply(x), a.apply(b.apply(x)));
}

TEST(LAut, PreservesGroupAndLattice) {
  const kf::LAut a({2, 0, 1}, {kf::Rational(3), kf::Rational(1, 2), kf::Rational(2, 3)});
  kf::Rng rng(5);
  EXPECT_EQ(a.apply(kf::vec::zeros(3)), kf::vec::zeros(3));
  for (int i = 0; i < 10000; ++i) {
    const kf::Vec x = sample_vec(rng, 3), y = sample_vec(rng, 3);
    ASSERT_EQ(a.apply(kf::vec::meet(x, y)), kf::vec::meet(a.apply(x), a.apply(y)));
    ASSERT_EQ(a.apply(kf::vec::join(x, y)), kf::vec::join(a.apply(x), a.apply(y)));
    ASSERT_EQ(a.apply(kf::vec::add(x, y)), kf::vec::add(a.apply(x), a.apply(y)));
  }
}

TEST(LAut, SpecRoundTrip) {
  EXPECT_EQ(kSwap.to_spec(), "perm:(0 1);scale:1,1");
  EXPECT_EQ(kf::LAut::cyclic_shift(3).to_spec(), "perm:(0 1 2);scale:1,1,1");
  EXPECT_EQ(kScale2.to_spec(), "perm:(0);scale:2");
}

TEST(AutDimension, SpecimenValues) {
  EXPECT_EQ(kf::aut_dimension(kf::LAut::identity(3)), 1U);
  EXPECT_EQ(kf::aut_dimension(kSwap), 2U);
  EXPECT_EQ(kf::aut_dimension(kScale2), 0U);
  EXPECT_EQ(kf::aut_dimension(kf::LAut::permutation({1, 0, 3, 4, 2})), 6U);
  // Scales that cancel around a cycle still give a finite dimension.
  EXPECT_EQ(kf::aut_dimension(kf::LAut({1, 0}, {kf::Rational(2), kf::Rational(1, 2)})), 2U);
}

TEST(AutDimension, Certified) {
  for (const auto& a : {kf::LAut::identity(3), kSwap, kScale2, kf::LAut::permutation({1, 0, 3, 4, 2}),
                        kf::LAut({1, 0}, {kf::Rational(2), kf::Rational(1, 2)}), kf::LAut::cyclic_shift(7)})
    EXPECT_TRUE(kf::certify_dimension(a)) << a.to_spec();
  const auto analysis = kf::analyse_dimension(kScale2);
  ASSERT_TRUE(analysis.unbalanced_cycle.has_value());
  EXPECT_EQ(analysis.unbalanced_cycle->second, kf::Rational(2));
}

TEST(Semidirect, SpecimenProducts) {
  const kf::Semidirect id(kf::LAut::identity(2));
  EXPECT_EQ(id.mul({v({1, 2}), 1}, {v({3, 4}), 1}), (kf::SemidirectElem{v({4, 6}), 2}));
  const kf::Semidirect sw(kSwap);
  EXPECT_EQ(sw.mul({v({1, 2}), 1}, {v({3, 4}), 1}), (kf::SemidirectElem{v({5, 5}), 2}));
  EXPECT_EQ(sw.inv({v({1, 2}), 0}), (kf::SemidirectElem{v({-1, -2}), 0}));
}

TEST(Semidirect, GroupLawsAndOrderInvariance) {
  const kf::Semidirect g(kf::LAut({1, 2, 0}, {kf::Rational(2), kf::Rational(1, 3), kf::Rational(5)}));
  kf::Rng rng(17);
  auto elem = [&]() { return kf::SemidirectElem{sample_vec(rng, 3), kf::uniform_int(rng, -6, 6)}; };
  for (int i = 0; i < 10000; ++i) {
    const auto a = elem(), b = elem(), c = elem();
    ASSERT_EQ(g.mul(a, g.mul(b, c)), g.mul(g.mul(a, b), c));
    ASSERT_EQ(g.mul(a, g.inv(a)), g.identity());
    ASSERT_EQ(g.mul(g.inv(a), a), g.identity());
    ASSERT_EQ(g.mul(a, g.identity()), a);
    if (g.leq(a, b)) {
      ASSERT_TRUE(g.leq(g.mul(c, a), g.mul(c, b)));
      ASSERT_TRUE(g.leq(g.mul(a, c), g.mul(b, c)));
    }
    ASSERT_EQ(g.leq(a, b), g.meet(a, b) == a);
    ASSERT_EQ(g.leq(a, b), g.join(a, b) == b);
  }
}

TEST(Semidirect, AntilexicographicOrder) {
  const kf::Semidirect g(kf::LAut::identity(1));
  EXPECT_TRUE(g.leq({v({100}), -1}, {v({-100}), 0}));
  EXPECT_TRUE(g.leq({v({1}), 0}, {v({2}), 0}));
  EXPECT_FALSE(g.leq({v({3}), 0}, {v({2}), 0}));
}

TEST(GammaAlgebra, SpecimenValues) {
  const kf::GammaAlgebra g(kf::LAut::identity(1));
  EXPECT_EQ(g.mul(g.zero(), g.zero()), g.zero());
  EXPECT_EQ(g.mul({v({-1}), 0}, {v({-2}), 0}), (kf::SemidirectElem{v({-3}), 0}));
  EXPECT_EQ(g.one(), (kf::SemidirectElem{v({0}), 0}));
  EXPECT_EQ(g.zero(), (kf::SemidirectElem{v({0}), -1}));
}

TEST(GammaAlgebra, RejectsOutsideInterval) {
  const kf::GammaAlgebra g(kf::LAut::identity(1));
  EXPECT_FALSE(g.contains({v({1}), 0}));
  EXPECT_FALSE(g.contains({v({-1}), -1}));
  EXPECT_FALSE(g.contains({v({0}), 1}));
  EXPECT_THROW(g.mul({v({1}), 0}, g.one()), kf::InputError);
}
