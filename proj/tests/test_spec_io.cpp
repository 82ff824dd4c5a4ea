#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "kiteforge/io.hpp"
#include "kiteforge/spec.hpp"

namespace kf = kiteforge;

namespace {

kf::Vec v(std::initializer_list<long> xs) {
  kf::Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(kf::parse_rational("3/6"), kf::Rational(1, 2));
  EXPECT_EQ(kf::parse_rational(" -4 "), kf::Rational(-4));
  EXPECT_EQ(kf::parse_rational("+2/4"), kf::Rational(1, 2));
  EXPECT_EQ(kf::format_rational(kf::make_rational(-6, 4)), "-3/2");
  EXPECT_THROW(kf::parse_rational("1/0"), kf::InputError);
  EXPECT_THROW(kf::parse_rational("1//2"), kf::ParseError);
  EXPECT_THROW(kf::parse_rational(""), kf::ParseError);
  try {
    kf::parse_rational("12a");
    FAIL();
  } catch (const kf::ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
}

TEST(Vec, ParseAndFormatRoundTrip) {
  const kf::Vec x{kf::Rational(-1, 2), kf::Rational(3), kf::Rational(0)};
  EXPECT_EQ(kf::format_vec(x), "[-1/2, 3, 0]");
  EXPECT_EQ(kf::parse_vec(kf::format_vec(x)), x);
  EXPECT_TRUE(kf::parse_vec("[ ]").empty());
  EXPECT_THROW(kf::parse_vec("1, 2"), kf::ParseError);
  EXPECT_THROW(kf::parse_vec("[1, x]"), kf::ParseError);
  EXPECT_THROW(kf::parse_vec("[1] 2"), kf::ParseError);
}

TEST(KiteElem, ParseAndFormatRoundTrip) {
  const kf::KiteElem x{kf::Zone::Top, v({-1, -2})};
  EXPECT_EQ(kf::format_kite_elem(x), "Top[-1, -2]");
  EXPECT_EQ(kf::parse_kite_elem("Top[-1, -2]"), x);
  EXPECT_EQ(kf::parse_kite_elem("Bottom[3/2]"), (kf::KiteElem{kf::Zone::Bottom, {kf::Rational(3, 2)}}));
  EXPECT_THROW(kf::parse_kite_elem("Middle[0]"), kf::ParseError);
}

TEST(AutSpec, Parsing) {
  EXPECT_EQ(kf::parse_aut_spec("perm:(0 1)"), kf::LAut::permutation({1, 0}));
  EXPECT_EQ(kf::parse_aut_spec("perm:(0 1 2)"), kf::LAut::cyclic_shift(3));
  EXPECT_EQ(kf::parse_aut_spec("perm:(0);scale:2"), kf::LAut::scaling({kf::Rational(2)}));
  EXPECT_EQ(kf::parse_aut_spec("scale:1/3,3"), kf::LAut({0, 1}, {kf::Rational(1, 3), kf::Rational(3)}));
  EXPECT_TRUE(kf::parse_aut_spec("perm:(0)", 4).is_identity());
  EXPECT_EQ(kf::parse_aut_spec("perm:(0 1)", 3).apply(v({1, 2, 3})), v({2, 1, 3}));
  EXPECT_THROW(kf::parse_aut_spec("perm:(0 1)(1 2)"), kf::InputError);
  EXPECT_THROW(kf::parse_aut_spec("perm:(0 1 2)", 2), kf::InputError);
  EXPECT_THROW(kf::parse_aut_spec("rotate:(0 1)"), kf::ParseError);
  EXPECT_THROW(kf::parse_aut_spec("perm:(0 1;scale:1,1"), kf::ParseError);
  EXPECT_THROW(kf::parse_aut_spec("scale:0"), kf::InputError);
  EXPECT_THROW(kf::parse_aut_spec("perm:(0 1);scale:1"), kf::InputError);
}

TEST(AutSpec, RoundTripThroughToSpec) {
  for (const auto& a : {kf::LAut::identity(2), kf::LAut::cyclic_shift(4), kf::LAut::scaling({kf::Rational(2)}),
                        kf::LAut({1, 2, 0}, {kf::Rational(2), kf::Rational(1, 3), kf::Rational(5)})})
    EXPECT_EQ(kf::parse_aut_spec(a.to_spec()), a) << a.to_spec();
}

TEST(BCycleSpec, Parsing) {
  EXPECT_EQ(kf::parse_bcycle_spec("zn:6").cycle_lengths(), std::vector<std::size_t>{6});
  EXPECT_EQ(kf::parse_bcycle_spec("cycles:2,3").size(), 5U);
  EXPECT_THROW(kf::parse_bcycle_spec("zn:0"), kf::InputError);
  EXPECT_THROW(kf::parse_bcycle_spec("ring:4"), kf::ParseError);
  EXPECT_THROW(kf::parse_bcycle_spec("zn:x"), kf::InputError);
}

TEST(GroupSpec, Parsing) {
  EXPECT_EQ(kf::parse_group_spec("Q").name(), "Q^1");
  EXPECT_EQ(kf::parse_group_spec("Z^3").name(), "Z^3");
  EXPECT_THROW(kf::parse_group_spec("R^2"), kf::ParseError);
  EXPECT_THROW(kf::parse_group_spec("Q^0"), kf::InputError);
}

TEST(KiteSpec, GroupForm) {
  const auto s = kf::parse_kite_spec("kite{group:Q^2; aut:perm:(0 1)}");
  EXPECT_EQ(s.algebra.arity(), 2U);
  EXPECT_EQ(s.algebra.aut(), kf::LAut::permutation({1, 0}));
  EXPECT_FALSE(s.bcycle.has_value());
  EXPECT_TRUE(kf::parse_kite_spec("kite{group:Q^3}").algebra.aut().is_identity());
  EXPECT_EQ(kf::parse_kite_spec("kite{group:Q^1; aut:perm:(0);scale:2}").algebra.aut(), kf::LAut::scaling({kf::Rational(2)}));
}

TEST(KiteSpec, BCycleForm) {
  const auto s = kf::parse_kite_spec("kite{bcycle:zn:6; base:Z}");
  ASSERT_TRUE(s.bcycle.has_value());
  EXPECT_EQ(s.algebra.arity(), 6U);
  EXPECT_TRUE(s.algebra.group().integral());
  const auto bare = kf::parse_kite_spec("cycles:2,3");
  EXPECT_EQ(bare.algebra.arity(), 5U);
  EXPECT_TRUE(bare.algebra.group().integral());
  EXPECT_EQ(kf::parse_kite_spec("kite{bcycle:cycles:2,3; base:Q^2}").algebra.arity(), 10U);
}

TEST(KiteSpec, Errors) {
  EXPECT_THROW(kf::parse_kite_spec("kite{bcycle:zn:2}"), kf::ParseError);
  EXPECT_THROW(kf::parse_kite_spec("kite{group:Q^2; perm:(0 1)}"), kf::ParseError);
  EXPECT_THROW(kf::parse_kite_spec("kite{colour:red}"), kf::ParseError);
  EXPECT_THROW(kf::parse_kite_spec("kite(group:Q)"), kf::ParseError);
  EXPECT_THROW(kf::parse_kite_spec("kite{group:Q^1; aut:perm:(0 1)}"), kf::InputError);
}

TEST(KiteSpec, DescribeRoundTrip) {
  for (const char* text : {"kite{group:Q^2; aut:perm:(0 1)}", "kite{group:Z^3; aut:perm:(0 1 2)}",
                           "kite{group:Q^1; aut:perm:(0);scale:2}", "kite{bcycle:cycles:2,3; base:Z}"}) {
    const auto a = kf::parse_kite_spec(text).algebra;
    const auto b = kf::parse_kite_spec(a.describe()).algebra;
    EXPECT_EQ(a.aut(), b.aut()) << text;
    EXPECT_EQ(a.group().name(), b.group().name()) << text;
  }
}

TEST(SpecList, Splitting) {
  EXPECT_EQ(kf::split_spec_list("zn:2,zn:3"), (std::vector<std::string>{"zn:2", "zn:3"}));
  EXPECT_EQ(kf::split_spec_list("cycles:2,3,zn:4"), (std::vector<std::string>{"cycles:2,3", "zn:4"}));
  EXPECT_EQ(kf::split_spec_list("kite{group:Q^2; aut:scale:1,2},zn:1"),
            (std::vector<std::string>{"kite{group:Q^2; aut:scale:1,2}", "zn:1"}));
  EXPECT_THROW(kf::split_spec_list("zn:2,,zn:3"), kf::ParseError);
}

TEST(AlgebraJson, ReadBundledAlgebras) {
  const auto luk = kf::read_algebra(KITEFORGE_DATA_DIR "/luk3.json");
  EXPECT_EQ(luk.size(), 3);
  EXPECT_EQ(luk.name(1), "half");
  EXPECT_EQ(luk.find("half"), 1);
  EXPECT_EQ(luk.find("2"), 2);
  EXPECT_FALSE(luk.find("third").has_value());
  EXPECT_EQ(luk.neg(1), 1);
  EXPECT_EQ(kf::read_algebra(KITEFORGE_DATA_DIR "/boolean2.json").size(), 2);
  EXPECT_EQ(kf::read_algebra(KITEFORGE_DATA_DIR "/godel3.json").size(), 3);
}

TEST(AlgebraJson, RoundTrip) {
  const auto a = kf::read_algebra(KITEFORGE_DATA_DIR "/godel3.json");
  const auto j = kf::algebra_to_json(a);
  const auto b = kf::FinFLw::validate(kf::tables_from_json(j));
  EXPECT_EQ(kf::algebra_to_json(b), j);
  EXPECT_EQ(j.at("names"), (kf::Json{"0", "a", "1"}));
}

TEST(AlgebraJson, DefaultNames) {
  kf::Json j = kf::algebra_to_json(kf::read_algebra(KITEFORGE_DATA_DIR "/boolean2.json"));
  j.erase("names");
  const auto a = kf::FinFLw::validate(kf::tables_from_json(j));
  EXPECT_EQ(a.name(0), "0");
  EXPECT_EQ(a.name(1), "1");
}

TEST(AlgebraJson, Errors) {
  EXPECT_THROW(kf::read_json_file(KITEFORGE_DATA_DIR "/does_not_exist.json"), kf::InputError);
  EXPECT_THROW(kf::tables_from_json(kf::Json{{"size", 2}}), kf::InputError);
  kf::Json j = kf::algebra_to_json(kf::read_algebra(KITEFORGE_DATA_DIR "/luk3.json"));
  j["mul"][1][1] = 2;
  EXPECT_THROW(kf::FinFLw::validate(kf::tables_from_json(j)), kf::InvalidAlgebra);

  const auto path = std::filesystem::temp_directory_path() / "kiteforge_bad.json";
  kf::write_text_file(path.string(), "{\"size\": 2,");
  EXPECT_THROW(kf::read_json_file(path.string()), kf::InputError);
  std::filesystem::remove(path);
}
