#pragma once

// The kite K(L,λ) over a rational vector ℓ-group L and an automorphism λ.
//
// Elements live in one of two zones. Top holds a copy of the negative cone
// L⁻ and contains 1 = (Top, e); Bottom holds a copy of the positive cone L⁺
// and contains 0 = (Bottom, e). Every Bottom element lies below every Top
// element, and each zone is ordered pointwise. Group notation is additive.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "kiteforge/bcycle.hpp"
#include "kiteforge/error.hpp"
#include "kiteforge/lgrp.hpp"
#include "kiteforge/rational.hpp"
#include "kiteforge/sampling.hpp"

namespace kiteforge {

enum class Zone { Bottom, Top };

inline const char* zone_name(Zone z) { return z == Zone::Top ? "Top" : "Bottom"; }

struct KiteElem {
  Zone zone;
  Vec value;

  friend bool operator==(const KiteElem&, const KiteElem&) = default;
};

/// `Top[-1, -2]` or `Bottom[3]`
inline std::string format_kite_elem(const KiteElem& x) { return zone_name(x.zone) + format_vec(x.value); }

inline KiteElem parse_kite_elem(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  Zone zone;
  if (text.starts_with("Top")) {
    zone = Zone::Top;
    text.remove_prefix(3);
  } else if (text.starts_with("Bottom")) {
    zone = Zone::Bottom;
    text.remove_prefix(6);
  } else {
    throw ParseError("kite element must start with Top or Bottom", 0);
  }
  return {zone, parse_vec(text)};
}

class KiteAlgebra {
 public:
  using element_type = KiteElem;

  KiteAlgebra(VecGroup group, LAut aut) : group_(group), aut_(std::move(aut)), aut_inv_(aut_.inverse()) {
    if (aut_.arity() != group_.arity()) throw InputError("automorphism arity does not match the group");
    if (group_.integral())
      for (const auto& c : aut_.scales())
        if (c != 1) throw InputError("automorphisms of Z^k must have unit scales");
  }

  const VecGroup& group() const { return group_; }
  const LAut& aut() const { return aut_; }
  std::size_t arity() const { return group_.arity(); }

  std::string describe() const { return "kite{group:" + group_.name() + "; aut:" + aut_.to_spec() + "}"; }

  bool contains(const KiteElem& x) const {
    if (!group_.contains(x.value)) return false;
    return x.zone == Zone::Top ? vec::is_negative_cone(x.value) : vec::is_positive_cone(x.value);
  }

  KiteElem zero() const { return {Zone::Bottom, group_.identity()}; }
  KiteElem one() const { return {Zone::Top, group_.identity()}; }

  KiteElem top(Vec v) const { return checked({Zone::Top, std::move(v)}); }
  KiteElem bottom(Vec v) const { return checked({Zone::Bottom, std::move(v)}); }

  bool leq(const KiteElem& x, const KiteElem& y) const {
    check(x);
    check(y);
    if (x.zone != y.zone) return x.zone == Zone::Bottom;
    return vec::leq(x.value, y.value);
  }

  KiteElem meet(const KiteElem& x, const KiteElem& y) const {
    check(x);
    check(y);
    if (x.zone != y.zone) return x.zone == Zone::Bottom ? x : y;
    return {x.zone, vec::meet(x.value, y.value)};
  }

  KiteElem join(const KiteElem& x, const KiteElem& y) const {
    check(x);
    check(y);
    if (x.zone != y.zone) return x.zone == Zone::Top ? x : y;
    return {x.zone, vec::join(x.value, y.value)};
  }

  KiteElem mul(const KiteElem& x, const KiteElem& y) const {
    check(x);
    check(y);
    if (x.zone == Zone::Top && y.zone == Zone::Top) return {Zone::Top, vec::add(x.value, y.value)};
    if (x.zone == Zone::Top) return {Zone::Bottom, vec::join_e(vec::add(aut_.apply(x.value), y.value))};
    if (y.zone == Zone::Top) return {Zone::Bottom, vec::join_e(vec::add(x.value, y.value))};
    return zero();
  }

  /// x\y
  KiteElem ldiv(const KiteElem& x, const KiteElem& y) const {
    check(x);
    check(y);
    if (x.zone == y.zone) return {Zone::Top, vec::meet_e(vec::sub(y.value, x.value))};
    if (x.zone == Zone::Bottom) return one();
    return {Zone::Bottom, vec::join_e(vec::sub(y.value, aut_.apply(x.value)))};
  }

  /// y/x
  KiteElem rdiv(const KiteElem& y, const KiteElem& x) const {
    check(x);
    check(y);
    if (x.zone == Zone::Top && y.zone == Zone::Top) return {Zone::Top, vec::meet_e(vec::sub(y.value, x.value))};
    if (x.zone == Zone::Bottom && y.zone == Zone::Top) return one();
    if (x.zone == Zone::Top) return {Zone::Bottom, vec::join_e(vec::sub(y.value, x.value))};
    return {Zone::Top, vec::meet_e(aut_inv_.apply(vec::sub(y.value, x.value)))};
  }

  /// x⁻ by the closed formulas: (Bottom, -x) on Top, (Top, -λ⁻¹(x)) on Bottom.
  KiteElem negl(const KiteElem& x) const {
    check(x);
    if (x.zone == Zone::Top) return {Zone::Bottom, vec::neg(x.value)};
    return {Zone::Top, vec::neg(aut_inv_.apply(x.value))};
  }

  /// x^∼ by the closed formulas: (Bottom, -λ(x)) on Top, (Top, -x) on Bottom.
  KiteElem negr(const KiteElem& x) const {
    check(x);
    if (x.zone == Zone::Top) return {Zone::Bottom, vec::neg(aut_.apply(x.value))};
    return {Zone::Top, vec::neg(x.value)};
  }

  /// x^∼∼, which is λ applied inside either zone.
  KiteElem double_tilde(const KiteElem& x) const { return negr(negr(x)); }

  KiteElem oplus(const KiteElem& x, const KiteElem& y) const { return negr(mul(negl(x), negl(y))); }

 private:
  void check(const KiteElem& x) const {
    if (!contains(x)) throw InputError("element " + format_kite_elem(x) + " is not in " + describe());
  }
  KiteElem checked(KiteElem x) const {
    check(x);
    return x;
  }

  VecGroup group_;
  LAut aut_;
  LAut aut_inv_;
};

/// The kite over base^B with λ(x)(i) = x(β(i)).
inline KiteAlgebra kite_over_bcycle(const BCycle& b, const VecGroup& base) {
  const std::size_t k = base.arity();
  VecGroup group = base.integral() ? VecGroup::integers(b.size() * k) : VecGroup::rationals(b.size() * k);
  return KiteAlgebra(group, induced_aut(b, k));
}

/// Draws vector entries p/q with p uniform in [-N, N] and q uniform in [1, M]
/// (q = 1 over ℤ), and zones by a fair coin.
struct KiteSampler {
  std::int64_t numerator_bound = 100;
  std::int64_t denominator_bound = 10;

  Rational entry(Rng& rng, bool integral) const {
    const std::int64_t p = uniform_int(rng, -numerator_bound, numerator_bound);
    const std::int64_t q = integral ? 1 : uniform_int(rng, 1, denominator_bound);
    return make_rational(p, q);
  }

  Vec vector(Rng& rng, const VecGroup& g) const {
    Vec v(g.arity());
    for (auto& c : v) c = entry(rng, g.integral());
    return v;
  }

  KiteElem in_zone(Rng& rng, const KiteAlgebra& a, Zone zone) const {
    Vec v = vector(rng, a.group());
    for (auto& c : v) {
      c = abs(c);
      if (zone == Zone::Top) c = -c;
    }
    return {zone, std::move(v)};
  }

  KiteElem element(Rng& rng, const KiteAlgebra& a) const { return in_zone(rng, a, coin(rng) ? Zone::Top : Zone::Bottom); }
};

}  // namespace kiteforge
