#pragma once

#include <concepts>

namespace kiteforge {

/// An FL-algebra handle: the basic operations ∧ ∨ · \ / and the constants 0, 1
/// over `element_type`, plus the lattice order. ldiv(x, y) is x\y and
/// rdiv(x, y) is x/y.
template <class A>
concept FLAlgebra = requires(const A& a, const typename A::element_type& x) {
  typename A::element_type;
  { a.meet(x, x) } -> std::convertible_to<typename A::element_type>;
  { a.join(x, x) } -> std::convertible_to<typename A::element_type>;
  { a.mul(x, x) } -> std::convertible_to<typename A::element_type>;
  { a.ldiv(x, x) } -> std::convertible_to<typename A::element_type>;
  { a.rdiv(x, x) } -> std::convertible_to<typename A::element_type>;
  { a.zero() } -> std::convertible_to<typename A::element_type>;
  { a.one() } -> std::convertible_to<typename A::element_type>;
  { a.leq(x, x) } -> std::convertible_to<bool>;
  { x == x } -> std::convertible_to<bool>;
};

template <FLAlgebra A>
using element_t = typename A::element_type;

/// x⁻ = 0/x
template <FLAlgebra A>
element_t<A> negl(const A& a, const element_t<A>& x) {
  return a.rdiv(a.zero(), x);
}

/// x^∼ = x\0
template <FLAlgebra A>
element_t<A> negr(const A& a, const element_t<A>& x) {
  return a.ldiv(x, a.zero());
}

/// x ⊕ y = (x⁻·y⁻)^∼
template <FLAlgebra A>
element_t<A> oplus(const A& a, const element_t<A>& x, const element_t<A>& y) {
  return negr(a, a.mul(negl(a, x), negl(a, y)));
}

/// x^∼∼
template <FLAlgebra A>
element_t<A> double_tilde(const A& a, const element_t<A>& x) {
  return negr(a, negr(a, x));
}

}  // namespace kiteforge
