#pragma once

// Laws of FL_w-algebras and pseudo MV-algebras as predicates over up to three
// elements. ⊕, ⁻ and ^∼ are always the term-defined operations from
// algebra.hpp, so the pseudo MV identities are checked through the term
// equivalence rather than through any closed formula.

#include <string>
#include <vector>

#include "kiteforge/algebra.hpp"

namespace kiteforge {

template <FLAlgebra A>
struct Law {
  using E = element_t<A>;
  std::string name;
  bool (*holds)(const A&, const E&, const E&, const E&);
};

/// Lattice, monoid, bounds and residuation laws.
template <FLAlgebra A>
std::vector<Law<A>> residuated_lattice_laws() {
  using E = element_t<A>;
  return {
      {"meet-commutative", [](const A& a, const E& x, const E& y, const E&) { return a.meet(x, y) == a.meet(y, x); }},
      {"join-commutative", [](const A& a, const E& x, const E& y, const E&) { return a.join(x, y) == a.join(y, x); }},
      {"meet-associative",
       [](const A& a, const E& x, const E& y, const E& z) { return a.meet(x, a.meet(y, z)) == a.meet(a.meet(x, y), z); }},
      {"join-associative",
       [](const A& a, const E& x, const E& y, const E& z) { return a.join(x, a.join(y, z)) == a.join(a.join(x, y), z); }},
      {"meet-absorbs-join", [](const A& a, const E& x, const E& y, const E&) { return a.meet(x, a.join(x, y)) == x; }},
      {"join-absorbs-meet", [](const A& a, const E& x, const E& y, const E&) { return a.join(x, a.meet(x, y)) == x; }},
      {"order-is-meet", [](const A& a, const E& x, const E& y, const E&) { return a.leq(x, y) == (a.meet(x, y) == x); }},
      {"mul-associative",
       [](const A& a, const E& x, const E& y, const E& z) { return a.mul(x, a.mul(y, z)) == a.mul(a.mul(x, y), z); }},
      {"mul-unit", [](const A& a, const E& x, const E&, const E&) { return a.mul(x, a.one()) == x && a.mul(a.one(), x) == x; }},
      {"bounds", [](const A& a, const E& x, const E&, const E&) { return a.leq(a.zero(), x) && a.leq(x, a.one()); }},
      {"residuation",
       [](const A& a, const E& x, const E& y, const E& z) {
         const bool left = a.leq(y, a.ldiv(x, z));
         const bool middle = a.leq(a.mul(x, y), z);
         const bool right = a.leq(x, a.rdiv(z, y));
         return left == middle && middle == right;
       }},
      // Residuation is also checked at the boundary case z = x·y, which
      // random triples almost never hit.
      {"residuation-tight",
       [](const A& a, const E& x, const E& y, const E&) {
         const E p = a.mul(x, y);
         return a.leq(y, a.ldiv(x, p)) && a.leq(x, a.rdiv(p, y));
       }},
  };
}

/// (A1)-(A8), their standard consequences, the term equivalence with the
/// residuated signature, the order characterisations, (Łuk) and De Morgan.
template <FLAlgebra A>
std::vector<Law<A>> pseudo_mv_laws() {
  using E = element_t<A>;
  return {
      {"A1", [](const A& a, const E& x, const E& y, const E& z) {
         return oplus(a, x, oplus(a, y, z)) == oplus(a, oplus(a, x, y), z);
       }},
      {"A2", [](const A& a, const E& x, const E&, const E&) { return oplus(a, x, a.zero()) == x; }},
      {"A3", [](const A& a, const E& x, const E&, const E&) { return oplus(a, x, a.one()) == a.one(); }},
      {"A4", [](const A& a, const E& x, const E& y, const E&) {
         return negr(a, oplus(a, negl(a, x), negl(a, y))) == negl(a, oplus(a, negr(a, x), negr(a, y)));
       }},
      {"A5", [](const A& a, const E& x, const E& y, const E&) {
         return oplus(a, negl(a, oplus(a, x, negr(a, y))), x) == oplus(a, y, negr(a, oplus(a, negl(a, x), y)));
       }},
      {"A6", [](const A& a, const E& x, const E& y, const E&) {
         return oplus(a, x, negr(a, oplus(a, negl(a, y), x))) == oplus(a, y, negr(a, oplus(a, negl(a, x), y)));
       }},
      {"A7", [](const A& a, const E& x, const E&, const E&) { return negr(a, negl(a, x)) == x; }},
      {"A8", [](const A& a, const E&, const E&, const E&) { return negl(a, a.zero()) == a.one(); }},
      {"zero-oplus", [](const A& a, const E& x, const E&, const E&) { return oplus(a, a.zero(), x) == x; }},
      {"one-oplus", [](const A& a, const E& x, const E&, const E&) { return oplus(a, a.one(), x) == a.one(); }},
      {"negations-of-one", [](const A& a, const E&, const E&, const E&) {
         return negl(a, a.one()) == a.zero() && negr(a, a.one()) == a.zero();
       }},
      {"tilde-minus", [](const A& a, const E& x, const E&, const E&) { return negl(a, negr(a, x)) == x; }},
      {"mul-zero", [](const A& a, const E& x, const E&, const E&) {
         return a.mul(x, a.zero()) == a.zero() && a.mul(a.zero(), x) == a.zero();
       }},
      {"join-four-ways", [](const A& a, const E& x, const E& y, const E&) {
         const E j = oplus(a, x, a.mul(y, negr(a, x)));
         return j == oplus(a, y, a.mul(x, negr(a, y))) && j == oplus(a, a.mul(negl(a, x), y), x) &&
                j == oplus(a, a.mul(negl(a, y), x), y);
       }},
      {"meet-two-ways", [](const A& a, const E& x, const E& y, const E&) {
         return a.mul(oplus(a, negl(a, x), y), x) == a.mul(y, oplus(a, x, negr(a, y)));
       }},
      {"def-join", [](const A& a, const E& x, const E& y, const E&) {
         return a.join(x, y) == oplus(a, x, a.mul(y, negr(a, x)));
       }},
      {"def-meet", [](const A& a, const E& x, const E& y, const E&) {
         return a.meet(x, y) == a.mul(oplus(a, negl(a, x), y), x);
       }},
      {"def-mul", [](const A& a, const E& x, const E& y, const E&) {
         return a.mul(x, y) == negr(a, oplus(a, negl(a, x), negl(a, y)));
       }},
      {"def-ldiv", [](const A& a, const E& x, const E& y, const E&) { return a.ldiv(x, y) == oplus(a, y, negr(a, x)); }},
      {"def-rdiv", [](const A& a, const E& x, const E& y, const E&) { return a.rdiv(y, x) == oplus(a, negl(a, x), y); }},
      {"order-characterisations", [](const A& a, const E& x, const E& y, const E&) {
         const bool le = a.leq(x, y);
         return le == (oplus(a, negl(a, x), y) == a.one()) && le == (oplus(a, y, negr(a, x)) == a.one()) &&
                le == (a.mul(x, negr(a, y)) == a.zero()) && le == (a.mul(negl(a, y), x) == a.zero());
       }},
      {"Luk", [](const A& a, const E& x, const E& y, const E&) {
         const E j = a.join(x, y);
         return a.rdiv(x, a.ldiv(y, x)) == j && a.ldiv(a.rdiv(x, y), x) == j;
       }},
      {"de-morgan", [](const A& a, const E& x, const E& y, const E&) {
         const E j = a.join(x, y);
         return negr(a, j) == a.meet(negr(a, x), negr(a, y)) && negl(a, j) == a.meet(negl(a, x), negl(a, y));
       }},
  };
}

/// Every law checked by the kite axiom suite.
template <FLAlgebra A>
std::vector<Law<A>> all_laws() {
  auto laws = residuated_lattice_laws<A>();
  auto pmv = pseudo_mv_laws<A>();
  laws.insert(laws.end(), pmv.begin(), pmv.end());
  return laws;
}

}  // namespace kiteforge
