#pragma once

// Abelian ℓ-groups of rational (or integer) k-vectors, their automorphisms of
// the form permutation ∘ positive diagonal scaling, the antilexicographically
// ordered semidirect product with ℤ, and the interval algebra Γ between
// (e,-1) and (e,0).

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kiteforge/error.hpp"
#include "kiteforge/rational.hpp"

namespace kiteforge {

/// ℚ^k or ℤ^k with componentwise addition and pointwise order.
class VecGroup {
 public:
  static VecGroup rationals(std::size_t k) { return VecGroup(k, false); }
  static VecGroup integers(std::size_t k) { return VecGroup(k, true); }

  std::size_t arity() const { return arity_; }
  bool integral() const { return integral_; }
  std::string name() const { return std::string(integral_ ? "Z^" : "Q^") + std::to_string(arity_); }
  Vec identity() const { return vec::zeros(arity_); }

  bool contains(const Vec& v) const { return v.size() == arity_ && (!integral_ || vec::is_integral(v)); }

  friend bool operator==(const VecGroup&, const VecGroup&) = default;

 private:
  VecGroup(std::size_t k, bool integral) : arity_(k), integral_(integral) {
    if (k == 0) throw InputError("vector group arity must be positive");
  }
  std::size_t arity_;
  bool integral_;
};

/// λ(x)(i) = scale[i] · x(perm[i]), with every scale positive.
class LAut {
 public:
  LAut(std::vector<std::size_t> perm, Vec scales) : perm_(std::move(perm)), scales_(std::move(scales)) {
    const std::size_t k = perm_.size();
    if (k == 0) throw InputError("automorphism arity must be positive");
    if (scales_.size() != k) throw InputError("automorphism needs one scale per coordinate");
    std::vector<bool> hit(k, false);
    for (std::size_t p : perm_) {
      if (p >= k || hit[p]) throw InputError("automorphism permutation is not a bijection");
      hit[p] = true;
    }
    for (const auto& c : scales_)
      if (c <= 0) throw InputError("automorphism scales must be positive");
  }

  static LAut identity(std::size_t k) { return permutation(iota(k)); }
  static LAut permutation(std::vector<std::size_t> perm) {
    const std::size_t k = perm.size();
    return LAut(std::move(perm), Vec(k, Rational(1)));
  }
  static LAut scaling(Vec scales) {
    const std::size_t k = scales.size();
    return LAut(iota(k), std::move(scales));
  }
  /// i ↦ i+1 mod k, so λ(x)(i) = x(i+1).
  static LAut cyclic_shift(std::size_t k) {
    std::vector<std::size_t> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = (i + 1) % k;
    return permutation(std::move(p));
  }

  std::size_t arity() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const Vec& scales() const { return scales_; }

  Vec apply(const Vec& x) const {
    if (x.size() != arity()) throw InputError("automorphism arity mismatch");
    Vec out(arity());
    for (std::size_t i = 0; i < arity(); ++i) out[i] = scales_[i] * x[perm_[i]];
    return out;
  }

  /// (*this ∘ inner)(x) = (*this)(inner(x))
  LAut compose(const LAut& inner) const {
    if (inner.arity() != arity()) throw InputError("automorphism arity mismatch");
    std::vector<std::size_t> p(arity());
    Vec s(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
      p[i] = inner.perm_[perm_[i]];
      s[i] = scales_[i] * inner.scales_[perm_[i]];
    }
    return LAut(std::move(p), std::move(s));
  }

  LAut inverse() const {
    std::vector<std::size_t> p(arity());
    Vec s(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
      p[perm_[i]] = i;
      s[perm_[i]] = 1 / scales_[i];
    }
    return LAut(std::move(p), std::move(s));
  }

  /// λⁿ for any integer n, with λ⁰ = id.
  LAut power(std::int64_t n) const {
    LAut base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    LAut acc = identity(arity());
    while (e) {
      if (e & 1U) acc = acc.compose(base);
      base = base.compose(base);
      e >>= 1U;
    }
    return acc;
  }

  bool is_identity() const { return *this == identity(arity()); }

  /// Cycles of the permutation, each listed from its least index.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<bool> seen(arity(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < arity(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> cyc;
      for (std::size_t i = s; !seen[i]; i = perm_[i]) {
        seen[i] = true;
        cyc.push_back(i);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// `perm:(0 1)(2);scale:1,1,1`
  std::string to_spec() const {
    std::string out = "perm:";
    for (const auto& cyc : cycles()) {
      out += "(";
      for (std::size_t j = 0; j < cyc.size(); ++j) out += (j ? " " : "") + std::to_string(cyc[j]);
      out += ")";
    }
    out += ";scale:";
    for (std::size_t i = 0; i < arity(); ++i) out += (i ? "," : "") + format_rational(scales_[i]);
    return out;
  }

  friend bool operator==(const LAut&, const LAut&) = default;

 private:
  static std::vector<std::size_t> iota(std::size_t k) {
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
  }

  std::vector<std::size_t> perm_;
  Vec scales_;
};

/// Result of the cycle analysis behind aut_dimension.
struct DimensionAnalysis {
  std::uint64_t dimension;  // 0: no positive power is the identity
  /// A cycle whose scales do not multiply to 1, with that product.
  std::optional<std::pair<std::vector<std::size_t>, Rational>> unbalanced_cycle;
};

inline DimensionAnalysis analyse_dimension(const LAut& a) {
  std::uint64_t n = 1;
  for (const auto& cyc : a.cycles()) {
    Rational product(1);
    for (std::size_t i : cyc) product *= a.scales()[i];
    if (product != 1) return {0, std::make_pair(cyc, product)};
    n = std::lcm(n, static_cast<std::uint64_t>(cyc.size()));
  }
  return {n, std::nullopt};
}

/// Least n > 0 with λⁿ = id, or 0 when there is none.
inline std::uint64_t aut_dimension(const LAut& a) { return analyse_dimension(a).dimension; }

/// λⁿ(eᵢ) = eᵢ for every basis vector eᵢ.
inline bool fixes_basis(const LAut& a, std::int64_t n) {
  const LAut p = a.power(n);
  for (std::size_t i = 0; i < a.arity(); ++i) {
    Vec e = vec::zeros(a.arity());
    e[i] = 1;
    if (p.apply(e) != e) return false;
  }
  return true;
}

/// Confirms the cycle analysis by evaluating powers directly: the reported
/// dimension n fixes the basis and no proper divisor does; dimension 0 means
/// no power up to 64 fixes it.
inline bool certify_dimension(const LAut& a) {
  const auto analysis = analyse_dimension(a);
  const std::uint64_t n = analysis.dimension;
  if (n == 0) {
    if (!analysis.unbalanced_cycle) return false;
    for (std::int64_t m = 1; m <= 64; ++m)
      if (fixes_basis(a, m)) return false;
    return true;
  }
  if (!fixes_basis(a, static_cast<std::int64_t>(n))) return false;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0 && fixes_basis(a, static_cast<std::int64_t>(d))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// L ⋉ ℤ

struct SemidirectElem {
  Vec x;
  std::int64_t m = 0;

  friend bool operator==(const SemidirectElem&, const SemidirectElem&) = default;
};

inline std::string format_semidirect(const SemidirectElem& s) { return "(" + format_vec(s.x) + ", " + std::to_string(s.m) + ")"; }

/// (x,m)(y,n) = (λ⁻ⁿ(x)+y, m+n), ordered antilexicographically: the ℤ part
/// decides, ties are broken pointwise on the vector part.
class Semidirect {
 public:
  explicit Semidirect(LAut aut) : aut_(std::move(aut)) {
    for (std::int64_t n = -kCached; n <= kCached; ++n) powers_.emplace(n, aut_.power(n));
  }

  const LAut& aut() const { return aut_; }
  std::size_t arity() const { return aut_.arity(); }

  Vec act(std::int64_t n, const Vec& x) const {
    auto it = powers_.find(n);
    return it != powers_.end() ? it->second.apply(x) : aut_.power(n).apply(x);
  }

  SemidirectElem identity() const { return {vec::zeros(arity()), 0}; }

  SemidirectElem mul(const SemidirectElem& a, const SemidirectElem& b) const {
    check(a);
    check(b);
    return {vec::add(act(-b.m, a.x), b.x), a.m + b.m};
  }

  /// (x,m)⁻¹ = (λᵐ(-x), -m)
  SemidirectElem inv(const SemidirectElem& a) const {
    check(a);
    return {act(a.m, vec::neg(a.x)), -a.m};
  }

  bool leq(const SemidirectElem& a, const SemidirectElem& b) const {
    if (a.m != b.m) return a.m < b.m;
    return vec::leq(a.x, b.x);
  }

  SemidirectElem meet(const SemidirectElem& a, const SemidirectElem& b) const {
    if (a.m != b.m) return a.m < b.m ? a : b;
    return {vec::meet(a.x, b.x), a.m};
  }

  SemidirectElem join(const SemidirectElem& a, const SemidirectElem& b) const {
    if (a.m != b.m) return a.m > b.m ? a : b;
    return {vec::join(a.x, b.x), a.m};
  }

 private:
  static constexpr std::int64_t kCached = 4;

  void check(const SemidirectElem& a) const {
    if (a.x.size() != arity()) throw InputError("semidirect element arity mismatch");
  }

  LAut aut_;
  std::map<std::int64_t, LAut> powers_;
};

/// Γ(L⋉ℤ, u⁻¹) on the interval [(e,-1), (e,0)] with
///   x⊙y = xy ∨ u⁻¹,  x\y = x⁻¹y ∧ e,  y/x = yx⁻¹ ∧ e.
class GammaAlgebra {
 public:
  using element_type = SemidirectElem;

  explicit GammaAlgebra(LAut aut) : group_(std::move(aut)) {}

  const Semidirect& group() const { return group_; }

  bool contains(const SemidirectElem& a) const {
    if (a.x.size() != group_.arity()) return false;
    if (a.m == 0) return vec::is_negative_cone(a.x);
    if (a.m == -1) return vec::is_positive_cone(a.x);
    return false;
  }

  SemidirectElem zero() const { return {vec::zeros(group_.arity()), -1}; }
  SemidirectElem one() const { return group_.identity(); }

  SemidirectElem meet(const SemidirectElem& a, const SemidirectElem& b) const { return group_.meet(in(a), in(b)); }
  SemidirectElem join(const SemidirectElem& a, const SemidirectElem& b) const { return group_.join(in(a), in(b)); }
  SemidirectElem mul(const SemidirectElem& a, const SemidirectElem& b) const {
    return group_.join(group_.mul(in(a), in(b)), zero());
  }
  /// a\b = a⁻¹b ∧ e
  SemidirectElem ldiv(const SemidirectElem& a, const SemidirectElem& b) const {
    return group_.meet(group_.mul(group_.inv(in(a)), in(b)), one());
  }
  /// a/b = ab⁻¹ ∧ e
  SemidirectElem rdiv(const SemidirectElem& a, const SemidirectElem& b) const {
    return group_.meet(group_.mul(in(a), group_.inv(in(b))), one());
  }
  bool leq(const SemidirectElem& a, const SemidirectElem& b) const { return group_.leq(in(a), in(b)); }

 private:
  const SemidirectElem& in(const SemidirectElem& a) const {
    if (!contains(a)) throw InputError("element " + format_semidirect(a) + " lies outside the interval [(e,-1),(e,0)]");
    return a;
  }

  Semidirect group_;
};

}  // namespace kiteforge
