#pragma once

// Finite B-cycles: a finite set {0..b-1} with a distinguished bijection β.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kiteforge/error.hpp"
#include "kiteforge/lgrp.hpp"

namespace kiteforge {

class BCycle {
 public:
  explicit BCycle(std::vector<std::size_t> perm) : perm_(std::move(perm)), inv_(perm_.size()) {
    if (perm_.empty()) throw InputError("a B-cycle needs at least one point");
    std::vector<bool> hit(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      const std::size_t p = perm_[i];
      if (p >= perm_.size() || hit[p]) throw InputError("B-cycle map is not a bijection");
      hit[p] = true;
      inv_[p] = i;
    }
  }

  std::size_t size() const { return perm_.size(); }
  std::size_t apply(std::size_t i) const { return perm_[i]; }
  std::size_t apply_inverse(std::size_t i) const { return inv_[i]; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<std::size_t>& inverse() const { return inv_; }

  /// βᵐ(i) for any integer m.
  std::size_t power(std::int64_t m, std::size_t i) const {
    const auto& step = m < 0 ? inv_ : perm_;
    for (std::int64_t k = m < 0 ? -m : m; k > 0; --k) i = step[i];
    return i;
  }

  std::vector<std::size_t> cycle_lengths() const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (std::size_t i = s; !seen[i]; i = perm_[i], ++len) seen[i] = true;
      out.push_back(len);
    }
    return out;
  }

  friend bool operator==(const BCycle&, const BCycle&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> inv_;
};

/// Z_n: m ↦ m+1 mod n.
inline BCycle z_n(std::size_t n) {
  if (n == 0) throw InputError("Z_n needs n >= 1");
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return BCycle(std::move(p));
}

/// n points, each fixed.
inline BCycle bc_trivial(std::size_t n) {
  if (n == 0) throw InputError("a B-cycle needs at least one point");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return BCycle(std::move(p));
}

/// Disjoint cycles of the given lengths laid out consecutively.
inline BCycle bc_from_cycle_type(const std::vector<std::size_t>& lengths) {
  std::vector<std::size_t> p;
  for (std::size_t len : lengths) {
    if (len == 0) throw InputError("cycle lengths must be positive");
    const std::size_t base = p.size();
    for (std::size_t j = 0; j < len; ++j) p.push_back(base + (j + 1) % len);
  }
  return BCycle(std::move(p));
}

/// B × C with β(i,j) = (β_B(i), β_C(j)); the pair (i,j) is point i·|C| + j.
inline BCycle bc_product(const BCycle& b, const BCycle& c) {
  std::vector<std::size_t> p(b.size() * c.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) p[i * c.size() + j] = b.apply(i) * c.size() + c.apply(j);
  return BCycle(std::move(p));
}

/// A point where f∘β_B ≠ β_C∘f, or nothing when f is a homomorphism.
inline std::optional<std::size_t> bc_hom_violation(const std::vector<std::size_t>& f, const BCycle& b, const BCycle& c) {
  if (f.size() != b.size()) throw InputError("map domain does not match the B-cycle");
  for (std::size_t x : f)
    if (x >= c.size()) throw InputError("map value outside the target B-cycle");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (f[b.apply(i)] != c.apply(f[i])) return i;
  return std::nullopt;
}

inline bool bc_is_hom(const std::vector<std::size_t>& f, const BCycle& b, const BCycle& c) {
  return !bc_hom_violation(f, b, c);
}

/// lcm of the cycle lengths.
inline std::uint64_t bc_dimension(const BCycle& b) {
  std::uint64_t n = 1;
  for (std::size_t len : b.cycle_lengths()) n = std::lcm(n, static_cast<std::uint64_t>(len));
  return n;
}

/// The map Z_n × B → B, (m,i) ↦ βᵐ(i), where Z_n × B carries the n-cycle on
/// the first factor and the identity on B. It is equivariant exactly when
/// dim(B) divides n.
struct UnrollHom {
  BCycle domain;
  std::vector<std::size_t> map;
};

inline UnrollHom unroll_hom(std::size_t n, const BCycle& b) {
  const std::uint64_t dim = bc_dimension(b);
  if (n == 0 || n % dim != 0)
    throw InputError("unroll map needs dim(B) = " + std::to_string(dim) + " to divide n = " + std::to_string(n));
  BCycle domain = bc_product(z_n(n), bc_trivial(b.size()));
  std::vector<std::size_t> f(domain.size());
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < b.size(); ++i) f[m * b.size() + i] = b.power(static_cast<std::int64_t>(m), i);
  if (!bc_is_hom(f, domain, b)) throw LogicError("unroll map is not equivariant");
  return {std::move(domain), std::move(f)};
}

/// Projection of B × C onto its first or second factor.
inline std::vector<std::size_t> bc_projection(const BCycle& b, const BCycle& c, int factor) {
  std::vector<std::size_t> f(b.size() * c.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) f[i * c.size() + j] = factor == 0 ? i : j;
  return f;
}

/// λ(x)(i, c) = x(β(i), c) on the power of a k-dimensional group indexed by B,
/// where coordinate (i, c) is i·k + c.
inline LAut induced_aut(const BCycle& b, std::size_t k = 1) {
  std::vector<std::size_t> p(b.size() * k);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) p[i * k + c] = b.apply(i) * k + c;
  return LAut::permutation(std::move(p));
}

}  // namespace kiteforge
