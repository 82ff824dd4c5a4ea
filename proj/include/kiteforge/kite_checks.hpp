#pragma once

// Sampled verification suites for kites: the axiom suite, the zone
// homomorphism, symmetry and commutativity witnesses, the Ω reconstruction,
// lifts of group and filter homomorphisms, the contravariant functor on
// B-cycle maps, perfect powers, the Γ comparison, the left triangle identity,
// dimension, and the identity separating kites of dimension 0.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kiteforge/bcycle.hpp"
#include "kiteforge/error.hpp"
#include "kiteforge/kite.hpp"
#include "kiteforge/laws.hpp"
#include "kiteforge/lgrp.hpp"
#include "kiteforge/report.hpp"
#include "kiteforge/sampling.hpp"

namespace kiteforge {

inline Json to_json(const KiteElem& x) { return format_kite_elem(x); }
inline Json to_json(const SemidirectElem& x) { return format_semidirect(x); }

/// Evaluates every law on `count` sampled triples drawn by `draw(rng)`.
template <FLAlgebra A, class Draw>
CheckReport check_laws(std::string name, const A& a, const std::vector<Law<A>>& laws, Draw&& draw, std::uint64_t count,
                       std::uint64_t seed) {
  using E = element_t<A>;
  struct Failure {
    std::string law;
    E x, y, z;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    E x = draw(rng);
    E y = draw(rng);
    E z = draw(rng);
    for (const auto& law : laws)
      if (!law.holds(a, x, y, z)) return Failure{law.name, x, y, z};
    return std::nullopt;
  });
  if (!failure) return passed(std::move(name), count, seed);
  const auto& f = failure->witness;
  return failed(std::move(name), count, seed,
                Json{{"sample", failure->index}, {"law", f.law}, {"x", to_json(f.x)}, {"y", to_json(f.y)}, {"z", to_json(f.z)}});
}

/// The closed negation formulas agree with 0/x and x\0, and x^∼∼ is λ
/// applied inside the zone.
inline std::vector<Law<KiteAlgebra>> kite_specific_laws() {
  using E = KiteElem;
  return {
      {"negation-formulas",
       [](const KiteAlgebra& a, const E& x, const E&, const E&) {
         return a.negl(x) == kiteforge::negl(a, x) && a.negr(x) == kiteforge::negr(a, x);
       }},
      {"double-tilde-is-aut",
       [](const KiteAlgebra& a, const E& x, const E&, const E&) {
         return kiteforge::double_tilde(a, x) == E{x.zone, a.aut().apply(x.value)};
       }},
  };
}

inline CheckReport check_axioms(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  auto laws = all_laws<KiteAlgebra>();
  auto extra = kite_specific_laws();
  laws.insert(laws.end(), extra.begin(), extra.end());
  return check_laws("axioms", a, laws, [&](Rng& rng) { return s.element(rng, a); }, count, seed);
}

/// The zone map onto the two-element Boolean algebra is a homomorphism and
/// every sampled Bottom element lies below every sampled Top element.
inline CheckReport perfect_witness(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  auto h = [](const KiteElem& x) { return x.zone == Zone::Top; };
  if (h(a.zero()) || !h(a.one())) return failed("perfect", count, seed, Json{{"reason", "constants map wrongly"}});
  struct Failure {
    std::string op;
    KiteElem x, y;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    KiteElem x = s.element(rng, a);
    KiteElem y = s.element(rng, a);
    const bool hx = h(x), hy = h(y);
    if (h(a.meet(x, y)) != (hx && hy)) return Failure{"meet", x, y};
    if (h(a.join(x, y)) != (hx || hy)) return Failure{"join", x, y};
    if (h(a.mul(x, y)) != (hx && hy)) return Failure{"mul", x, y};
    if (h(a.ldiv(x, y)) != (!hx || hy)) return Failure{"ldiv", x, y};
    if (h(a.rdiv(x, y)) != (!hy || hx)) return Failure{"rdiv", x, y};
    if (!hx && hy && !a.leq(x, y)) return Failure{"bottom-below-top", x, y};
    if (hx && !hy && !a.leq(y, x)) return Failure{"bottom-below-top", y, x};
    return std::nullopt;
  });
  if (!failure) return passed("perfect", count, seed);
  const auto& f = failure->witness;
  return failed("perfect", count, seed,
                Json{{"sample", failure->index}, {"op", f.op}, {"x", to_json(f.x)}, {"y", to_json(f.y)}});
}

struct SymmetryResult {
  std::optional<ShardFailure<KiteElem>> asymmetric;
  std::optional<ShardFailure<std::pair<KiteElem, KiteElem>>> noncommuting;
  CheckReport report;
};

/// Searches for x with x⁻ ≠ x^∼ and for x, y with xy ≠ yx. The check passes
/// when witnesses are found exactly if λ is not the identity.
inline SymmetryResult symmetry_and_commutativity(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed,
                                                 const KiteSampler& s = {}) {
  SymmetryResult out;
  out.asymmetric = run_sharded<KiteElem>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<KiteElem> {
    KiteElem x = s.element(rng, a);
    if (a.negl(x) != a.negr(x)) return x;
    return std::nullopt;
  });
  out.noncommuting = run_sharded<std::pair<KiteElem, KiteElem>>(
      count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<std::pair<KiteElem, KiteElem>> {
        KiteElem x = s.element(rng, a);
        KiteElem y = s.element(rng, a);
        if (a.mul(x, y) != a.mul(y, x)) return std::make_pair(x, y);
        return std::nullopt;
      });
  const bool expect = !a.aut().is_identity();
  const bool found_sym = out.asymmetric.has_value();
  const bool found_comm = out.noncommuting.has_value();
  out.report = {"symmetry", count, seed, found_sym == expect && found_comm == expect, std::nullopt};
  if (found_sym || found_comm || !out.report.pass) {
    Json w;
    w["expected_witness"] = expect;
    if (out.asymmetric) {
      const auto& x = out.asymmetric->witness;
      w["asymmetric"] = Json{{"sample", out.asymmetric->index}, {"x", to_json(x)}, {"negl", to_json(a.negl(x))},
                             {"negr", to_json(a.negr(x))}};
    }
    if (out.noncommuting) {
      const auto& [x, y] = out.noncommuting->witness;
      w["noncommuting"] = Json{{"sample", out.noncommuting->index}, {"x", to_json(x)}, {"y", to_json(y)},
                               {"xy", to_json(a.mul(x, y))}, {"yx", to_json(a.mul(y, x))}};
    }
    out.report.witness = std::move(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reconstruction from the Top zone

/// The automorphism x ↦ x^∼∼ of the group, read off the negative basis
/// vectors -eⱼ of the Top zone. Throws LogicError if it is not a permutation
/// composed with a positive scaling.
inline LAut recover_aut(const KiteAlgebra& a) {
  const std::size_t k = a.arity();
  std::vector<std::size_t> perm(k, k);
  Vec scales(k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec basis = vec::zeros(k);
    basis[j] = -1;
    const KiteElem image = kiteforge::double_tilde(a, KiteElem{Zone::Top, basis});
    for (std::size_t i = 0; i < k; ++i) {
      const Rational c = -image.value[i];
      if (c == 0) continue;
      if (c < 0 || perm[i] != k) throw LogicError("double negation is not a scaled permutation");
      perm[i] = j;
      scales[i] = c;
    }
  }
  for (std::size_t p : perm)
    if (p == k) throw LogicError("double negation is not a scaled permutation");
  return LAut(std::move(perm), std::move(scales));
}

/// Ω(x) = x on Top and Ω(x) = (x^∼)⁻¹ on Bottom, into K(L, μ) where μ is the
/// recovered double negation.
struct OmegaMap {
  KiteAlgebra target;

  KiteElem operator()(const KiteAlgebra& a, const KiteElem& x) const {
    if (x.zone == Zone::Top) return x;
    return {Zone::Bottom, vec::neg(a.negr(x).value)};
  }

  KiteElem preimage(const KiteAlgebra& a, const KiteElem& t) const {
    if (t.zone == Zone::Top) return t;
    return a.negl(KiteElem{Zone::Top, vec::neg(t.value)});
  }
};

inline CheckReport omega_check(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  const OmegaMap omega{KiteAlgebra(a.group(), recover_aut(a))};
  const KiteAlgebra& t = omega.target;
  auto fail = [&](Json w) { return failed("omega", count, seed, std::move(w)); };
  if (omega(a, a.zero()) != t.zero() || omega(a, a.one()) != t.one()) return fail(Json{{"reason", "constants not preserved"}});

  std::array<std::atomic<std::uint64_t>, 4> cases{};
  struct Failure {
    std::string op;
    KiteElem x, y;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    KiteElem x = s.element(rng, a);
    KiteElem y = s.element(rng, a);
    cases[(x.zone == Zone::Top ? 2 : 0) + (y.zone == Zone::Top ? 1 : 0)].fetch_add(1, std::memory_order_relaxed);
    const KiteElem ox = omega(a, x), oy = omega(a, y);
    if (!t.contains(ox)) return Failure{"codomain", x, y};
    if (omega(a, a.mul(x, y)) != t.mul(ox, oy)) return Failure{"mul", x, y};
    if (omega(a, a.negl(x)) != t.negl(ox)) return Failure{"negl", x, y};
    if (omega(a, a.negr(x)) != t.negr(ox)) return Failure{"negr", x, y};
    if (omega(a, a.meet(x, y)) != t.meet(ox, oy)) return Failure{"meet", x, y};
    if (omega(a, a.join(x, y)) != t.join(ox, oy)) return Failure{"join", x, y};
    if (omega(a, a.ldiv(x, y)) != t.ldiv(ox, oy)) return Failure{"ldiv", x, y};
    if (omega(a, a.rdiv(x, y)) != t.rdiv(ox, oy)) return Failure{"rdiv", x, y};
    if ((x == y) != (ox == oy)) return Failure{"injective", x, y};
    // y doubles as a sampled target element for surjectivity.
    const KiteElem pre = omega.preimage(a, y);
    if (!a.contains(pre) || omega(a, pre) != y) return Failure{"surjective", y, pre};
    return std::nullopt;
  });
  if (failure) {
    const auto& f = failure->witness;
    return fail(Json{{"sample", failure->index}, {"op", f.op}, {"x", to_json(f.x)}, {"y", to_json(f.y)}});
  }
  static const char* names[] = {"Bottom*Bottom", "Bottom*Top", "Top*Bottom", "Top*Top"};
  for (int c = 0; c < 4; ++c)
    if (cases[c].load() == 0) return fail(Json{{"reason", "zone case not covered"}, {"case", names[c]}});
  return passed("omega", count, seed);
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A rational matrix acting on column vectors.
class LinearMap {
 public:
  LinearMap(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), m_(std::move(entries)) {
    if (m_.size() != rows_ * cols_) throw InputError("matrix entry count does not match its shape");
  }

  static LinearMap identity(std::size_t k) { return scalar(k, Rational(1)); }
  static LinearMap scalar(std::size_t k, const Rational& c) {
    std::vector<Rational> m(k * k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) m[i * k + i] = c;
    return LinearMap(k, k, std::move(m));
  }
  /// Row i copies coordinate source[i].
  static LinearMap selection(std::size_t cols, const std::vector<std::size_t>& source) {
    std::vector<Rational> m(source.size() * cols, Rational(0));
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (source[i] >= cols) throw InputError("selection index out of range");
      m[i * cols + source[i]] = 1;
    }
    return LinearMap(source.size(), cols, std::move(m));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw InputError("linear map arity mismatch");
    Vec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) out[i] += at(i, j) * x[j];
    return out;
  }

  /// Lattice operations are preserved iff each row has at most one nonzero
  /// entry and that entry is positive.
  bool preserves_lattice() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      int nonzero = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(i, j) < 0) return false;
        if (at(i, j) > 0) ++nonzero;
      }
      if (nonzero > 1) return false;
    }
    return true;
  }

  bool is_integral() const { return vec::is_integral(m_); }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> m_;
};

/// Thrown when a map fails to commute with the automorphisms; carries the
/// offending element.
class CommutationError : public InputError {
 public:
  CommutationError(const std::string& what, Json witness) : InputError(what), witness_(std::move(witness)) {}
  const Json& witness() const noexcept { return witness_; }

 private:
  Json witness_;
};

struct KiteHom {
  KiteAlgebra source;
  KiteAlgebra target;
  std::function<KiteElem(const KiteElem&)> map;

  KiteElem operator()(const KiteElem& x) const { return map(x); }
};

/// h_f(zone, v) = (zone, f(v)) for an ℓ-group homomorphism f with
/// f∘λ₁ = λ₂∘f, which is checked on basis vectors.
inline KiteHom lift_lgroup_hom(const LinearMap& f, const KiteAlgebra& a1, const KiteAlgebra& a2) {
  if (f.cols() != a1.arity() || f.rows() != a2.arity()) throw InputError("linear map shape does not match the groups");
  if (!f.preserves_lattice()) throw InputError("linear map does not preserve the lattice order");
  if (a2.group().integral() && !f.is_integral()) throw InputError("linear map leaves the integer lattice");
  if (a2.group().integral() && !a1.group().integral())
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j)
        if (f.at(i, j) != 0) throw InputError("nonzero linear map from a rational group into an integer group");
  for (std::size_t j = 0; j < a1.arity(); ++j) {
    Vec e = vec::zeros(a1.arity());
    e[j] = 1;
    const Vec lhs = f.apply(a1.aut().apply(e));
    const Vec rhs = a2.aut().apply(f.apply(e));
    if (lhs != rhs)
      throw CommutationError("f∘λ₁ ≠ λ₂∘f", Json{{"basis", j}, {"f_lambda1", format_vec(lhs)}, {"lambda2_f", format_vec(rhs)}});
  }
  return {a1, a2, [f](const KiteElem& x) { return KiteElem{x.zone, f.apply(x.value)}; }};
}

/// f̄(x) = f(x) on Top and f̄(x) = f(x^∼)⁻¹ on Bottom, for a map f on the
/// Top zone given by its action on group values. The preconditions (f
/// preserves the Top-zone operations and commutes with ^∼∼) are checked on
/// sampled Top pairs.
inline KiteHom lift_filter_hom(std::function<Vec(const Vec&)> f, const KiteAlgebra& a1, const KiteAlgebra& a2,
                               std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  auto top = [&](Vec v) { return KiteElem{Zone::Top, std::move(v)}; };
  struct Failure {
    std::string what;
    KiteElem x, y;
  };
  if (f(a1.one().value) != a2.one().value) throw InputError("Top-zone map does not preserve 1");
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    KiteElem x = s.in_zone(rng, a1, Zone::Top);
    KiteElem y = s.in_zone(rng, a1, Zone::Top);
    const KiteElem fx = top(f(x.value)), fy = top(f(y.value));
    if (!a2.contains(fx)) return Failure{"codomain", x, y};
    if (f(kiteforge::double_tilde(a1, x).value) != kiteforge::double_tilde(a2, fx).value) return Failure{"commutation", x, y};
    if (top(f(a1.meet(x, y).value)) != a2.meet(fx, fy)) return Failure{"meet", x, y};
    if (top(f(a1.join(x, y).value)) != a2.join(fx, fy)) return Failure{"join", x, y};
    if (top(f(a1.mul(x, y).value)) != a2.mul(fx, fy)) return Failure{"mul", x, y};
    if (top(f(a1.ldiv(x, y).value)) != a2.ldiv(fx, fy)) return Failure{"ldiv", x, y};
    if (top(f(a1.rdiv(x, y).value)) != a2.rdiv(fx, fy)) return Failure{"rdiv", x, y};
    return std::nullopt;
  });
  if (failure) {
    const auto& w = failure->witness;
    Json j{{"sample", failure->index}, {"x", to_json(w.x)}, {"y", to_json(w.y)}};
    if (w.what == "commutation") throw CommutationError("f(x^∼∼) ≠ f(x)^∼∼", j);
    throw InputError("Top-zone map fails to preserve " + w.what + " at " + j.dump());
  }
  return {a1, a2, [a1, f](const KiteElem& x) {
            if (x.zone == Zone::Top) return KiteElem{Zone::Top, f(x.value)};
            return KiteElem{Zone::Bottom, vec::neg(f(a1.negr(x).value))};
          }};
}

/// Checks that h preserves 0, 1 and all five binary operations (and hence
/// both negations) on sampled pairs; optionally also injectivity.
inline CheckReport check_kite_hom(std::string name, const KiteHom& h, std::uint64_t count, std::uint64_t seed,
                                  bool require_injective = false, const KiteSampler& s = {}) {
  const KiteAlgebra& a = h.source;
  const KiteAlgebra& b = h.target;
  if (h(a.zero()) != b.zero() || h(a.one()) != b.one())
    return failed(std::move(name), count, seed, Json{{"reason", "constants not preserved"}});
  struct Failure {
    std::string op;
    KiteElem x, y;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    KiteElem x = s.element(rng, a);
    KiteElem y = s.element(rng, a);
    const KiteElem hx = h(x), hy = h(y);
    if (!b.contains(hx)) return Failure{"codomain", x, y};
    if (h(a.meet(x, y)) != b.meet(hx, hy)) return Failure{"meet", x, y};
    if (h(a.join(x, y)) != b.join(hx, hy)) return Failure{"join", x, y};
    if (h(a.mul(x, y)) != b.mul(hx, hy)) return Failure{"mul", x, y};
    if (h(a.ldiv(x, y)) != b.ldiv(hx, hy)) return Failure{"ldiv", x, y};
    if (h(a.rdiv(x, y)) != b.rdiv(hx, hy)) return Failure{"rdiv", x, y};
    if (h(a.negl(x)) != b.negl(hx) || h(a.negr(x)) != b.negr(hx)) return Failure{"negations", x, y};
    if (require_injective && x != y && hx == hy) return Failure{"injective", x, y};
    return std::nullopt;
  });
  if (!failure) return passed(std::move(name), count, seed);
  const auto& w = failure->witness;
  return failed(std::move(name), count, seed,
                Json{{"sample", failure->index}, {"op", w.op}, {"x", to_json(w.x)}, {"y", to_json(w.y)}});
}

/// K_f: K_C(base) → K_B(base), v ↦ v∘f, for a B-cycle homomorphism f: B → C.
inline KiteHom kite_contravariant(const std::vector<std::size_t>& f, const BCycle& b, const BCycle& c, const VecGroup& base) {
  if (auto bad = bc_hom_violation(f, b, c))
    throw CommutationError("not a B-cycle homomorphism", Json{{"point", *bad}, {"f_beta", f[b.apply(*bad)]}, {"beta_f", c.apply(f[*bad])}});
  const std::size_t k = base.arity();
  std::vector<std::size_t> source(b.size() * k);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t comp = 0; comp < k; ++comp) source[i * k + comp] = f[i] * k + comp;
  return lift_lgroup_hom(LinearMap::selection(c.size() * k, source), kite_over_bcycle(c, base), kite_over_bcycle(b, base));
}

/// K_B(base) ↪ K_{Z_n × B}(base) induced by the unroll map with n = dim(B).
inline CheckReport embed_check(const BCycle& b, const VecGroup& base, std::uint64_t count, std::uint64_t seed,
                               const KiteSampler& s = {}) {
  const auto unroll = unroll_hom(bc_dimension(b), b);
  const KiteHom h = kite_contravariant(unroll.map, unroll.domain, b, base);
  return check_kite_hom("embed", h, count, seed, true, s);
}

// ---------------------------------------------------------------------------
// Perfect powers of a kite

/// An element of the zone-aligned part of a finite power of a kite.
struct PProdElem {
  Zone zone;
  std::vector<Vec> coords;

  friend bool operator==(const PProdElem&, const PProdElem&) = default;
};

inline PProdElem make_pprod_elem(const std::vector<KiteElem>& parts) {
  if (parts.empty()) throw InputError("perfect power element needs at least one coordinate");
  PProdElem out{parts.front().zone, {}};
  for (const auto& p : parts) {
    if (p.zone != out.zone) throw InputError("perfect power coordinates must share a zone");
    out.coords.push_back(p.value);
  }
  return out;
}

inline Json to_json(const PProdElem& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords) coords.push_back(format_vec(c));
  return Json{{"zone", zone_name(x.zone)}, {"coords", coords}};
}

/// The subalgebra of A^S consisting of zone-aligned tuples.
class PProdKite {
 public:
  using element_type = PProdElem;

  PProdKite(KiteAlgebra factor, std::size_t copies) : factor_(std::move(factor)), copies_(copies) {
    if (copies_ == 0) throw InputError("perfect power needs at least one copy");
  }

  const KiteAlgebra& factor() const { return factor_; }
  std::size_t copies() const { return copies_; }

  KiteElem coordinate(const PProdElem& x, std::size_t s) const { return {x.zone, x.coords.at(s)}; }

  bool contains(const PProdElem& x) const {
    if (x.coords.size() != copies_) return false;
    for (std::size_t s = 0; s < copies_; ++s)
      if (!factor_.contains(coordinate(x, s))) return false;
    return true;
  }

  PProdElem zero() const { return constant(factor_.zero()); }
  PProdElem one() const { return constant(factor_.one()); }

  PProdElem meet(const PProdElem& x, const PProdElem& y) const { return lift(&KiteAlgebra::meet, x, y); }
  PProdElem join(const PProdElem& x, const PProdElem& y) const { return lift(&KiteAlgebra::join, x, y); }
  PProdElem mul(const PProdElem& x, const PProdElem& y) const { return lift(&KiteAlgebra::mul, x, y); }
  PProdElem ldiv(const PProdElem& x, const PProdElem& y) const { return lift(&KiteAlgebra::ldiv, x, y); }
  PProdElem rdiv(const PProdElem& x, const PProdElem& y) const { return lift(&KiteAlgebra::rdiv, x, y); }

  bool leq(const PProdElem& x, const PProdElem& y) const {
    for (std::size_t s = 0; s < copies_; ++s)
      if (!factor_.leq(coordinate(x, s), coordinate(y, s))) return false;
    return true;
  }

  PProdElem sample(Rng& rng, const KiteSampler& s) const {
    const Zone zone = coin(rng) ? Zone::Top : Zone::Bottom;
    std::vector<KiteElem> parts;
    for (std::size_t i = 0; i < copies_; ++i) parts.push_back(s.in_zone(rng, factor_, zone));
    return make_pprod_elem(parts);
  }

 private:
  PProdElem constant(const KiteElem& c) const { return make_pprod_elem(std::vector<KiteElem>(copies_, c)); }

  PProdElem lift(KiteElem (KiteAlgebra::*op)(const KiteElem&, const KiteElem&) const, const PProdElem& x,
                 const PProdElem& y) const {
    std::vector<KiteElem> parts;
    for (std::size_t s = 0; s < copies_; ++s) parts.push_back((factor_.*op)(coordinate(x, s), coordinate(y, s)));
    return make_pprod_elem(parts);
  }

  KiteAlgebra factor_;
  std::size_t copies_;
};

/// Compares the perfect power over S of K_B(base) with K_{B×S}(base), where S
/// is a set of `copies` points acting trivially, through the coordinate
/// reshuffle (s, i, c) ↦ ((i·|S| + s)·k + c).
inline CheckReport powerlemma_check(const BCycle& b, std::size_t copies, const VecGroup& base, std::uint64_t count,
                                    std::uint64_t seed, const KiteSampler& s = {}) {
  const PProdKite power(kite_over_bcycle(b, base), copies);
  const KiteAlgebra target = kite_over_bcycle(bc_product(b, bc_trivial(copies)), base);
  const std::size_t k = base.arity();
  auto index = [&](std::size_t sidx, std::size_t i, std::size_t c) { return (i * copies + sidx) * k + c; };
  auto forward = [&](const PProdElem& x) {
    Vec v(target.arity());
    for (std::size_t sidx = 0; sidx < copies; ++sidx)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t c = 0; c < k; ++c) v[index(sidx, i, c)] = x.coords[sidx][i * k + c];
    return KiteElem{x.zone, std::move(v)};
  };
  auto backward = [&](const KiteElem& t) {
    PProdElem x{t.zone, std::vector<Vec>(copies, Vec(b.size() * k))};
    for (std::size_t sidx = 0; sidx < copies; ++sidx)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t c = 0; c < k; ++c) x.coords[sidx][i * k + c] = t.value[index(sidx, i, c)];
    return x;
  };
  if (forward(power.zero()) != target.zero() || forward(power.one()) != target.one())
    return failed("powerlemma", count, seed, Json{{"reason", "constants not preserved"}});
  struct Failure {
    std::string op;
    PProdElem x, y;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    PProdElem x = power.sample(rng, s);
    PProdElem y = power.sample(rng, s);
    const KiteElem fx = forward(x), fy = forward(y);
    if (!target.contains(fx)) return Failure{"codomain", x, y};
    if (backward(fx) != x) return Failure{"bijection", x, y};
    if (forward(power.meet(x, y)) != target.meet(fx, fy)) return Failure{"meet", x, y};
    if (forward(power.join(x, y)) != target.join(fx, fy)) return Failure{"join", x, y};
    if (forward(power.mul(x, y)) != target.mul(fx, fy)) return Failure{"mul", x, y};
    if (forward(power.ldiv(x, y)) != target.ldiv(fx, fy)) return Failure{"ldiv", x, y};
    if (forward(power.rdiv(x, y)) != target.rdiv(fx, fy)) return Failure{"rdiv", x, y};
    if (power.leq(x, y) != target.leq(fx, fy)) return Failure{"order", x, y};
    // A target element sampled directly must come from a zone-aligned tuple.
    const KiteElem t = s.element(rng, target);
    const PProdElem back = backward(t);
    if (!power.contains(back) || forward(back) != t) return Failure{"surjective", back, back};
    return std::nullopt;
  });
  if (!failure) return passed("powerlemma", count, seed);
  const auto& w = failure->witness;
  return failed("powerlemma", count, seed,
                Json{{"sample", failure->index}, {"op", w.op}, {"x", to_json(w.x)}, {"y", to_json(w.y)}});
}

// ---------------------------------------------------------------------------
// Γ comparison

/// ι(Top, x) = (x, 0) and ι(Bottom, y) = (y, -1).
inline SemidirectElem gamma_embed(const KiteElem& x) { return {x.value, x.zone == Zone::Top ? 0 : -1}; }

inline KiteElem gamma_unembed(const SemidirectElem& g) { return {g.m == 0 ? Zone::Top : Zone::Bottom, g.x}; }

/// ι is a bijection onto Γ(L⋉ℤ, (e,-1)) preserving and reflecting the order
/// and preserving ⊙, \, /, ∧, ∨, 0 and 1.
inline CheckReport gamma_iso_check(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  const GammaAlgebra g(a.aut());
  if (gamma_embed(a.zero()) != g.zero() || gamma_embed(a.one()) != g.one())
    return failed("gamma", count, seed, Json{{"reason", "constants not preserved"}});
  struct Failure {
    std::string op;
    KiteElem x, y;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    KiteElem x = s.element(rng, a);
    KiteElem y = s.element(rng, a);
    const SemidirectElem ix = gamma_embed(x), iy = gamma_embed(y);
    if (!g.contains(ix)) return Failure{"codomain", x, y};
    if (a.leq(x, y) != g.leq(ix, iy)) return Failure{"order", x, y};
    if (gamma_embed(a.mul(x, y)) != g.mul(ix, iy)) return Failure{"mul", x, y};
    if (gamma_embed(a.ldiv(x, y)) != g.ldiv(ix, iy)) return Failure{"ldiv", x, y};
    if (gamma_embed(a.rdiv(x, y)) != g.rdiv(ix, iy)) return Failure{"rdiv", x, y};
    if (gamma_embed(a.meet(x, y)) != g.meet(ix, iy)) return Failure{"meet", x, y};
    if (gamma_embed(a.join(x, y)) != g.join(ix, iy)) return Failure{"join", x, y};
    // Any interval element is hit: sample one and map it back.
    const KiteElem t = s.element(rng, a);
    const SemidirectElem target{t.value, t.zone == Zone::Top ? 0 : -1};
    if (gamma_embed(gamma_unembed(target)) != target || !a.contains(gamma_unembed(target))) return Failure{"surjective", t, t};
    return std::nullopt;
  });
  if (!failure) return passed("gamma", count, seed);
  const auto& w = failure->witness;
  return failed("gamma", count, seed, Json{{"sample", failure->index}, {"op", w.op}, {"x", to_json(w.x)}, {"y", to_json(w.y)}});
}

// ---------------------------------------------------------------------------
// Left triangle identity

/// The unit η at an element, evaluated at the projection ε_B(i) = πᵢ:
/// πᵢ(x) on Top and πᵢ(x^∼)⁻¹ on Bottom.
inline Vec eta_at_projection(const KiteAlgebra& a, const KiteElem& x, std::size_t i, std::size_t k) {
  const Vec& source = x.zone == Zone::Top ? x.value : a.negr(x).value;
  Vec block(source.begin() + static_cast<std::ptrdiff_t>(i * k), source.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
  return x.zone == Zone::Top ? block : vec::neg(block);
}

/// (K_{ε_B} ∘ η)(x) = x for sampled x in K_B(base).
inline CheckReport triangle_identity_check(const BCycle& b, const VecGroup& base, std::uint64_t count, std::uint64_t seed,
                                           const KiteSampler& s = {}) {
  const KiteAlgebra a = kite_over_bcycle(b, base);
  const std::size_t k = base.arity();
  auto round_trip = [&](const KiteElem& x) {
    Vec v;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Vec block = eta_at_projection(a, x, i, k);
      v.insert(v.end(), block.begin(), block.end());
    }
    return KiteElem{x.zone, std::move(v)};
  };
  for (const KiteElem& c : {a.zero(), a.one()})
    if (round_trip(c) != c) return failed("triangle", count, seed, Json{{"x", to_json(c)}});
  auto failure = run_sharded<KiteElem>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<KiteElem> {
    KiteElem x = s.element(rng, a);
    if (round_trip(x) != x) return x;
    return std::nullopt;
  });
  if (!failure) return passed("triangle", count, seed);
  return failed("triangle", count, seed,
                Json{{"sample", failure->index}, {"x", to_json(failure->witness)}, {"image", to_json(round_trip(failure->witness))}});
}

// ---------------------------------------------------------------------------
// Dimension and the dimension-0 identity

struct DimensionReport {
  std::uint64_t dimension;
  bool certified;
};

/// dim of the double-negation automorphism, recovered from the algebra and
/// cross-checked against λ on sampled elements of both zones.
inline DimensionReport dim_pmv(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed, const KiteSampler& s = {}) {
  const LAut recovered = recover_aut(a);
  const std::uint64_t dim = aut_dimension(recovered);
  bool ok = recovered == a.aut() && certify_dimension(recovered);
  auto failure = run_sharded<KiteElem>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<KiteElem> {
    KiteElem x = s.element(rng, a);
    if (kiteforge::double_tilde(a, x).value != recovered.apply(x.value)) return x;
    return std::nullopt;
  });
  return {dim, ok && !failure};
}

/// (x∨x⁻)⊙(x∨x⁻) = (x∨x⁻)^∼∼
inline std::pair<KiteElem, KiteElem> not_kite_sides(const KiteAlgebra& a, const KiteElem& x) {
  const KiteElem b = a.join(x, kiteforge::negl(a, x));
  return {a.mul(b, b), kiteforge::double_tilde(a, b)};
}

inline CheckReport not_kite_identity_check(const KiteAlgebra& a, std::uint64_t count, std::uint64_t seed,
                                           const KiteSampler& s = {}) {
  auto failure = run_sharded<KiteElem>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<KiteElem> {
    KiteElem x = s.element(rng, a);
    auto [lhs, rhs] = not_kite_sides(a, x);
    if (lhs != rhs) return x;
    return std::nullopt;
  });
  if (!failure) return passed("notkite", count, seed);
  auto [lhs, rhs] = not_kite_sides(a, failure->witness);
  return failed("notkite", count, seed,
                Json{{"sample", failure->index}, {"x", to_json(failure->witness)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
}

}  // namespace kiteforge
