#pragma once

// Finite FL_w-algebras (integral, 0-bounded residuated lattices) given by
// exact operation tables, and the filter theory built on them: conjugation
// monoids, normal-filter closure, quotients, perfectness, subdirect
// irreducibility and perfect products.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kiteforge/error.hpp"

namespace kiteforge {

/// A subset of the elements {0..63} of a finite algebra.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet of(std::initializer_list<int> elems) {
    ElemSet s;
    for (int e : elems) s.insert(e);
    return s;
  }
  static ElemSet full(int n) { return ElemSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)); }

  bool contains(int e) const { return (bits_ >> e) & 1U; }
  void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool subset_of(const ElemSet& o) const { return (bits_ & ~o.bits_) == 0; }
  ElemSet intersect(const ElemSet& o) const { return ElemSet(bits_ & o.bits_); }
  ElemSet complement(int n) const { return ElemSet(~bits_ & full(n).bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// By size, then lexicographically by sorted members.
  friend bool operator<(const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Raw operation tables, as read from a file, before validation.
struct FlwTables {
  int size = 0;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;
  std::vector<std::string> names;  // optional; empty means "0".."n-1"
};

enum class Axiom { Shape, NotALattice, NotIntegral, NotZeroBounded, NotAMonoid, NotResiduated };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Shape: return "bad-shape";
    case Axiom::NotALattice: return "not-a-lattice";
    case Axiom::NotIntegral: return "not-integral";
    case Axiom::NotZeroBounded: return "not-0-bounded";
    case Axiom::NotAMonoid: return "not-a-monoid";
    case Axiom::NotResiduated: return "not-residuated";
  }
  return "?";
}

/// First violated axiom, the law that failed, and the offending elements.
struct AxiomViolation {
  Axiom axiom;
  std::string law;
  std::vector<int> witness;

  std::string describe() const {
    std::ostringstream os;
    os << axiom_name(axiom) << ": " << law;
    if (!witness.empty()) {
      os << " (witness";
      for (int w : witness) os << ' ' << w;
      os << ')';
    }
    return os.str();
  }
};

class InvalidAlgebra : public InputError {
 public:
  explicit InvalidAlgebra(AxiomViolation v) : InputError(v.describe()), violation_(std::move(v)) {}
  const AxiomViolation& violation() const noexcept { return violation_; }

 private:
  AxiomViolation violation_;
};

inline constexpr int kMaxFiniteSize = 64;

/// Derived residual tables, flattened row-major: ldiv[x*n+z] = x\z.
struct Residuals {
  std::vector<int> ldiv;
  std::vector<int> rdiv;
};

namespace detail {

inline std::optional<AxiomViolation> check_shape(const FlwTables& t) {
  const int n = t.size;
  if (n < 1 || n > kMaxFiniteSize) return AxiomViolation{Axiom::Shape, "size must be in 1..64", {}};
  for (const auto* table : {&t.meet, &t.join, &t.mul}) {
    if (static_cast<int>(table->size()) != n) return AxiomViolation{Axiom::Shape, "table is not n x n", {}};
    for (int x = 0; x < n; ++x) {
      const auto& row = (*table)[x];
      if (static_cast<int>(row.size()) != n) return AxiomViolation{Axiom::Shape, "table is not n x n", {x}};
      for (int y = 0; y < n; ++y)
        if (row[y] < 0 || row[y] >= n) return AxiomViolation{Axiom::Shape, "table entry out of range", {x, y}};
    }
  }
  if (t.zero < 0 || t.zero >= n || t.one < 0 || t.one >= n) return AxiomViolation{Axiom::Shape, "constant out of range", {}};
  if (!t.names.empty()) {
    if (static_cast<int>(t.names.size()) != n) return AxiomViolation{Axiom::Shape, "names must list every element", {}};
    std::set<std::string> seen(t.names.begin(), t.names.end());
    if (static_cast<int>(seen.size()) != n) return AxiomViolation{Axiom::Shape, "element names must be distinct", {}};
  }
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_lattice(const FlwTables& t) {
  const int n = t.size;
  const auto& m = t.meet;
  const auto& j = t.join;
  for (int x = 0; x < n; ++x) {
    if (m[x][x] != x) return AxiomViolation{Axiom::NotALattice, "meet idempotent", {x}};
    if (j[x][x] != x) return AxiomViolation{Axiom::NotALattice, "join idempotent", {x}};
    for (int y = 0; y < n; ++y) {
      if (m[x][y] != m[y][x]) return AxiomViolation{Axiom::NotALattice, "meet commutative", {x, y}};
      if (j[x][y] != j[y][x]) return AxiomViolation{Axiom::NotALattice, "join commutative", {x, y}};
      if (m[x][j[x][y]] != x) return AxiomViolation{Axiom::NotALattice, "absorption x∧(x∨y)=x", {x, y}};
      if (j[x][m[x][y]] != x) return AxiomViolation{Axiom::NotALattice, "absorption x∨(x∧y)=x", {x, y}};
      for (int z = 0; z < n; ++z) {
        if (m[x][m[y][z]] != m[m[x][y]][z]) return AxiomViolation{Axiom::NotALattice, "meet associative", {x, y, z}};
        if (j[x][j[y][z]] != j[j[x][y]][z]) return AxiomViolation{Axiom::NotALattice, "join associative", {x, y, z}};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_bounds(const FlwTables& t) {
  for (int x = 0; x < t.size; ++x)
    if (t.meet[x][t.one] != x) return AxiomViolation{Axiom::NotIntegral, "1 is the top element", {x}};
  for (int x = 0; x < t.size; ++x)
    if (t.meet[t.zero][x] != t.zero) return AxiomViolation{Axiom::NotZeroBounded, "0 is the bottom element", {x}};
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_monoid(const FlwTables& t) {
  const int n = t.size;
  const auto& p = t.mul;
  for (int x = 0; x < n; ++x)
    if (p[x][t.one] != x || p[t.one][x] != x) return AxiomViolation{Axiom::NotAMonoid, "1 is the unit", {x}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p[x][p[y][z]] != p[p[x][y]][z]) return AxiomViolation{Axiom::NotAMonoid, "mul associative", {x, y, z}};
  return std::nullopt;
}

inline bool table_leq(const FlwTables& t, int x, int y) { return t.meet[x][y] == x; }

/// Largest y with mul(x,y) ≤ z (left) or largest y with mul(y,x) ≤ z (right).
inline std::optional<AxiomViolation> compute_residuals(const FlwTables& t, Residuals& out) {
  const int n = t.size;
  out.ldiv.assign(static_cast<std::size_t>(n) * n, 0);
  out.rdiv.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      int best_l = -1;
      int best_r = -1;
      for (int y = 0; y < n; ++y) {
        if (table_leq(t, t.mul[x][y], z) && (best_l < 0 || table_leq(t, best_l, y))) best_l = y;
        if (table_leq(t, t.mul[y][x], z) && (best_r < 0 || table_leq(t, best_r, y))) best_r = y;
      }
      for (int y = 0; y < n; ++y) {
        if (best_l < 0 || (table_leq(t, t.mul[x][y], z) && !table_leq(t, y, best_l)))
          return AxiomViolation{Axiom::NotResiduated, "no maximum of {y : x·y ≤ z}", {x, z}};
        if (best_r < 0 || (table_leq(t, t.mul[y][x], z) && !table_leq(t, y, best_r)))
          return AxiomViolation{Axiom::NotResiduated, "no maximum of {y : y·x ≤ z}", {x, z}};
      }
      out.ldiv[x * n + z] = best_l;
      // rdiv(z, x) = z/x = max{y : y·x ≤ z}
      out.rdiv[z * n + x] = best_r;
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomViolation> check_residuation(const FlwTables& t, const Residuals& r) {
  const int n = t.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const bool a = table_leq(t, y, r.ldiv[x * n + z]);
        const bool b = table_leq(t, t.mul[x][y], z);
        const bool c = table_leq(t, x, r.rdiv[z * n + y]);
        if (a != b || b != c)
          return AxiomViolation{Axiom::NotResiduated, "y ≤ x\\z ⟺ x·y ≤ z ⟺ x ≤ z/y", {x, y, z}};
      }
  return std::nullopt;
}

}  // namespace detail

/// Residual tables derived from mul and the lattice order. Throws
/// InvalidAlgebra (not-residuated) when some {y : x·y ≤ z} has no maximum.
inline Residuals residuals_from_mul(const FlwTables& t) {
  if (auto v = detail::check_shape(t)) throw InvalidAlgebra(*v);
  Residuals r;
  if (auto v = detail::compute_residuals(t, r)) throw InvalidAlgebra(*v);
  return r;
}

/// The first violated FL_w axiom, or nothing when the tables are valid.
inline std::optional<AxiomViolation> find_violation(const FlwTables& t) {
  if (auto v = detail::check_shape(t)) return v;
  if (auto v = detail::check_lattice(t)) return v;
  if (auto v = detail::check_bounds(t)) return v;
  if (auto v = detail::check_monoid(t)) return v;
  Residuals r;
  if (auto v = detail::compute_residuals(t, r)) return v;
  return detail::check_residuation(t, r);
}

/// A validated finite FL_w-algebra. Elements are indices 0..size()-1.
class FinFLw {
 public:
  using element_type = int;

  /// Validates the tables; throws InvalidAlgebra naming the first violated
  /// axiom with a witness.
  static FinFLw validate(const FlwTables& t) {
    if (auto v = find_violation(t)) throw InvalidAlgebra(*v);
    return FinFLw(t, detail_residuals(t));
  }

  int size() const { return n_; }
  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  int join(int x, int y) const { return join_[idx(x, y)]; }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  /// x\y
  int ldiv(int x, int y) const { return ldiv_[idx(x, y)]; }
  /// x/y
  int rdiv(int x, int y) const { return rdiv_[idx(x, y)]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  bool leq(int x, int y) const { return meet(x, y) == x; }
  /// x⁻ = 0/x
  int neg(int x) const { return rdiv(zero_, x); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int x) const { return names_[x]; }

  /// Element by name, falling back to a decimal index.
  std::optional<int> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<int>(it - names_.begin());
    if (!name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() < 4) {
      int v = std::stoi(name);
      if (v < n_) return v;
    }
    return std::nullopt;
  }

  FlwTables tables() const {
    FlwTables t;
    t.size = n_;
    t.zero = zero_;
    t.one = one_;
    t.names = names_;
    t.meet = rows(meet_);
    t.join = rows(join_);
    t.mul = rows(mul_);
    return t;
  }

  const std::vector<int>& meet_table() const { return meet_; }
  const std::vector<int>& mul_table() const { return mul_; }

  friend bool operator==(const FinFLw& a, const FinFLw& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.meet_ == b.meet_ && a.join_ == b.join_ &&
           a.mul_ == b.mul_;
  }

 private:
  FinFLw(const FlwTables& t, Residuals r) : n_(t.size), zero_(t.zero), one_(t.one), ldiv_(std::move(r.ldiv)), rdiv_(std::move(r.rdiv)) {
    meet_ = flatten(t.meet);
    join_ = flatten(t.join);
    mul_ = flatten(t.mul);
    names_ = t.names;
    if (names_.empty())
      for (int i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
  }

  static Residuals detail_residuals(const FlwTables& t) {
    Residuals r;
    detail::compute_residuals(t, r);
    return r;
  }

  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

  static std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
    std::vector<int> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  std::vector<std::vector<int>> rows(const std::vector<int>& flat) const {
    std::vector<std::vector<int>> out(n_);
    for (int x = 0; x < n_; ++x) out[x].assign(flat.begin() + x * n_, flat.begin() + (x + 1) * n_);
    return out;
  }

  int n_;
  int zero_;
  int one_;
  std::vector<int> meet_, join_, mul_, ldiv_, rdiv_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Conjugation

/// A unary self-map as an index array.
using UnaryMap = std::vector<int>;

/// λ_b(a) = (b\ab)∧1
inline int left_conjugate(const FinFLw& A, int b, int a) { return A.meet(A.ldiv(b, A.mul(a, b)), A.one()); }
/// ρ_b(a) = (ba/b)∧1
inline int right_conjugate(const FinFLw& A, int b, int a) { return A.meet(A.rdiv(A.mul(b, a), b), A.one()); }

/// The maps λ_b and ρ_b for every b, deduplicated, in a fixed order.
inline std::vector<UnaryMap> conjugation_generators(const FinFLw& A) {
  std::set<UnaryMap> gens;
  for (int b = 0; b < A.size(); ++b) {
    UnaryMap l(A.size()), r(A.size());
    for (int a = 0; a < A.size(); ++a) {
      l[a] = left_conjugate(A, b, a);
      r[a] = right_conjugate(A, b, a);
    }
    gens.insert(std::move(l));
    gens.insert(std::move(r));
  }
  return {gens.begin(), gens.end()};
}

/// Composition-closed set of conjugation polynomials, identity first, the rest
/// in lexicographic order of their index arrays.
class ConjMonoid {
 public:
  explicit ConjMonoid(std::vector<UnaryMap> maps) : maps_(std::move(maps)) {}

  const std::vector<UnaryMap>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }
  int apply(std::size_t alpha, int a) const { return maps_[alpha][a]; }
  bool contains(const UnaryMap& m) const { return std::find(maps_.begin(), maps_.end(), m) != maps_.end(); }

 private:
  std::vector<UnaryMap> maps_;
};

inline ConjMonoid conjugation_monoid(const FinFLw& A) {
  const int n = A.size();
  UnaryMap id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto gens = conjugation_generators(A);
  std::set<UnaryMap> seen{id};
  std::vector<UnaryMap> frontier{id};
  while (!frontier.empty()) {
    std::vector<UnaryMap> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        UnaryMap c(n);
        for (int a = 0; a < n; ++a) c[a] = g[m[a]];
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  seen.erase(id);
  std::vector<UnaryMap> maps{id};
  maps.insert(maps.end(), seen.begin(), seen.end());
  return ConjMonoid(std::move(maps));
}

// ---------------------------------------------------------------------------
// Normal filters

/// Reason a set fails to be a normal filter, if it does.
inline std::optional<std::string> normal_filter_violation(const FinFLw& A, ElemSet F) {
  const int n = A.size();
  if (!F.subset_of(ElemSet::full(n))) return "contains elements outside the algebra";
  if (!F.contains(A.one())) return "does not contain 1";
  for (int a : F.elements()) {
    for (int b = 0; b < n; ++b) {
      if (A.leq(a, b) && !F.contains(b)) return "not upward closed at " + A.name(a);
      if (F.contains(b) && !F.contains(A.mul(a, b))) return "not closed under products at " + A.name(a) + "·" + A.name(b);
      if (!F.contains(left_conjugate(A, b, a)) || !F.contains(right_conjugate(A, b, a)))
        return "not closed under conjugation of " + A.name(a) + " by " + A.name(b);
    }
  }
  return std::nullopt;
}

class NormalFilter {
 public:
  /// Throws InputError if `members` is not a normal filter of A.
  static NormalFilter make(const FinFLw& A, ElemSet members) {
    if (auto why = normal_filter_violation(A, members)) throw InputError("not a normal filter: " + *why);
    return NormalFilter(members);
  }
  static NormalFilter trivial(const FinFLw& A) { return NormalFilter(ElemSet::of({A.one()})); }
  static NormalFilter whole(const FinFLw& A) { return NormalFilter(ElemSet::full(A.size())); }

  const ElemSet& members() const { return members_; }
  bool contains(int a) const { return members_.contains(a); }
  int size() const { return members_.size(); }

  friend bool operator==(const NormalFilter&, const NormalFilter&) = default;
  friend bool operator<(const NormalFilter& a, const NormalFilter& b) { return a.members_ < b.members_; }

 private:
  explicit NormalFilter(ElemSet m) : members_(m) {}
  ElemSet members_;
};

/// Least superset of `seed` closed upward, under products, and under every
/// λ_b and ρ_b, computed by iterating to a fixpoint.
inline ElemSet closure_fixpoint(const FinFLw& A, ElemSet seed) {
  const int n = A.size();
  ElemSet cur = seed;
  cur.insert(A.one());
  for (;;) {
    ElemSet next = cur;
    for (int a : cur.elements()) {
      for (int b = 0; b < n; ++b) {
        if (A.leq(a, b)) next.insert(b);
        if (cur.contains(b)) next.insert(A.mul(a, b));
        next.insert(left_conjugate(A, b, a));
        next.insert(right_conjugate(A, b, a));
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

/// Membership characterisation of the closure F_x: a ∈ F_x iff
/// f·α₁(x)···αₖ(x) ≤ a for some f ∈ F and iterated conjugates αᵢ(x).
inline ElemSet closure_by_conjugate_products(const FinFLw& A, const NormalFilter& F, int x, const ConjMonoid& M) {
  const int n = A.size();
  ElemSet conjugates;
  for (std::size_t alpha = 0; alpha < M.size(); ++alpha) conjugates.insert(M.apply(alpha, x));
  // Products of iterated conjugates, including the empty product 1.
  ElemSet products = ElemSet::of({A.one()});
  for (;;) {
    ElemSet next = products;
    for (int p : products.elements())
      for (int c : conjugates.elements()) next.insert(A.mul(p, c));
    if (next == products) break;
    products = next;
  }
  ElemSet lower;
  for (int f : F.members().elements())
    for (int p : products.elements()) lower.insert(A.mul(f, p));
  ElemSet out;
  for (int a = 0; a < n; ++a)
    for (int l : lower.elements())
      if (A.leq(l, a)) {
        out.insert(a);
        break;
      }
  return out;
}

/// The smallest normal filter containing F ∪ {x}. Both the fixpoint closure
/// and the conjugate-product characterisation are computed and must agree.
inline NormalFilter filter_closure(const FinFLw& A, const NormalFilter& F, int x, const ConjMonoid& M) {
  if (x < 0 || x >= A.size()) throw InputError("element out of range");
  ElemSet seed = F.members();
  seed.insert(x);
  const ElemSet by_fixpoint = closure_fixpoint(A, seed);
  const ElemSet by_products = closure_by_conjugate_products(A, F, x, M);
  if (!(by_fixpoint == by_products)) throw LogicError("filter closure routes disagree");
  return NormalFilter::make(A, by_fixpoint);
}

inline NormalFilter filter_closure(const FinFLw& A, const NormalFilter& F, int x) {
  return filter_closure(A, F, x, conjugation_monoid(A));
}

/// Every normal filter of A, ordered by size and then by members. Each is the
/// closure of {1} and one element, closed further under intersection.
inline std::vector<NormalFilter> all_normal_filters(const FinFLw& A) {
  const ConjMonoid M = conjugation_monoid(A);
  const NormalFilter trivial = NormalFilter::trivial(A);
  std::set<NormalFilter> found;
  for (int x = 0; x < A.size(); ++x) found.insert(filter_closure(A, trivial, x, M));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<NormalFilter> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (found.insert(NormalFilter::make(A, cur[i].members().intersect(cur[j].members()))).second) grew = true;
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Quotients

/// A/θ_F together with the canonical projection A → A/θ_F.
struct QuotientMap {
  FinFLw algebra;
  std::vector<int> projection;
};

/// x θ_F y iff (x\y)∧1 ∈ F and (y\x)∧1 ∈ F. Classes are numbered in order of
/// their least member.
inline QuotientMap quotient_map(const FinFLw& A, const NormalFilter& F) {
  const int n = A.size();
  auto related = [&](int x, int y) {
    return F.contains(A.meet(A.ldiv(x, y), A.one())) && F.contains(A.meet(A.ldiv(y, x), A.one()));
  };
  std::vector<int> cls(n, -1);
  std::vector<int> rep;
  for (int x = 0; x < n; ++x) {
    for (int c = 0; c < static_cast<int>(rep.size()); ++c)
      if (related(x, rep[c])) {
        cls[x] = c;
        break;
      }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(rep.size());
      rep.push_back(x);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (related(x, y) != (cls[x] == cls[y])) throw LogicError("θ_F is not an equivalence relation");

  const int m = static_cast<int>(rep.size());
  FlwTables t;
  t.size = m;
  t.zero = cls[A.zero()];
  t.one = cls[A.one()];
  t.meet.assign(m, std::vector<int>(m));
  t.join.assign(m, std::vector<int>(m));
  t.mul.assign(m, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      t.meet[c][d] = cls[A.meet(rep[c], rep[d])];
      t.join[c][d] = cls[A.join(rep[c], rep[d])];
      t.mul[c][d] = cls[A.mul(rep[c], rep[d])];
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int c = cls[x], d = cls[y];
      if (cls[A.meet(x, y)] != t.meet[c][d] || cls[A.join(x, y)] != t.join[c][d] || cls[A.mul(x, y)] != t.mul[c][d] ||
          cls[A.ldiv(x, y)] != cls[A.ldiv(rep[c], rep[d])] || cls[A.rdiv(x, y)] != cls[A.rdiv(rep[c], rep[d])])
        throw LogicError("θ_F does not respect the operations");
    }
  t.names.resize(m);
  for (int c = 0; c < m; ++c) {
    std::string label = "{";
    bool first = true;
    for (int x = 0; x < n; ++x)
      if (cls[x] == c) {
        label += (first ? "" : ",") + A.name(x);
        first = false;
      }
    t.names[c] = label + "}";
  }
  return {FinFLw::validate(t), std::move(cls)};
}

inline FinFLw quotient(const FinFLw& A, const NormalFilter& F) { return quotient_map(A, F).algebra; }

// ---------------------------------------------------------------------------
// Subalgebras

inline bool is_subuniverse(const FinFLw& A, ElemSet S) {
  if (!S.contains(A.zero()) || !S.contains(A.one())) return false;
  for (int x : S.elements())
    for (int y : S.elements())
      if (!S.contains(A.meet(x, y)) || !S.contains(A.join(x, y)) || !S.contains(A.mul(x, y)) ||
          !S.contains(A.ldiv(x, y)) || !S.contains(A.rdiv(x, y)))
        return false;
  return true;
}

/// The subalgebra on S, renumbered in increasing order of original index.
inline FinFLw subalgebra(const FinFLw& A, ElemSet S) {
  if (!is_subuniverse(A, S)) throw InputError("not a subuniverse");
  const auto elems = S.elements();
  std::vector<int> pos(A.size(), -1);
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  const int m = static_cast<int>(elems.size());
  FlwTables t;
  t.size = m;
  t.zero = pos[A.zero()];
  t.one = pos[A.one()];
  t.meet.assign(m, std::vector<int>(m));
  t.join.assign(m, std::vector<int>(m));
  t.mul.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      t.meet[i][j] = pos[A.meet(elems[i], elems[j])];
      t.join[i][j] = pos[A.join(elems[i], elems[j])];
      t.mul[i][j] = pos[A.mul(elems[i], elems[j])];
    }
  for (int e : elems) t.names.push_back(A.name(e));
  return FinFLw::validate(t);
}

/// All subuniverses of A (every one contains 0 and 1).
inline std::vector<ElemSet> all_subuniverses(const FinFLw& A) {
  std::vector<int> middle;
  for (int x = 0; x < A.size(); ++x)
    if (x != A.zero() && x != A.one()) middle.push_back(x);
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle.size()); ++mask) {
    ElemSet S = ElemSet::of({A.zero(), A.one()});
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((mask >> i) & 1U) S.insert(middle[i]);
    if (is_subuniverse(A, S)) out.push_back(S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Perfectness

/// The fibres of the homomorphism onto 2: J = h⁻¹(0), F = h⁻¹(1).
struct PerfectSplit {
  ElemSet ideal;
  NormalFilter filter;
};

/// Every normal filter F whose complement J is a lattice ideal lying entirely
/// below F and for which A/F is the two-element algebra.
inline std::vector<PerfectSplit> perfect_splits(const FinFLw& A) {
  std::vector<PerfectSplit> out;
  const int n = A.size();
  for (const auto& F : all_normal_filters(A)) {
    const ElemSet J = F.members().complement(n);
    if (J.empty()) continue;
    bool ok = true;
    for (int j : J.elements()) {
      for (int y = 0; y < n && ok; ++y) {
        if (A.leq(y, j) && !J.contains(y)) ok = false;
        if (J.contains(y) && !J.contains(A.join(j, y))) ok = false;
      }
      for (int f : F.members().elements())
        if (!A.leq(j, f)) ok = false;
    }
    if (!ok) continue;
    if (quotient(A, F).size() != 2) continue;
    out.push_back({J, F});
  }
  return out;
}

/// The split witnessing that A is perfect, if there is one. At most one can
/// exist; finding two is reported as a LogicError.
inline std::optional<PerfectSplit> is_perfect(const FinFLw& A) {
  if (A.size() < 2) throw InputError("the one-element algebra is not perfect");
  auto splits = perfect_splits(A);
  if (splits.size() > 1) throw LogicError("perfect algebra with two distinct homomorphisms onto 2");
  if (splits.empty()) return std::nullopt;
  return splits.front();
}

/// True iff the normal filters other than {1} have a least element.
inline bool is_subdirectly_irreducible(const FinFLw& A) {
  if (A.size() < 2) return false;
  const auto filters = all_normal_filters(A);
  const NormalFilter trivial = NormalFilter::trivial(A);
  for (const auto& cand : filters) {
    if (cand == trivial) continue;
    bool least = true;
    for (const auto& other : filters)
      if (!(other == trivial) && !cand.members().subset_of(other.members())) least = false;
    if (least) return true;
  }
  return false;
}

/// Proper normal filters G for which A/G is subdirectly irreducible: the
/// filters strictly above G have a least element.
inline std::vector<NormalFilter> completely_meet_irreducible_filters(const FinFLw& A) {
  const auto filters = all_normal_filters(A);
  std::vector<NormalFilter> out;
  for (const auto& G : filters) {
    if (G.size() == A.size()) continue;
    std::vector<const NormalFilter*> above;
    for (const auto& H : filters)
      if (G.members().subset_of(H.members()) && !(G == H)) above.push_back(&H);
    for (const auto* cand : above) {
      bool least = std::all_of(above.begin(), above.end(),
                               [&](const NormalFilter* h) { return cand->members().subset_of(h->members()); });
      if (least) {
        out.push_back(G);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities characterising perfectly generated varieties

struct PerfgenWitness {
  int identity;  // 1, 2 or 3
  int x;
  int y = -1;
  int alpha = -1;  // index into the conjugation monoid
  int beta = -1;
};

struct PerfgenResult {
  bool holds;
  std::optional<PerfgenWitness> witness;
};

/// Checks, for all conjugation polynomials α, β and all x, y:
///   (1) α(x/x⁻) ∨ β(x⁻/x) = 1
///   (2) α((x∨x⁻)(y∨y⁻))⁻ ≤ α((x∨x⁻)(y∨y⁻))
///   (3) x∧x⁻ ≤ y∨y⁻
inline std::optional<PerfgenWitness> perfgen_identity_witness(const FinFLw& A, const ConjMonoid& M, int identity) {
  const int n = A.size();
  // Distinct values α(a), each with the first α producing it.
  auto orbit = [&](int a) {
    std::map<int, int> vals;
    for (std::size_t alpha = 0; alpha < M.size(); ++alpha) vals.emplace(M.apply(alpha, a), static_cast<int>(alpha));
    return vals;
  };
  switch (identity) {
    case 1:
      for (int x = 0; x < n; ++x) {
        const int xn = A.neg(x);
        const auto left = orbit(A.rdiv(x, xn));
        const auto right = orbit(A.rdiv(xn, x));
        for (const auto& [u, alpha] : left)
          for (const auto& [v, beta] : right)
            if (A.join(u, v) != A.one()) return PerfgenWitness{1, x, -1, alpha, beta};
      }
      return std::nullopt;
    case 2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int p = A.mul(A.join(x, A.neg(x)), A.join(y, A.neg(y)));
          for (const auto& [q, alpha] : orbit(p))
            if (!A.leq(A.neg(q), q)) return PerfgenWitness{2, x, y, alpha, -1};
        }
      return std::nullopt;
    case 3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!A.leq(A.meet(x, A.neg(x)), A.join(y, A.neg(y)))) return PerfgenWitness{3, x, y};
      return std::nullopt;
  }
  throw InputError("identity number must be 1, 2 or 3");
}

inline PerfgenResult check_perfgen_identities(const FinFLw& A, const ConjMonoid& M) {
  for (int identity = 1; identity <= 3; ++identity)
    if (auto w = perfgen_identity_witness(A, M, identity)) return {false, w};
  return {true, std::nullopt};
}

inline PerfgenResult check_perfgen_identities(const FinFLw& A) { return check_perfgen_identities(A, conjugation_monoid(A)); }

struct PerfgenOracle {
  bool identities_hold;
  bool si_quotients_perfect;
  bool agree() const { return identities_hold == si_quotients_perfect; }
};

/// Compares the identity check with the structural criterion: every
/// subdirectly irreducible quotient of A is perfect.
inline PerfgenOracle perfgen_oracle(const FinFLw& A) {
  PerfgenOracle out{check_perfgen_identities(A).holds, true};
  for (const auto& G : completely_meet_irreducible_filters(A))
    if (!is_perfect(quotient(A, G))) {
      out.si_quotients_perfect = false;
      break;
    }
  return out;
}

inline bool perfgen_oracle_agree(const FinFLw& A) { return perfgen_oracle(A).agree(); }

// ---------------------------------------------------------------------------
// Perfect products

/// The subalgebra of ∏Aᵢ of tuples lying entirely in the filters Fᵢ or
/// entirely in the ideals Jᵢ. Tuples are numbered in lexicographic order.
inline FinFLw perfect_product(const std::vector<FinFLw>& factors) {
  if (factors.empty()) throw InputError("perfect product of no factors");
  std::vector<PerfectSplit> splits;
  for (const auto& A : factors) {
    auto s = A.size() >= 2 ? is_perfect(A) : std::nullopt;
    if (!s) throw InputError("perfect product factor is not perfect");
    splits.push_back(*s);
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(k, 0);
  for (;;) {
    bool all_f = true, all_j = true;
    for (std::size_t i = 0; i < k; ++i) {
      const bool in_f = splits[i].filter.contains(cur[i]);
      all_f = all_f && in_f;
      all_j = all_j && !in_f;
    }
    if (all_f || all_j) tuples.push_back(cur);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++cur[i] < factors[i].size()) break;
      cur[i] = 0;
      if (i == 0) {
        i = k + 1;
        break;
      }
    }
    if (i == k + 1) break;
  }
  const int m = static_cast<int>(tuples.size());
  if (m > kMaxFiniteSize) throw InputError("perfect product too large");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[tuples[i]] = i;
  auto lift = [&](auto op, int a, int b) {
    std::vector<int> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = op(factors[i], tuples[a][i], tuples[b][i]);
    auto it = index.find(t);
    if (it == index.end()) throw LogicError("perfect product not closed");
    return it->second;
  };
  FlwTables t;
  t.size = m;
  t.meet.assign(m, std::vector<int>(m));
  t.join.assign(m, std::vector<int>(m));
  t.mul.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t.meet[a][b] = lift([](const FinFLw& A, int x, int y) { return A.meet(x, y); }, a, b);
      t.join[a][b] = lift([](const FinFLw& A, int x, int y) { return A.join(x, y); }, a, b);
      t.mul[a][b] = lift([](const FinFLw& A, int x, int y) { return A.mul(x, y); }, a, b);
      lift([](const FinFLw& A, int x, int y) { return A.ldiv(x, y); }, a, b);
      lift([](const FinFLw& A, int x, int y) { return A.rdiv(x, y); }, a, b);
    }
  std::vector<int> zero(k), one(k);
  for (std::size_t i = 0; i < k; ++i) {
    zero[i] = factors[i].zero();
    one[i] = factors[i].one();
  }
  t.zero = index.at(zero);
  t.one = index.at(one);
  for (const auto& tup : tuples) {
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + factors[i].name(tup[i]);
    t.names.push_back(label + ")");
  }
  FinFLw out = FinFLw::validate(t);
  if (!is_perfect(out)) throw LogicError("perfect product is not perfect");
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

/// Tables relabelled so that 0 ↦ 0 and 1 ↦ n-1, choosing the lexicographically
/// least (meet, mul) table pair over all relabellings of the other elements.
struct CanonicalForm {
  int size = 0;
  std::vector<int> meet;
  std::vector<int> mul;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonical_form(const FinFLw& A) {
  const int n = A.size();
  if (n > 10) throw InputError("canonical form supports algebras of size at most 10");
  std::vector<int> middle;
  for (int x = 0; x < n; ++x)
    if (x != A.zero() && x != A.one()) middle.push_back(x);
  std::sort(middle.begin(), middle.end());
  std::optional<CanonicalForm> best;
  std::vector<int> label(n);
  CanonicalForm cand;
  cand.size = n;
  cand.meet.resize(static_cast<std::size_t>(n) * n);
  cand.mul.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> inverse(n);
  do {
    if (n == 1) {
      label[0] = 0;
    } else {
      label[A.zero()] = 0;
      label[A.one()] = n - 1;
      for (std::size_t i = 0; i < middle.size(); ++i) label[middle[i]] = static_cast<int>(i) + 1;
    }
    for (int x = 0; x < n; ++x) inverse[label[x]] = x;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        cand.meet[a * n + b] = label[A.meet(inverse[a], inverse[b])];
        cand.mul[a * n + b] = label[A.mul(inverse[a], inverse[b])];
      }
    if (!best || cand < *best) best = cand;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return *best;
}

inline bool isomorphic(const FinFLw& A, const FinFLw& B) {
  return A.size() == B.size() && canonical_form(A) == canonical_form(B);
}

/// FNV-1a over the canonical tables.
inline std::uint64_t canonical_hash(const CanonicalForm& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](int v) {
    h ^= static_cast<std::uint64_t>(v & 0xff);
    h *= 0x100000001b3ULL;
  };
  mix(c.size);
  for (int v : c.meet) mix(v);
  for (int v : c.mul) mix(v);
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
  return s;
}

/// Rebuilds an algebra from canonical tables; join is the lattice dual of meet.
inline FinFLw from_canonical(const CanonicalForm& c) {
  const int n = c.size;
  FlwTables t;
  t.size = n;
  t.zero = 0;
  t.one = n - 1;
  t.meet.assign(n, std::vector<int>(n));
  t.mul.assign(n, std::vector<int>(n));
  t.join.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.meet[a][b] = c.meet[a * n + b];
      t.mul[a][b] = c.mul[a * n + b];
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // least upper bound in the order x ≤ y iff meet(x,y) = x
      int best = -1;
      for (int u = 0; u < n; ++u)
        if (t.meet[a][u] == a && t.meet[b][u] == b && (best < 0 || t.meet[u][best] == u)) best = u;
      t.join[a][b] = best < 0 ? 0 : best;
    }
  return FinFLw::validate(t);
}

}  // namespace kiteforge
