#pragma once

// The divisibility lattice 𝔻 (0 on top), dimensions of kite families, and
// the lattice 1 ⊕ (Λ × 𝔻) of kite-generated varieties for a finite label
// lattice Λ.

#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kiteforge/error.hpp"
#include "kiteforge/kite_checks.hpp"
#include "kiteforge/report.hpp"
#include "kiteforge/spec.hpp"

namespace kiteforge {

/// n ≤ m iff n divides m; 0 is divisible by everything and so is the top.
inline bool div_leq(std::uint64_t n, std::uint64_t m) { return n == 0 ? m == 0 : m % n == 0; }

/// gcd, with gcd(n, 0) = n.
inline std::uint64_t div_meet(std::uint64_t n, std::uint64_t m) { return std::gcd(n, m); }

/// lcm, with lcm(n, 0) = 0.
inline std::uint64_t div_join(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) return 0;
  const std::uint64_t g = std::gcd(n, m);
  if (n / g > std::numeric_limits<std::uint64_t>::max() / m) throw InputError("lcm overflows 64 bits");
  return n / g * m;
}

/// Join of a list of dimensions; the empty join is 1.
inline std::uint64_t dims_lcm(const std::vector<std::uint64_t>& dims) {
  std::uint64_t acc = 1;
  for (std::uint64_t d : dims) acc = div_join(acc, d);
  return acc;
}

/// A finite bounded lattice of variety labels given by its order.
class LabelLattice {
 public:
  LabelLattice(std::vector<std::string> elems, std::vector<std::vector<bool>> leq)
      : elems_(std::move(elems)), leq_(std::move(leq)) {
    const std::size_t n = elems_.size();
    if (n == 0) throw InputError("label lattice needs at least one element");
    if (leq_.size() != n) throw InputError("label order must be an n x n table");
    for (const auto& row : leq_)
      if (row.size() != n) throw InputError("label order must be an n x n table");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (elems_[i] == elems_[j]) throw InputError("label names must be distinct");
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq_[a][a]) throw InputError("label order is not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a]) throw InputError("label order is not antisymmetric");
        for (std::size_t c = 0; c < n; ++c)
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw InputError("label order is not transitive");
      }
    }
    meet_.assign(n, std::vector<std::size_t>(n));
    join_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        meet_[a][b] = bound(a, b, true);
        join_[a][b] = bound(a, b, false);
      }
  }

  /// Abelian below all ℓ-groups.
  static std::shared_ptr<const LabelLattice> default_chain() {
    static const auto chain = std::make_shared<const LabelLattice>(
        std::vector<std::string>{"Ab", "All"}, std::vector<std::vector<bool>>{{true, true}, {false, true}});
    return chain;
  }

  std::size_t size() const { return elems_.size(); }
  const std::string& name(std::size_t i) const { return elems_.at(i); }
  std::size_t index(std::string_view name) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i] == name) return i;
    throw InputError("unknown variety label '" + std::string(name) + "'");
  }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }

  friend bool operator==(const LabelLattice& a, const LabelLattice& b) { return a.elems_ == b.elems_ && a.leq_ == b.leq_; }

 private:
  std::size_t bound(std::size_t a, std::size_t b, bool lower) const {
    const std::size_t n = elems_.size();
    auto below = [&](std::size_t x, std::size_t y) { return lower ? leq_[x][y] : leq_[y][x]; };
    std::size_t best = n;
    for (std::size_t z = 0; z < n; ++z)
      if (below(z, a) && below(z, b) && (best == n || below(best, z))) best = z;
    if (best == n) throw InputError(std::string("label order has no ") + (lower ? "meet" : "join") + " of " + elems_[a] + " and " + elems_[b]);
    for (std::size_t z = 0; z < n; ++z)
      if (below(z, a) && below(z, b) && (best == n || !below(z, best)))
        throw InputError(std::string("label order has no ") + (lower ? "meet" : "join") + " of " + elems_[a] + " and " + elems_[b]);
    return best;
  }

  std::vector<std::string> elems_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::vector<std::size_t>> join_;
};

/// {"elems": [...], "leq": [[bool]]}
inline std::shared_ptr<const LabelLattice> label_lattice_from_json(const Json& j) {
  try {
    return std::make_shared<const LabelLattice>(j.at("elems").get<std::vector<std::string>>(),
                                                j.at("leq").get<std::vector<std::vector<bool>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed label lattice: ") + e.what());
  }
}

/// A point of 1 ⊕ (Λ × 𝔻): the Boolean variety below everything, or a pair
/// (label, n) ordered componentwise.
class KiteVarietyPoint {
 public:
  static KiteVarietyPoint boolean(std::shared_ptr<const LabelLattice> labels) {
    return KiteVarietyPoint(std::move(labels), true, 0, 0);
  }
  static KiteVarietyPoint pair(std::shared_ptr<const LabelLattice> labels, std::size_t label, std::uint64_t n) {
    if (label >= labels->size()) throw InputError("label index out of range");
    return KiteVarietyPoint(std::move(labels), false, label, n);
  }

  bool is_boolean() const { return boolean_; }
  std::size_t label() const { return label_; }
  std::uint64_t dimension() const { return n_; }
  const LabelLattice& labels() const { return *labels_; }

  std::string to_string() const {
    if (boolean_) return "BA";
    return "(" + labels_->name(label_) + "," + std::to_string(n_) + ")";
  }

  friend bool operator==(const KiteVarietyPoint& a, const KiteVarietyPoint& b) {
    return *a.labels_ == *b.labels_ && a.boolean_ == b.boolean_ && (a.boolean_ || (a.label_ == b.label_ && a.n_ == b.n_));
  }

  friend bool kv_leq(const KiteVarietyPoint& a, const KiteVarietyPoint& b) {
    same_lattice(a, b);
    if (a.boolean_) return true;
    if (b.boolean_) return false;
    return a.labels_->leq(a.label_, b.label_) && div_leq(a.n_, b.n_);
  }

  friend KiteVarietyPoint kv_join(const KiteVarietyPoint& a, const KiteVarietyPoint& b) {
    same_lattice(a, b);
    if (a.boolean_) return b;
    if (b.boolean_) return a;
    return pair(a.labels_, a.labels_->join(a.label_, b.label_), div_join(a.n_, b.n_));
  }

  friend KiteVarietyPoint kv_meet(const KiteVarietyPoint& a, const KiteVarietyPoint& b) {
    same_lattice(a, b);
    if (a.boolean_) return a;
    if (b.boolean_) return b;
    return pair(a.labels_, a.labels_->meet(a.label_, b.label_), div_meet(a.n_, b.n_));
  }

 private:
  KiteVarietyPoint(std::shared_ptr<const LabelLattice> labels, bool boolean, std::size_t label, std::uint64_t n)
      : labels_(std::move(labels)), boolean_(boolean), label_(label), n_(n) {}

  static void same_lattice(const KiteVarietyPoint& a, const KiteVarietyPoint& b) {
    if (a.labels_ != b.labels_ && !(*a.labels_ == *b.labels_)) throw InputError("variety points use different label lattices");
  }

  std::shared_ptr<const LabelLattice> labels_;
  bool boolean_;
  std::size_t label_;
  std::uint64_t n_;
};

bool kv_leq(const KiteVarietyPoint& a, const KiteVarietyPoint& b);
KiteVarietyPoint kv_join(const KiteVarietyPoint& a, const KiteVarietyPoint& b);
KiteVarietyPoint kv_meet(const KiteVarietyPoint& a, const KiteVarietyPoint& b);

/// `BA` or `(label, n)`.
inline KiteVarietyPoint parse_variety_point(std::string_view text, std::shared_ptr<const LabelLattice> labels) {
  text = detail::trim(text);
  if (text == "BA") return KiteVarietyPoint::boolean(std::move(labels));
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') throw ParseError("variety point must be BA or (label,n)", 0);
  const auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.rfind(',');
  if (comma == std::string_view::npos) throw ParseError("variety point must be BA or (label,n)", 0);
  const std::size_t label = labels->index(detail::trim(inner.substr(0, comma)));
  const std::uint64_t n = detail::parse_count(inner.substr(comma + 1), "dimension");
  return KiteVarietyPoint::pair(std::move(labels), label, n);
}

/// 𝔻-join of dim_pmv over the kites named by the specs.
inline std::uint64_t dim_of_kite_family(const std::vector<std::string>& specs, std::uint64_t certify_samples = 64,
                                        std::uint64_t seed = 0) {
  std::vector<std::uint64_t> dims;
  for (const auto& s : specs) {
    const auto report = dim_pmv(parse_kite_spec(s).algebra, certify_samples, seed);
    if (!report.certified) throw LogicError("dimension of " + s + " could not be certified");
    dims.push_back(report.dimension);
  }
  return dims_lcm(dims);
}

}  // namespace kiteforge
