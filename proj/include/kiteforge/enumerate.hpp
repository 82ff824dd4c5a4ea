#pragma once

// Isomorph-free enumeration of finite FL_w-algebras.
//
// For each bounded lattice of the requested size (0 at index 0, 1 at index
// n-1) the multiplication of the middle elements is found by backtracking
// under the constraints 1 is the unit, 0 is absorbing, xy ≤ x∧y, monotonicity,
// preservation of binary joins in each argument, and associativity. On a
// finite lattice these make the multiplication residuated. Results are
// deduplicated by canonical form and returned in canonical order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "kiteforge/error.hpp"
#include "kiteforge/finalg.hpp"
#include "kiteforge/report.hpp"
#include "kiteforge/sampling.hpp"

namespace kiteforge {

inline constexpr int kMaxEnumerationSize = 6;

/// A bounded lattice on {0..n-1} with bottom 0 and top n-1, as order matrix.
struct BoundedLattice {
  int size;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
};

namespace detail {

inline std::optional<BoundedLattice> lattice_from_order(int n, const std::vector<std::vector<bool>>& leq) {
  BoundedLattice l{n, leq, std::vector<std::vector<int>>(n, std::vector<int>(n)), std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int glb = -1, lub = -1;
      for (int z = 0; z < n; ++z) {
        if (leq[z][x] && leq[z][y] && (glb < 0 || leq[glb][z])) glb = z;
        if (leq[x][z] && leq[y][z] && (lub < 0 || leq[z][lub])) lub = z;
      }
      for (int z = 0; z < n; ++z) {
        if (leq[z][x] && leq[z][y] && !leq[z][glb]) return std::nullopt;
        if (leq[x][z] && leq[y][z] && !leq[lub][z]) return std::nullopt;
      }
      l.meet[x][y] = glb;
      l.join[x][y] = lub;
    }
  return l;
}

/// Order matrix relabelled so that middle element i becomes perm[i].
inline std::vector<std::vector<bool>> relabel_order(const std::vector<std::vector<bool>>& leq, const std::vector<int>& label) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[label[x]][label[y]] = leq[x][y];
  return out;
}

class MulSearch {
 public:
  explicit MulSearch(const BoundedLattice& l) : l_(l), n_(l.size), mul_(n_, std::vector<int>(n_, -1)) {
    for (int x = 0; x < n_; ++x) {
      mul_[x][n_ - 1] = mul_[n_ - 1][x] = x;
      mul_[x][0] = mul_[0][x] = 0;
    }
    for (int x = 1; x < n_ - 1; ++x)
      for (int y = 1; y < n_ - 1; ++y) cells_.emplace_back(x, y);
  }

  std::vector<FlwTables> run() {
    if (consistent()) search(0);
    return std::move(found_);
  }

 private:
  bool le(int a, int b) const { return l_.leq[a][b]; }

  bool consistent() const {
    const auto& m = mul_;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = m[a][b];
        if (ab < 0) continue;
        if (!le(ab, l_.meet[a][b])) return false;
        for (int c = 0; c < n_; ++c) {
          // monotone in the second argument
          if (le(b, c) && m[a][c] >= 0 && !le(ab, m[a][c])) return false;
          // monotone in the first argument
          if (le(a, c) && m[c][b] >= 0 && !le(ab, m[c][b])) return false;
          // a(b∨c) = ab ∨ ac
          const int bc_join = l_.join[b][c];
          if (m[a][c] >= 0 && m[a][bc_join] >= 0 && m[a][bc_join] != l_.join[ab][m[a][c]]) return false;
          // (a∨c)b = ab ∨ cb
          const int ac_join = l_.join[a][c];
          if (m[c][b] >= 0 && m[ac_join][b] >= 0 && m[ac_join][b] != l_.join[ab][m[c][b]]) return false;
          // (ab)c = a(bc)
          const int bc = m[b][c];
          if (bc >= 0 && m[ab][c] >= 0 && m[a][bc] >= 0 && m[ab][c] != m[a][bc]) return false;
        }
      }
    return true;
  }

  void search(std::size_t k) {
    if (k == cells_.size()) {
      FlwTables t;
      t.size = n_;
      t.zero = 0;
      t.one = n_ - 1;
      t.meet = l_.meet;
      t.join = l_.join;
      t.mul = mul_;
      found_.push_back(std::move(t));
      return;
    }
    const auto [x, y] = cells_[k];
    for (int v = 0; v < n_; ++v) {
      if (!le(v, l_.meet[x][y])) continue;
      mul_[x][y] = v;
      if (consistent()) search(k + 1);
    }
    mul_[x][y] = -1;
  }

  const BoundedLattice& l_;
  int n_;
  std::vector<std::vector<int>> mul_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<FlwTables> found_;
};

}  // namespace detail

/// All bounded lattices of size n up to isomorphism, in a fixed order.
inline std::vector<BoundedLattice> bounded_lattices(int n) {
  if (n < 1) throw InputError("lattice size must be positive");
  if (n == 1) return {BoundedLattice{1, {{true}}, {{0}}, {{0}}}};
  const int m = n - 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
  std::uint64_t combos = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) combos *= 3;

  std::map<std::vector<std::vector<bool>>, BoundedLattice> by_canonical;
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) {
      leq[x][x] = true;
      leq[0][x] = true;
      leq[x][n - 1] = true;
    }
    std::uint64_t c = code;
    for (auto [i, j] : pairs) {
      const int r = static_cast<int>(c % 3);
      c /= 3;
      if (r == 1) leq[i][j] = true;
      if (r == 2) leq[j][i] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int d = 0; d < n && transitive; ++d)
          if (leq[a][b] && leq[b][d] && !leq[a][d]) transitive = false;
    if (!transitive) continue;
    auto lattice = detail::lattice_from_order(n, leq);
    if (!lattice) continue;
    std::vector<int> middle(m);
    std::iota(middle.begin(), middle.end(), 1);
    std::optional<std::vector<std::vector<bool>>> best;
    do {
      std::vector<int> label(n);
      label[0] = 0;
      label[n - 1] = n - 1;
      for (int i = 0; i < m; ++i) label[i + 1] = middle[i];
      auto relabelled = detail::relabel_order(leq, label);
      if (!best || relabelled < *best) best = relabelled;
    } while (std::next_permutation(middle.begin(), middle.end()));
    if (!by_canonical.count(*best)) by_canonical.emplace(*best, *detail::lattice_from_order(n, *best));
  }
  std::vector<BoundedLattice> out;
  for (auto& [key, l] : by_canonical) out.push_back(std::move(l));
  return out;
}

/// Every FL_w-algebra of size n (2 ≤ n ≤ 6) up to isomorphism, sorted by
/// canonical form. The search is split by lattice across worker threads and
/// merged deterministically.
inline std::vector<FinFLw> enumerate_flw(int n) {
  if (n < 2 || n > kMaxEnumerationSize) throw InputError("enumeration size must be between 2 and 6");
  const auto lattices = bounded_lattices(n);
  std::vector<std::vector<CanonicalForm>> per_lattice(lattices.size());
  parallel_for(lattices.size(), [&](std::size_t i) {
    std::set<CanonicalForm> seen;
    for (const auto& t : detail::MulSearch(lattices[i]).run()) seen.insert(canonical_form(FinFLw::validate(t)));
    per_lattice[i].assign(seen.begin(), seen.end());
  });
  std::set<CanonicalForm> all;
  for (const auto& forms : per_lattice) all.insert(forms.begin(), forms.end());
  std::vector<FinFLw> out;
  out.reserve(all.size());
  for (const auto& c : all) out.push_back(from_canonical(c));
  return out;
}

/// {"<size>": {"count": c, "hashes": [...]}, ...}
inline Json corpus_lock_json(const std::map<int, std::vector<FinFLw>>& corpus) {
  Json out = Json::object();
  for (const auto& [size, algebras] : corpus) {
    Json hashes = Json::array();
    for (const auto& a : algebras) hashes.push_back(hash_hex(canonical_hash(canonical_form(a))));
    out[std::to_string(size)] = Json{{"count", algebras.size()}, {"hashes", hashes}};
  }
  return out;
}

}  // namespace kiteforge
