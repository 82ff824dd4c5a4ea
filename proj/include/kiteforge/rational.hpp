#pragma once

// Exact rationals and k-vectors of rationals with the pointwise lattice order.
// Vectors are written additively: the group unit e is the zero vector.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kiteforge/error.hpp"

namespace kiteforge {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string format_rational(const Rational& r) { return r.get_str(); }

/// Parses `p` or `p/q` with optional sign; the result is reduced.
inline Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.empty()) throw ParseError("empty rational", 0);
  std::size_t i = 0;
  if (trimmed[i] == '+' || trimmed[i] == '-') ++i;
  std::size_t digits = 0;
  bool slash = false;
  std::size_t den_digits = 0;
  for (; i < trimmed.size(); ++i) {
    char c = trimmed[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits)++;
    } else if (c == '/' && !slash) {
      slash = true;
    } else {
      throw ParseError("invalid character '" + std::string(1, c) + "' in rational", i);
    }
  }
  if (digits == 0 || (slash && den_digits == 0)) throw ParseError("malformed rational '" + std::string(trimmed) + "'", 0);
  std::string s(trimmed);
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
  if (r.get_den() == 0) throw InputError("rational with zero denominator");
  r.canonicalize();
  return r;
}

namespace vec {

inline Vec zeros(std::size_t k) { return Vec(k, Rational(0)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec meet(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline Vec join(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// x ∧ e
inline Vec meet_e(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < 0 ? a[i] : Rational(0);
  return r;
}

/// x ∨ e
inline Vec join_e(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? a[i] : Rational(0);
  return r;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_negative_cone(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r <= 0; });
}

inline bool is_positive_cone(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r >= 0; });
}

inline bool is_integral(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.get_den() == 1; });
}

}  // namespace vec

/// `[p/q, ...]`
inline std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  out += "]";
  return out;
}

inline Vec parse_vec(std::string_view text) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("vector must be written as [a, b, ...]", 0);
  for (std::size_t i = 0; i < open; ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected text before '['", i);
  for (std::size_t i = close + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected text after ']'", i);
  auto body = text.substr(open + 1, close - open - 1);
  Vec out;
  std::size_t start = 0;
  bool only_space = std::all_of(body.begin(), body.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (only_space) return out;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad vector entry: ") + e.what(), open + 1 + start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace kiteforge
