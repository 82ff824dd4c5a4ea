#pragma once

// Text specifications for automorphisms, B-cycles and kites.
//
//   automorphism  perm:(0 1)(2);scale:1,2/3   (either part may be omitted)
//   B-cycle       zn:6 | cycles:2,3
//   kite          kite{group:Q^2; aut:perm:(0 1)}
//                 kite{bcycle:cycles:2,3; base:Z}
//                 zn:6 | cycles:2,3             (a kite over Z)

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kiteforge/bcycle.hpp"
#include "kiteforge/error.hpp"
#include "kiteforge/kite.hpp"
#include "kiteforge/lgrp.hpp"
#include "kiteforge/rational.hpp"

namespace kiteforge {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

inline std::size_t parse_count(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || s.size() > 9) throw ParseError(std::string("expected a ") + what, 0);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("expected a ") + what, 0);
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// Cycles written as (0 1)(2 3 4); returns the explicit cycles.
inline std::vector<std::vector<std::size_t>> parse_cycles(std::string_view s) {
  std::vector<std::vector<std::size_t>> out;
  s = trim(s);
  while (!s.empty()) {
    if (s.front() != '(') throw ParseError("expected '(' in permutation", 0);
    const auto close = s.find(')');
    if (close == std::string_view::npos) throw ParseError("unclosed cycle in permutation", 0);
    std::vector<std::size_t> cyc;
    std::string_view body = s.substr(1, close - 1);
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
      const std::size_t start = i;
      while (i < body.size() && body[i] != ' ' && body[i] != ',') ++i;
      if (i > start) cyc.push_back(parse_count(body.substr(start, i - start), "point index"));
    }
    if (cyc.empty()) throw ParseError("empty cycle in permutation", 0);
    out.push_back(std::move(cyc));
    s = trim(s.substr(close + 1));
  }
  return out;
}

}  // namespace detail

/// Parses an automorphism spec. The arity is `arity` when given, otherwise
/// the least one covering every index and scale mentioned; unmentioned points
/// are fixed and unmentioned scales are 1.
inline LAut parse_aut_spec(std::string_view text, std::optional<std::size_t> arity = std::nullopt) {
  std::vector<std::vector<std::size_t>> cycles;
  Vec scales;
  for (auto part : detail::split(detail::trim(text), ';')) {
    if (part.empty()) continue;
    if (detail::starts_with(part, "perm:")) {
      cycles = detail::parse_cycles(part.substr(5));
    } else if (detail::starts_with(part, "scale:")) {
      for (auto piece : detail::split(part.substr(6), ',')) scales.push_back(parse_rational(piece));
    } else {
      throw ParseError("automorphism spec parts are perm:... and scale:...", 0);
    }
  }
  std::size_t k = scales.size();
  for (const auto& cyc : cycles)
    for (std::size_t p : cyc) k = std::max(k, p + 1);
  if (arity) {
    if (k > *arity) throw InputError("automorphism spec mentions more coordinates than the group has");
    k = *arity;
  }
  if (k == 0) throw InputError("automorphism spec has no coordinates");
  if (!scales.empty() && scales.size() != k) throw InputError("scale list must give one scale per coordinate");
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::vector<bool> used(k, false);
  for (const auto& cyc : cycles)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (used[cyc[j]]) throw InputError("point repeated in permutation");
      used[cyc[j]] = true;
      perm[cyc[j]] = cyc[(j + 1) % cyc.size()];
    }
  if (scales.empty()) scales.assign(k, Rational(1));
  return LAut(std::move(perm), std::move(scales));
}

inline BCycle parse_bcycle_spec(std::string_view text) {
  text = detail::trim(text);
  if (detail::starts_with(text, "zn:")) return z_n(detail::parse_count(text.substr(3), "cycle length"));
  if (detail::starts_with(text, "cycles:")) {
    std::vector<std::size_t> lengths;
    for (auto piece : detail::split(text.substr(7), ',')) lengths.push_back(detail::parse_count(piece, "cycle length"));
    return bc_from_cycle_type(lengths);
  }
  throw ParseError("B-cycle spec must be zn:<n> or cycles:<l1>,<l2>,...", 0);
}

inline VecGroup parse_group_spec(std::string_view text) {
  text = detail::trim(text);
  if (text == "Q" || text == "Z") return text == "Q" ? VecGroup::rationals(1) : VecGroup::integers(1);
  if (text.size() >= 3 && (text[0] == 'Q' || text[0] == 'Z') && text[1] == '^') {
    const std::size_t k = detail::parse_count(text.substr(2), "group arity");
    return text[0] == 'Q' ? VecGroup::rationals(k) : VecGroup::integers(k);
  }
  throw ParseError("group spec must be Q^k or Z^k", 0);
}

/// A parsed kite, remembering the B-cycle and base when it was given as one.
struct KiteSpec {
  KiteAlgebra algebra;
  std::optional<BCycle> bcycle;
  std::optional<VecGroup> base;
};

inline KiteSpec parse_kite_spec(std::string_view text) {
  text = detail::trim(text);
  if (detail::starts_with(text, "zn:") || detail::starts_with(text, "cycles:")) {
    BCycle b = parse_bcycle_spec(text);
    const VecGroup base = VecGroup::integers(1);
    return {kite_over_bcycle(b, base), b, base};
  }
  if (!detail::starts_with(text, "kite{") || text.back() != '}') throw ParseError("kite spec must look like kite{...}", 0);
  std::string_view body = detail::trim(text.substr(5, text.size() - 6));
  if (detail::starts_with(body, "group:")) {
    const auto semi = body.find(';');
    const VecGroup group = parse_group_spec(body.substr(6, semi == std::string_view::npos ? std::string_view::npos : semi - 6));
    if (semi == std::string_view::npos) return {KiteAlgebra(group, LAut::identity(group.arity())), std::nullopt, std::nullopt};
    std::string_view rest = detail::trim(body.substr(semi + 1));
    if (!detail::starts_with(rest, "aut:")) throw ParseError("expected aut:<automorphism> after the group", 0);
    return {KiteAlgebra(group, parse_aut_spec(rest.substr(4), group.arity())), std::nullopt, std::nullopt};
  }
  std::optional<BCycle> b;
  std::optional<VecGroup> base;
  for (auto part : detail::split(body, ';')) {
    if (detail::starts_with(part, "bcycle:")) {
      b = parse_bcycle_spec(part.substr(7));
    } else if (detail::starts_with(part, "base:")) {
      base = parse_group_spec(part.substr(5));
    } else {
      throw ParseError("kite spec fields are group/aut or bcycle/base", 0);
    }
  }
  if (!b || !base) throw ParseError("kite spec needs both bcycle: and base:", 0);
  return {kite_over_bcycle(*b, *base), b, base};
}

/// Splits a comma-separated list of specs. Commas inside braces do not split,
/// and a purely numeric piece continues the previous spec, so
/// "cycles:2,3,zn:4" yields "cycles:2,3" and "zn:4".
inline std::vector<std::string> split_spec_list(std::string_view text) {
  std::vector<std::string> raw;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      raw.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  raw.push_back(cur);
  std::vector<std::string> out;
  for (auto& piece : raw) {
    const auto t = std::string(detail::trim(piece));
    const bool numeric = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (numeric && !out.empty()) {
      out.back() += "," + t;
    } else if (!t.empty()) {
      out.push_back(t);
    } else {
      throw ParseError("empty entry in spec list", 0);
    }
  }
  return out;
}

}  // namespace kiteforge
