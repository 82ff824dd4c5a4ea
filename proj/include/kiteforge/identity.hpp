#pragma once

// Checking equations over an algebra: exhaustively over a finite algebra, or
// on seeded samples over an infinite one.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kiteforge/finalg.hpp"
#include "kiteforge/kite_checks.hpp"
#include "kiteforge/report.hpp"
#include "kiteforge/sampling.hpp"
#include "kiteforge/terms.hpp"

namespace kiteforge {

inline Json to_json(const FinFLw& a, int x) { return a.name(x); }

namespace detail {

template <FLAlgebra A, class Format>
Json assignment_json(const Env<A>& env, Format&& fmt) {
  Json j = Json::object();
  for (const auto& [name, value] : env) j[name] = fmt(value);
  return j;
}

}  // namespace detail

/// Every assignment of the equation's variables in a finite algebra.
inline CheckReport check_identity_exhaustive(const FinFLw& a, const Equation& eq) {
  const auto vars_set = eq.variables();
  const std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    total *= static_cast<std::uint64_t>(a.size());
    if (total > (std::uint64_t{1} << 32)) throw InputError("too many assignments to check exhaustively");
  }
  auto fmt = [&](int x) { return Json(a.name(x)); };
  for (std::uint64_t code = 0; code < total; ++code) {
    Env<FinFLw> env;
    std::uint64_t c = code;
    for (const auto& v : vars) {
      env[v] = static_cast<int>(c % static_cast<std::uint64_t>(a.size()));
      c /= static_cast<std::uint64_t>(a.size());
    }
    const int lhs = eval(eq.lhs, a, env);
    const int rhs = eval(eq.rhs, a, env);
    if (lhs != rhs)
      return failed("identity", total, 0,
                    Json{{"assignment", detail::assignment_json<FinFLw>(env, fmt)}, {"lhs", a.name(lhs)}, {"rhs", a.name(rhs)}});
  }
  return passed("identity", total, 0);
}

/// The equation on `count` sampled assignments drawn by `draw(rng)`.
template <FLAlgebra A, class Draw>
CheckReport check_identity_sampled(const A& a, const Equation& eq, Draw&& draw, std::uint64_t count, std::uint64_t seed) {
  using E = element_t<A>;
  const auto vars_set = eq.variables();
  const std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  struct Failure {
    Env<A> env;
    E lhs, rhs;
  };
  auto failure = run_sharded<Failure>(count, seed, [&](Rng& rng, std::uint64_t) -> std::optional<Failure> {
    Env<A> env;
    for (const auto& v : vars) env.emplace(v, draw(rng));
    E lhs = eval(eq.lhs, a, env);
    E rhs = eval(eq.rhs, a, env);
    if (!(lhs == rhs)) return Failure{std::move(env), std::move(lhs), std::move(rhs)};
    return std::nullopt;
  });
  if (!failure) return passed("identity", count, seed);
  const auto& f = failure->witness;
  auto fmt = [](const E& x) { return to_json(x); };
  return failed("identity", count, seed,
                Json{{"sample", failure->index},
                     {"assignment", detail::assignment_json<A>(f.env, fmt)},
                     {"lhs", to_json(f.lhs)},
                     {"rhs", to_json(f.rhs)}});
}

inline CheckReport check_identity_sampled(const KiteAlgebra& a, const Equation& eq, std::uint64_t count, std::uint64_t seed,
                                          const KiteSampler& s = {}) {
  return check_identity_sampled(a, eq, [&](Rng& rng) { return s.element(rng, a); }, count, seed);
}

}  // namespace kiteforge
