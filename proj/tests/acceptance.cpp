// One line per acceptance criterion; exits nonzero if any criterion fails.
// Usage: acceptance <kiteforge-cli> <source-dir>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "finite_oracles.hpp"
#include "kiteforge/enumerate.hpp"
#include "kiteforge/io.hpp"
#include "kiteforge/kite_checks.hpp"
#include "kiteforge/variety.hpp"

namespace kf = kiteforge;
namespace oracle = kiteforge::oracle;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

struct NamedKite {
  std::string name;
  kf::KiteAlgebra algebra;
};

std::vector<NamedKite> four_kites() {
  return {{"Q^1 id", kf::KiteAlgebra(kf::VecGroup::rationals(1), kf::LAut::identity(1))},
          {"Q^2 swap", kf::KiteAlgebra(kf::VecGroup::rationals(2), kf::LAut::permutation({1, 0}))},
          {"Q^3 shift", kf::KiteAlgebra(kf::VecGroup::rationals(3), kf::LAut::cyclic_shift(3))},
          {"Q^1 scale-2", kf::KiteAlgebra(kf::VecGroup::rationals(1), kf::LAut::scaling({kf::Rational(2)}))}};
}

Outcome per_kite(const std::function<kf::CheckReport(const kf::KiteAlgebra&)>& check) {
  std::ostringstream os;
  bool ok = true;
  for (const auto& k : four_kites()) {
    const auto r = check(k.algebra);
    ok = ok && r.pass;
    os << k.name << ":" << (r.pass ? "pass" : "fail") << ' ';
    if (!r.pass && r.witness) os << r.witness->dump() << ' ';
  }
  return {ok, os.str()};
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  auto out = per_kite([](const kf::KiteAlgebra& a) { return kf::check_axioms(a, 10000, kSeed); });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << out.detail << "time " << secs << "s (limit 30s)";
  return {out.pass && secs < 30.0, os.str()};
}

Outcome ac2() { return per_kite([](const kf::KiteAlgebra& a) { return kf::gamma_iso_check(a, 10000, kSeed); }); }

Outcome ac3() { return per_kite([](const kf::KiteAlgebra& a) { return kf::omega_check(a, 10000, kSeed); }); }

Outcome ac4() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& k : four_kites()) {
    const bool twisted = !k.algebra.aut().is_identity();
    const auto r = kf::symmetry_and_commutativity(k.algebra, twisted ? 100 : 10000, kSeed);
    const bool sym = r.asymmetric.has_value(), comm = r.noncommuting.has_value();
    ok = ok && sym == twisted && comm == twisted;
    os << k.name << ": asymmetric " << (sym ? "found" : "none") << ", noncommuting " << (comm ? "found" : "none") << " in "
       << (twisted ? 100 : 10000) << "; ";
  }
  return {ok, os.str()};
}

Outcome ac5(const std::string& source_dir) {
  std::map<int, std::vector<kf::FinFLw>> corpus;
  for (int n = 2; n <= 4; ++n) corpus[n] = kf::enumerate_flw(n);
  std::size_t triples = 0, perfect = 0, algebras = 0;
  std::vector<std::string> failures;
  for (const auto& [n, list] : corpus)
    for (const auto& a : list) {
      ++algebras;
      const auto filters = oracle::brute_filters(a);
      const auto monoid = kf::conjugation_monoid(a);
      for (std::uint64_t f : filters)
        for (int x = 0; x < a.size(); ++x) {
          ++triples;
          const std::uint64_t need = f | (std::uint64_t{1} << x);
          std::uint64_t least = ~std::uint64_t{0};
          for (std::uint64_t g : filters)
            if ((g & need) == need) least &= g;
          const auto F = kf::NormalFilter::make(a, kf::ElemSet(f));
          if (kf::filter_closure(a, F, x, monoid).members().bits() != least ||
              kf::closure_fixpoint(a, kf::ElemSet(need)).bits() != least)
            failures.push_back("(a) closure");
        }

      const auto ours = kf::all_normal_filters(a);
      const auto congruences = oracle::brute_congruences(a);
      if (ours.size() != congruences.size()) failures.push_back("(b) filter/congruence count");
      std::vector<oracle::Partition> images;
      for (const auto& f : ours) {
        const auto theta = oracle::normalise(kf::quotient_map(a, f).projection);
        if (std::find(congruences.begin(), congruences.end(), theta) == congruences.end()) failures.push_back("(b) not a congruence");
        images.push_back(theta);
      }
      for (std::size_t i = 0; i < ours.size(); ++i)
        for (std::size_t j = 0; j < ours.size(); ++j)
          if (ours[i].members().subset_of(ours[j].members()) != oracle::refines(images[i], images[j]))
            failures.push_back("(b) order");

      const auto homs = oracle::homs_to_two(a);
      if (const auto split = kf::is_perfect(a)) {
        ++perfect;
        if (homs.size() != 1 || homs.front() != split->filter.members().bits()) failures.push_back("(c) hom to 2");
      }

      if (!kf::perfgen_oracle(a).agree()) failures.push_back("(d) perfgen");
    }

  bool lock_ok = true;
  const auto again = [] {
    std::map<int, std::vector<kf::FinFLw>> c;
    for (int n = 2; n <= 4; ++n) c[n] = kf::enumerate_flw(n);
    return c;
  }();
  const auto first = kf::corpus_lock_json(corpus), second = kf::corpus_lock_json(again);
  if (first != second) lock_ok = false;
  const auto locked = kf::read_json_file(source_dir + "/corpus.lock");
  for (const auto& [key, entry] : first.items())
    if (!locked.contains(key) || locked.at(key) != entry) lock_ok = false;
  if (!lock_ok) failures.push_back("corpus.lock");

  std::ostringstream os;
  os << algebras << " algebras (counts";
  for (const auto& [n, list] : corpus) os << ' ' << n << ':' << list.size();
  os << "), " << triples << " (A,F,x) triples, " << perfect << " perfect; corpus.lock " << (lock_ok ? "matches" : "MISMATCH");
  if (!failures.empty()) os << "; first failure " << failures.front() << " (" << failures.size() << " total)";
  return {failures.empty(), os.str()};
}

Outcome ac6() {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto r = kf::dim_pmv(kf::kite_over_bcycle(kf::z_n(n), kf::VecGroup::integers(1)), 1000, kSeed);
    if (r.dimension != n || !r.certified) {
      ok = false;
      os << "z_" << n << " gave " << r.dimension << (r.certified ? "" : " uncertified") << "; ";
    }
  }
  const auto s = kf::dim_pmv(kf::KiteAlgebra(kf::VecGroup::rationals(1), kf::LAut::scaling({kf::Rational(2)})), 1000, kSeed);
  const auto b = kf::bc_dimension(kf::bc_from_cycle_type({2, 3}));
  ok = ok && s.dimension == 0 && s.certified && b == 6;
  os << "z_1..z_12 checked; scale-2 dim " << s.dimension << "; cycle-type (2,3) dim " << b;
  return {ok, os.str()};
}

Outcome report_outcome(const kf::CheckReport& r) { return {r.pass, r.to_json().dump()}; }

Outcome ac7() { return report_outcome(kf::embed_check(kf::bc_from_cycle_type({2, 3}), kf::VecGroup::integers(1), 1000, kSeed)); }

Outcome ac8() { return report_outcome(kf::powerlemma_check(kf::z_n(2), 2, kf::VecGroup::integers(1), 1000, kSeed)); }

Outcome ac9() {
  const kf::KiteAlgebra scale2(kf::VecGroup::rationals(1), kf::LAut::scaling({kf::Rational(2)}));
  const kf::KiteAlgebra zid(kf::VecGroup::integers(1), kf::LAut::identity(1));
  const auto holds = kf::not_kite_identity_check(scale2, 10000, kSeed);
  const auto fails = kf::not_kite_identity_check(zid, 10000, kSeed);
  const kf::KiteElem x{kf::Zone::Top, {kf::Rational(-1)}};
  const auto [lhs, rhs] = kf::not_kite_sides(zid, x);
  const bool witness = lhs == kf::KiteElem{kf::Zone::Top, {kf::Rational(-2)}} && rhs == x;
  std::ostringstream os;
  os << "scale-2 " << (holds.pass ? "holds" : "fails") << "; Z id sampled " << (fails.pass ? "holds" : "fails")
     << "; at x=" << kf::format_kite_elem(x) << " LHS " << kf::format_kite_elem(lhs) << " RHS " << kf::format_kite_elem(rhs);
  return {holds.pass && !fails.pass && witness, os.str()};
}

Outcome ac10() {
  std::ostringstream os;
  bool ok = true;
  const std::vector<std::pair<std::string, kf::BCycle>> cycles = {
      {"z1", kf::z_n(1)}, {"z2", kf::z_n(2)}, {"(2,3)", kf::bc_from_cycle_type({2, 3})}};
  for (const auto& [name, b] : cycles)
    for (const auto& base : {kf::VecGroup::integers(1), kf::VecGroup::rationals(1)}) {
      const auto r = kf::triangle_identity_check(b, base, 1000, kSeed);
      ok = ok && r.pass;
      os << name << "/" << base.name() << ":" << (r.pass ? "pass" : "fail") << ' ';
    }
  return {ok, os.str()};
}

Outcome ac11() {
  std::vector<std::uint64_t> r;
  for (std::uint64_t n = 0; n <= 200; ++n) r.push_back(n);
  std::uint64_t checked = 0;
  bool ok = true;
  for (auto n : r) {
    ok = ok && kf::div_join(n, n) == n && kf::div_meet(n, n) == n;
    for (auto m : r) {
      const auto j = kf::div_join(n, m), mt = kf::div_meet(n, m);
      ok = ok && j == kf::div_join(m, n) && mt == kf::div_meet(m, n) && kf::div_join(n, mt) == n && kf::div_meet(n, j) == n &&
           kf::div_leq(n, m) == (j == m);
      for (auto k : r) {
        ok = ok && kf::div_join(j, k) == kf::div_join(n, kf::div_join(m, k)) &&
             kf::div_meet(mt, k) == kf::div_meet(n, kf::div_meet(m, k));
        ++checked;
      }
    }
  }
  const auto labels = kf::LabelLattice::default_chain();
  for (std::size_t l = 0; l < labels->size(); ++l)
    for (std::uint64_t n = 0; n <= 200; ++n)
      for (std::uint64_t m = 0; m <= 200; ++m)
        ok = ok && kf::div_leq(n, m) == kf::kv_leq(kf::KiteVarietyPoint::pair(labels, l, n), kf::KiteVarietyPoint::pair(labels, l, m));
  std::vector<kf::KiteVarietyPoint> ps{kf::KiteVarietyPoint::boolean(labels)};
  for (std::size_t l = 0; l < labels->size(); ++l)
    for (std::uint64_t n = 0; n <= 30; ++n) ps.push_back(kf::KiteVarietyPoint::pair(labels, l, n));
  for (const auto& a : ps)
    for (const auto& b : ps) {
      const auto j = kf::kv_join(a, b), m = kf::kv_meet(a, b);
      ok = ok && j == kf::kv_join(b, a) && m == kf::kv_meet(b, a) && kf::kv_join(a, m) == a && kf::kv_meet(a, j) == a &&
           kf::kv_leq(a, b) == (j == b) && kf::kv_join(a, a) == a && kf::kv_meet(a, a) == a;
      for (const auto& c : ps)
        ok = ok && kf::kv_join(j, c) == kf::kv_join(a, kf::kv_join(b, c)) && kf::kv_meet(m, c) == kf::kv_meet(a, kf::kv_meet(b, c));
    }
  std::ostringstream os;
  os << checked << " divisibility triples, containment law on 2x201x201 pairs, " << ps.size() << " ordinal-sum points";
  return {ok, os.str()};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome ac12(const std::string& cli, const std::string& source_dir) {
  const std::string data = "'" + source_dir + "/data/";
  std::vector<std::string> runs;
  const std::vector<std::string> specs = {"'kite{group:Q^1; aut:perm:(0)}'", "'kite{group:Q^2; aut:perm:(0 1)}'",
                                          "'kite{group:Q^3; aut:perm:(0 1 2)}'", "'kite{group:Q^1; aut:perm:(0);scale:2}'",
                                          "'kite{group:Z^1}'"};
  for (const auto& spec : specs)
    for (const char* check : {"axioms", "gamma", "omega", "symmetry", "notkite", "perfect", "dim"})
      runs.push_back("kite-check --spec " + spec + " --check " + check + " --seed 11 --samples 2000");
  for (const char* spec : {"zn:2", "cycles:2,3", "'kite{bcycle:zn:3; base:Q}'"})
    for (const char* check : {"triangle", "powerlemma", "embed"})
      runs.push_back(std::string("kite-check --spec ") + spec + " --check " + check + " --seed 11 --samples 500");
  for (const auto& spec : specs)
    runs.push_back("identity --spec " + spec + " --eq 'mul(x,y)=mul(y,x)' --seed 11 --samples 2000");
  runs.push_back("identity --spec 'kite{group:Q^2; aut:perm:(0 1)}' --eq 'mul(x,y)=mul(y,x)' --relativize --seed 11 --samples 500");
  runs.push_back("identity --file " + data + "luk3.json' --eq 'mul(x,y)=mul(y,x)'");
  for (const char* file : {"boolean2.json'", "luk3.json'", "godel3.json'"})
    for (const char* cmd : {"validate ", "filters ", "perfect ", "perfgen "}) runs.push_back(cmd + data + file);
  runs.push_back("enumerate --size 5");
  runs.push_back("variety dim --specs zn:2,zn:3");

  std::size_t identical = 0;
  std::string first_diff;
  for (const auto& args : runs) {
    const auto a = run_cli(cli, args), b = run_cli(cli, args);
    const auto c = run_cli("env", "KITEFORGE_THREADS=3 '" + cli + "' " + args);
    if (a.code >= 0 && a.code <= 1 && a.out == b.out && a.code == b.code && c.out == a.out)
      ++identical;
    else if (first_diff.empty())
      first_diff = args;
  }
  std::ostringstream os;
  os << identical << "/" << runs.size() << " CLI runs byte-identical on repeat and with KITEFORGE_THREADS=3";
  if (!first_diff.empty()) os << "; first mismatch: " << first_diff;
  return {identical == runs.size(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <kiteforge-cli> <source-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], source_dir = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kite axiom suite, 10^4 samples x 4 kites", ac1},
      {"Gamma agreement, 10^4 pairs x 4 kites", ac2},
      {"Omega isomorphism, 10^4 pairs x 4 kites, all zone cases", ac3},
      {"symmetry and commutativity witnesses", ac4},
      {"finite corpus n<=4 against brute-force oracles", [&] { return ac5(source_dir); }},
      {"dimension", ac6},
      {"unroll embedding is an injective homomorphism, 10^3 samples", ac7},
      {"perfect power reshuffle, |S|=2 over K_z2(Z), 10^3 pairs", ac8},
      {"dimension-0 identity and its Z witness", ac9},
      {"left triangle identity, 10^3 samples x 6 configurations", ac10},
      {"variety lattice laws, exhaustive", ac11},
      {"CLI determinism", [&] { return ac12(cli, source_dir); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << (i + 1) << " " << criteria[i].first << " | " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " acceptance criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
