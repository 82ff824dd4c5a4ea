// kiteforge command-line front end.
//
// Exit codes: 0 pass, 1 fail or counterexample, 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kiteforge/enumerate.hpp"
#include "kiteforge/finalg.hpp"
#include "kiteforge/identity.hpp"
#include "kiteforge/io.hpp"
#include "kiteforge/kite_checks.hpp"
#include "kiteforge/spec.hpp"
#include "kiteforge/terms.hpp"
#include "kiteforge/variety.hpp"

namespace kf = kiteforge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

int emit(const kf::Json& j, bool pass) {
  std::cout << j.dump(2) << '\n';
  return pass ? kPass : kFail;
}

int emit(const kf::CheckReport& r) { return emit(r.to_json(), r.pass); }

kf::Json names_of(const kf::FinFLw& a, const kf::ElemSet& s) {
  kf::Json out = kf::Json::array();
  for (int e : s.elements()) out.push_back(a.name(e));
  return out;
}

int element_of(const kf::FinFLw& a, const std::string& name) {
  if (auto e = a.find(name)) return *e;
  throw kf::InputError("no element named '" + name + "'");
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path) {
  const kf::FlwTables t = kf::read_tables(path);
  kf::Json j;
  j["file"] = path;
  if (auto v = kf::find_violation(t)) {
    j["status"] = "invalid";
    j["axiom"] = kf::axiom_name(v->axiom);
    j["law"] = v->law;
    j["witness"] = v->witness;
    return emit(j, false);
  }
  j["status"] = "valid";
  j["size"] = t.size;
  return emit(j, true);
}

int cmd_enumerate(int size, const std::string& out, const std::string& lock, bool verify) {
  const auto algebras = kf::enumerate_flw(size);
  kf::Json j;
  j["size"] = size;
  j["count"] = algebras.size();
  if (!out.empty()) {
    kf::Json all = kf::Json::array();
    for (const auto& a : algebras) all.push_back(kf::algebra_to_json(a));
    kf::write_text_file(out, all.dump(1) + "\n");
    j["out"] = out;
  }
  if (lock.empty()) return emit(j, true);

  const kf::Json entry = kf::corpus_lock_json({{size, algebras}}).at(std::to_string(size));
  kf::Json locked = std::filesystem::exists(lock) ? kf::read_json_file(lock) : kf::Json::object();
  const std::string key = std::to_string(size);
  if (verify) {
    const bool match = locked.contains(key) && locked.at(key) == entry;
    j["lock"] = lock;
    j["status"] = match ? "pass" : "fail";
    return emit(j, match);
  }
  locked[key] = entry;
  // Keep sizes in numeric order.
  std::map<int, kf::Json> ordered;
  for (const auto& [k, v] : locked.items()) ordered.emplace(std::stoi(k), v);
  kf::Json sorted = kf::Json::object();
  for (const auto& [k, v] : ordered) sorted[std::to_string(k)] = v;
  kf::write_text_file(lock, sorted.dump(2) + "\n");
  j["lock"] = lock;
  return emit(j, true);
}

int cmd_filters(const std::string& path) {
  const kf::FinFLw a = kf::read_algebra(path);
  kf::Json filters = kf::Json::array();
  for (const auto& f : kf::all_normal_filters(a)) filters.push_back(names_of(a, f.members()));
  return emit(kf::Json{{"file", path}, {"filters", filters}}, true);
}

int cmd_closure(const std::string& path, const std::vector<std::string>& filter, const std::string& adjoin) {
  const kf::FinFLw a = kf::read_algebra(path);
  kf::ElemSet members;
  for (const auto& name : filter) members.insert(element_of(a, name));
  const auto f = kf::NormalFilter::make(a, members);
  const auto closed = kf::filter_closure(a, f, element_of(a, adjoin));
  return emit(kf::Json{{"file", path}, {"closure", names_of(a, closed.members())}}, true);
}

int cmd_perfect(const std::string& path) {
  const kf::FinFLw a = kf::read_algebra(path);
  const auto split = kf::is_perfect(a);
  kf::Json j{{"file", path}, {"perfect", split.has_value()}};
  if (split) {
    j["filter"] = names_of(a, split->filter.members());
    j["ideal"] = names_of(a, split->ideal);
  }
  return emit(j, split.has_value());
}

int cmd_perfgen(const std::string& path) {
  const kf::FinFLw a = kf::read_algebra(path);
  const auto monoid = kf::conjugation_monoid(a);
  const auto result = kf::check_perfgen_identities(a, monoid);
  const auto oracle = kf::perfgen_oracle(a);
  kf::Json j{{"file", path}, {"identities_hold", result.holds}, {"si_quotients_perfect", oracle.si_quotients_perfect}};
  if (result.witness) {
    const auto& w = *result.witness;
    kf::Json wj{{"identity", w.identity}, {"x", a.name(w.x)}};
    if (w.y >= 0) wj["y"] = a.name(w.y);
    if (w.alpha >= 0) wj["alpha"] = monoid.maps()[w.alpha];
    if (w.beta >= 0) wj["beta"] = monoid.maps()[w.beta];
    j["witness"] = wj;
  }
  if (!oracle.agree()) throw kf::LogicError("identity check and structural criterion disagree");
  return emit(j, result.holds);
}

// ---------------------------------------------------------------------------

int cmd_kite_check(const std::string& spec_text, const std::string& check, std::uint64_t seed, std::uint64_t samples) {
  const kf::KiteSpec spec = kf::parse_kite_spec(spec_text);
  const kf::KiteAlgebra& a = spec.algebra;
  auto need_bcycle = [&]() {
    if (!spec.bcycle) throw kf::InputError("check '" + check + "' needs a kite given by bcycle: and base:");
  };
  if (check == "axioms") return emit(kf::check_axioms(a, samples, seed));
  if (check == "perfect") return emit(kf::perfect_witness(a, samples, seed));
  if (check == "gamma") return emit(kf::gamma_iso_check(a, samples, seed));
  if (check == "omega") return emit(kf::omega_check(a, samples, seed));
  if (check == "symmetry") return emit(kf::symmetry_and_commutativity(a, samples, seed).report);
  if (check == "notkite") return emit(kf::not_kite_identity_check(a, samples, seed));
  if (check == "triangle") {
    need_bcycle();
    return emit(kf::triangle_identity_check(*spec.bcycle, *spec.base, samples, seed));
  }
  if (check == "powerlemma") {
    need_bcycle();
    return emit(kf::powerlemma_check(*spec.bcycle, 2, *spec.base, samples, seed));
  }
  if (check == "embed") {
    need_bcycle();
    return emit(kf::embed_check(*spec.bcycle, *spec.base, samples, seed));
  }
  if (check == "dim") {
    const auto d = kf::dim_pmv(a, samples, seed);
    kf::CheckReport r = kf::passed("dim", samples, seed);
    r.pass = d.certified;
    r.witness = kf::Json{{"dimension", d.dimension}};
    return emit(r);
  }
  throw kf::InputError("unknown check '" + check + "'");
}

/// `x=value` bindings.
std::map<std::string, std::string> parse_bindings(const std::vector<std::string>& lets) {
  std::map<std::string, std::string> out;
  for (const auto& let : lets) {
    const auto eq = let.find('=');
    if (eq == std::string::npos || eq == 0) throw kf::InputError("binding must look like name=value: " + let);
    out[let.substr(0, eq)] = let.substr(eq + 1);
  }
  return out;
}

int cmd_term(const std::string& spec_text, const std::string& file, const std::string& term_text,
             const std::vector<std::string>& lets) {
  const kf::Term t = kf::parse_term(term_text);
  const auto bindings = parse_bindings(lets);
  kf::Json j{{"term", t.to_string()}};
  if (!file.empty()) {
    const kf::FinFLw a = kf::read_algebra(file);
    kf::Env<kf::FinFLw> env;
    for (const auto& [name, value] : bindings) env[name] = element_of(a, value);
    j["value"] = a.name(kf::eval(t, a, env));
  } else {
    const kf::KiteAlgebra a = kf::parse_kite_spec(spec_text).algebra;
    kf::Env<kf::KiteAlgebra> env;
    for (const auto& [name, value] : bindings) {
      kf::KiteElem x = kf::parse_kite_elem(value);
      if (!a.contains(x)) throw kf::InputError(value + " is not an element of " + a.describe());
      env.emplace(name, std::move(x));
    }
    j["value"] = kf::format_kite_elem(kf::eval(t, a, env));
  }
  return emit(j, true);
}

int cmd_identity(const std::string& spec_text, const std::string& file, const std::string& eq_text, bool relativize,
                 std::uint64_t seed, std::uint64_t samples) {
  kf::Equation eq = kf::parse_equation(eq_text);
  if (relativize) eq = kf::vee_neg_substitute(eq);
  const kf::CheckReport r = file.empty() ? kf::check_identity_sampled(kf::parse_kite_spec(spec_text).algebra, eq, samples, seed)
                                         : kf::check_identity_exhaustive(kf::read_algebra(file), eq);
  kf::Json j;
  j["check"] = r.check;
  j["equation"] = eq.to_string();
  const kf::Json body = r.to_json();
  for (const auto& [k, v] : body.items())
    if (k != "check") j[k] = v;
  return emit(j, r.pass);
}

int cmd_variety(const std::string& op, const std::vector<std::string>& args, const std::string& specs,
                const std::string& labels_path) {
  auto labels = labels_path.empty() ? kf::LabelLattice::default_chain() : kf::label_lattice_from_json(kf::read_json_file(labels_path));
  if (op == "dim") {
    if (specs.empty()) throw kf::InputError("dim needs --specs");
    std::cout << kf::dim_of_kite_family(kf::split_spec_list(specs)) << '\n';
    return kPass;
  }
  if (args.size() != 2) throw kf::InputError(op + " takes two variety points");
  const auto a = kf::parse_variety_point(args[0], labels);
  const auto b = kf::parse_variety_point(args[1], labels);
  if (op == "join") {
    std::cout << kv_join(a, b).to_string() << '\n';
    return kPass;
  }
  if (op == "meet") {
    std::cout << kv_meet(a, b).to_string() << '\n';
    return kPass;
  }
  if (op == "leq") {
    const bool le = kv_leq(a, b);
    std::cout << (le ? "true" : "false") << '\n';
    return le ? kPass : kFail;
  }
  throw kf::InputError("unknown variety operation '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite FL_w-algebras, kites and kite varieties"};
  app.require_subcommand(1);

  std::string file, spec, check, term, eq, adjoin, out, lock, specs, labels, op;
  std::vector<std::string> filter, lets, points;
  std::uint64_t seed = 0, samples = 1000;
  int size = 0;
  bool relativize = false, verify = false;

  auto* validate = app.add_subcommand("validate", "Validate an algebra file");
  validate->add_option("file", file, "Algebra JSON file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate FL_w-algebras of a given size up to isomorphism");
  enumerate->add_option("--size", size, "Number of elements (2-6)")->required();
  enumerate->add_option("--out", out, "Write the algebras as a JSON array");
  enumerate->add_option("--lock", lock, "Corpus lockfile to update");
  enumerate->add_flag("--verify", verify, "Compare against the lockfile instead of updating it");

  auto* filters = app.add_subcommand("filters", "List all normal filters");
  filters->add_option("file", file, "Algebra JSON file")->required();

  auto* closure = app.add_subcommand("closure", "Smallest normal filter containing a filter and an element");
  closure->add_option("file", file, "Algebra JSON file")->required();
  closure->add_option("--filter", filter, "Normal filter members")->delimiter(',')->required();
  closure->add_option("--adjoin", adjoin, "Element to adjoin")->required();

  auto* perfect = app.add_subcommand("perfect", "Decide perfectness and print the split");
  perfect->add_option("file", file, "Algebra JSON file")->required();

  auto* perfgen = app.add_subcommand("perfgen", "Check the identities for perfectly generated varieties");
  perfgen->add_option("file", file, "Algebra JSON file")->required();

  auto* kite = app.add_subcommand("kite-check", "Run a sampled check on a kite");
  kite->add_option("--spec", spec, "Kite spec")->required();
  kite->add_option("--check", check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"axioms", "gamma", "omega", "symmetry", "triangle", "notkite", "powerlemma", "embed", "perfect", "dim"}));
  kite->add_option("--seed", seed, "Master seed")->required();
  kite->add_option("--samples", samples, "Sample count");

  auto* term_cmd = app.add_subcommand("term", "Evaluate a term");
  auto* term_spec = term_cmd->add_option("--spec", spec, "Kite spec");
  auto* term_file = term_cmd->add_option("--file", file, "Algebra JSON file");
  term_spec->excludes(term_file);
  term_cmd->add_option("--term", term, "Term to evaluate")->required();
  term_cmd->add_option("--let", lets, "Binding name=value (repeatable)");

  auto* identity = app.add_subcommand("identity", "Check an equation");
  auto* id_spec = identity->add_option("--spec", spec, "Kite spec (sampled)");
  auto* id_file = identity->add_option("--file", file, "Algebra JSON file (exhaustive)");
  id_spec->excludes(id_file);
  identity->add_option("--eq", eq, "Equation lhs=rhs")->required();
  identity->add_flag("--relativize", relativize, "Replace each variable x by x ∨ x⁻ first");
  identity->add_option("--seed", seed, "Master seed");
  identity->add_option("--samples", samples, "Sample count");

  auto* variety = app.add_subcommand("variety", "Operations on the lattice of kite varieties");
  variety->add_option("op", op, "join, meet, leq or dim")->required()->check(CLI::IsMember({"join", "meet", "leq", "dim"}));
  variety->add_option("points", points, "Variety points, BA or (label,n)");
  variety->add_option("--specs", specs, "Comma-separated kite specs for dim");
  variety->add_option("--labels", labels, "Label lattice JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*enumerate) return cmd_enumerate(size, out, lock, verify);
    if (*filters) return cmd_filters(file);
    if (*closure) return cmd_closure(file, filter, adjoin);
    if (*perfect) return cmd_perfect(file);
    if (*perfgen) return cmd_perfgen(file);
    if (*kite) return cmd_kite_check(spec, check, seed, samples);
    if (*term_cmd) {
      if (spec.empty() && file.empty()) throw kf::InputError("term needs --spec or --file");
      return cmd_term(spec, file, term, lets);
    }
    if (*identity) {
      if (spec.empty() && file.empty()) throw kf::InputError("identity needs --spec or --file");
      if (!spec.empty() && identity->count("--seed") == 0) throw kf::InputError("sampled identity checks need --seed");
      return cmd_identity(spec, file, eq, relativize, seed, samples);
    }
    if (*variety) return cmd_variety(op, points, specs, labels);
  } catch (const kf::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const kf::LogicError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kInputError;
}
