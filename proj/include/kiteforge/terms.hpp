#pragma once

// The FL term language over {∧, ∨, ·, \, /, 0, 1}.
//
// Concrete syntax is function-style:
//   term ::= var | 0 | 1 | meet(t,t) | join(t,t) | mul(t,t)
//          | under(t,t)      (left\right)
//          | over(t,t)       (left/right)
//          | negl(t) | negr(t) | oplus(t,t)
//   var  ::= [a-z][a-z0-9]*
// negl(x) = 0/x, negr(x) = x\0 and oplus(x,y) = (x⁻·y⁻)^∼ are expanded at
// parse time, so a Term only ever holds the eight core node kinds.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kiteforge/algebra.hpp"
#include "kiteforge/error.hpp"

namespace kiteforge {

enum class TermOp { Var, Zero, One, Meet, Join, Mul, LDiv, RDiv };

/// Immutable term tree; copies share structure.
class Term {
 public:
  static Term var(std::string name) { return Term(std::make_shared<const Node>(Node{TermOp::Var, std::move(name), {}, {}})); }
  static Term zero() { return leaf(TermOp::Zero); }
  static Term one() { return leaf(TermOp::One); }
  static Term meet(Term l, Term r) { return binary(TermOp::Meet, std::move(l), std::move(r)); }
  static Term join(Term l, Term r) { return binary(TermOp::Join, std::move(l), std::move(r)); }
  static Term mul(Term l, Term r) { return binary(TermOp::Mul, std::move(l), std::move(r)); }
  /// l\r
  static Term ldiv(Term l, Term r) { return binary(TermOp::LDiv, std::move(l), std::move(r)); }
  /// l/r
  static Term rdiv(Term l, Term r) { return binary(TermOp::RDiv, std::move(l), std::move(r)); }

  static Term negl(Term x) { return rdiv(zero(), std::move(x)); }
  static Term negr(Term x) { return ldiv(std::move(x), zero()); }
  static Term oplus(Term x, Term y) { return negr(mul(negl(std::move(x)), negl(std::move(y)))); }

  TermOp op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }
  bool is_binary() const { return node_->left != nullptr; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.op() == TermOp::Var) return a.name() == b.name();
    if (!a.is_binary()) return true;
    return a.left() == b.left() && a.right() == b.right();
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(out);
    return out;
  }

  std::size_t depth() const {
    if (!is_binary()) return 0;
    return 1 + std::max(left().depth(), right().depth());
  }

  /// Core-form printer; parse_term(to_string()) reproduces the tree.
  std::string to_string() const {
    switch (op()) {
      case TermOp::Var: return name();
      case TermOp::Zero: return "0";
      case TermOp::One: return "1";
      default: break;
    }
    return std::string(keyword(op())) + "(" + left().to_string() + "," + right().to_string() + ")";
  }

  static const char* keyword(TermOp op) {
    switch (op) {
      case TermOp::Meet: return "meet";
      case TermOp::Join: return "join";
      case TermOp::Mul: return "mul";
      case TermOp::LDiv: return "under";
      case TermOp::RDiv: return "over";
      default: return "";
    }
  }

 private:
  struct Node {
    TermOp op;
    std::string name;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Term leaf(TermOp op) { return Term(std::make_shared<const Node>(Node{op, {}, {}, {}})); }
  static Term binary(TermOp op, Term l, Term r) {
    return Term(std::make_shared<const Node>(
        Node{op, {}, std::make_shared<const Term>(std::move(l)), std::make_shared<const Term>(std::move(r))}));
  }

  void collect(std::set<std::string>& out) const {
    if (op() == TermOp::Var) out.insert(name());
    if (is_binary()) {
      left().collect(out);
      right().collect(out);
    }
  }

  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;

  std::string to_string() const { return lhs.to_string() + "=" + rhs.to_string(); }
  std::set<std::string> variables() const {
    auto v = lhs.variables();
    auto r = rhs.variables();
    v.insert(r.begin(), r.end());
    return v;
  }
};

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, const std::vector<std::string>* declared) : text_(text), declared_(declared) {}

  Term parse_whole() {
    Term t = parse();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

  Equation parse_equation() {
    Term lhs = parse();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '=') throw ParseError("expected '='", pos_);
    ++pos_;
    Term rhs = parse();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Term parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("constants are 0 and 1 only", pos_);
      return c == '0' ? Term::zero() : Term::one();
    }
    if (!(c >= 'a' && c <= 'z')) throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9')))
      ++pos_;
    std::string ident(text_.substr(start, pos_ - start));
    std::size_t after = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      return parse_call(ident, start);
    }
    pos_ = after;
    if (declared_ && std::find(declared_->begin(), declared_->end(), ident) == declared_->end())
      throw ParseError("undeclared variable '" + ident + "'", start);
    return Term::var(std::move(ident));
  }

  Term parse_call(const std::string& fn, std::size_t at) {
    static const std::map<std::string, int> arity = {{"meet", 2}, {"join", 2},  {"mul", 2},   {"under", 2},
                                                     {"over", 2}, {"negl", 1},  {"negr", 1},  {"oplus", 2}};
    auto it = arity.find(fn);
    if (it == arity.end()) throw ParseError("unknown function '" + fn + "'", at);
    Term a = parse();
    if (it->second == 1) {
      expect(')');
      return fn == "negl" ? Term::negl(std::move(a)) : Term::negr(std::move(a));
    }
    expect(',');
    Term b = parse();
    expect(')');
    if (fn == "meet") return Term::meet(std::move(a), std::move(b));
    if (fn == "join") return Term::join(std::move(a), std::move(b));
    if (fn == "mul") return Term::mul(std::move(a), std::move(b));
    if (fn == "under") return Term::ldiv(std::move(a), std::move(b));
    if (fn == "over") return Term::rdiv(std::move(a), std::move(b));
    return Term::oplus(std::move(a), std::move(b));
  }

  std::string_view text_;
  const std::vector<std::string>* declared_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a term whose variables must all appear in `vars`.
inline Term parse_term(std::string_view text, const std::vector<std::string>& vars) {
  return detail::TermParser(text, &vars).parse_whole();
}

/// Parses a term, declaring every variable it mentions.
inline Term parse_term(std::string_view text) { return detail::TermParser(text, nullptr).parse_whole(); }

inline Equation parse_equation(std::string_view text, const std::vector<std::string>& vars) {
  return detail::TermParser(text, &vars).parse_equation();
}

inline Equation parse_equation(std::string_view text) { return detail::TermParser(text, nullptr).parse_equation(); }

template <FLAlgebra A>
using Env = std::map<std::string, element_t<A>>;

class UnboundVariable : public InputError {
 public:
  explicit UnboundVariable(const std::string& name) : InputError("no binding for variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Bottom-up evaluation of `t` in `a` under `env`.
template <FLAlgebra A>
element_t<A> eval(const Term& t, const A& a, const Env<A>& env) {
  switch (t.op()) {
    case TermOp::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnboundVariable(t.name());
      return it->second;
    }
    case TermOp::Zero: return a.zero();
    case TermOp::One: return a.one();
    default: break;
  }
  element_t<A> l = eval(t.left(), a, env);
  element_t<A> r = eval(t.right(), a, env);
  switch (t.op()) {
    case TermOp::Meet: return a.meet(l, r);
    case TermOp::Join: return a.join(l, r);
    case TermOp::Mul: return a.mul(l, r);
    case TermOp::LDiv: return a.ldiv(l, r);
    case TermOp::RDiv: return a.rdiv(l, r);
    default: throw LogicError("unreachable term node");
  }
}

/// t_e = ((s\t) ∧ (t\s)) ∧ 1 for the equation s = t. In every residuated
/// lattice s = t holds under an assignment iff t_e evaluates to 1.
inline Term normalize_to_unit(const Equation& e) {
  return Term::meet(Term::meet(Term::ldiv(e.lhs, e.rhs), Term::ldiv(e.rhs, e.lhs)), Term::one());
}

/// Replaces every variable x by x ∨ x⁻ and leaves all other nodes alone.
inline Term vee_neg_substitute(const Term& t) {
  switch (t.op()) {
    case TermOp::Var: return Term::join(t, Term::negl(t));
    case TermOp::Zero:
    case TermOp::One: return t;
    case TermOp::Meet: return Term::meet(vee_neg_substitute(t.left()), vee_neg_substitute(t.right()));
    case TermOp::Join: return Term::join(vee_neg_substitute(t.left()), vee_neg_substitute(t.right()));
    case TermOp::Mul: return Term::mul(vee_neg_substitute(t.left()), vee_neg_substitute(t.right()));
    case TermOp::LDiv: return Term::ldiv(vee_neg_substitute(t.left()), vee_neg_substitute(t.right()));
    case TermOp::RDiv: return Term::rdiv(vee_neg_substitute(t.left()), vee_neg_substitute(t.right()));
  }
  throw LogicError("unreachable term node");
}

inline Equation vee_neg_substitute(const Equation& e) { return {vee_neg_substitute(e.lhs), vee_neg_substitute(e.rhs)}; }

}  // namespace kiteforge
