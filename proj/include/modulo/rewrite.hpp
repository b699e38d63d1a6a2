#pragma once

// Proposition rewrite systems: atomic left-hand sides P(x1..xn) -> rhs with
// FV(rhs) included in {x1..xn}, at most one rule per predicate. Under these
// restrictions no critical pairs exist, so every system is orthogonal and
// the rewrite relation is confluent.

#include <deque>
#include <optional>

#include "modulo/parse.hpp"
#include "modulo/syntax.hpp"

namespace modulo {

struct RewriteRule {
  std::string head;                 // predicate symbol
  std::vector<std::string> params;  // distinct variables, one per argument
  Prop rhs;
};

struct RewriteError : std::runtime_error {
  enum class Kind { DuplicateHead, NonLinearParams, FreeVarEscape };
  Kind kind;
  RewriteError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class RewriteSystem {
 public:
  RewriteSystem() = default;

  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  const RewriteRule* rule_for(const std::string& pred) const {
    auto it = by_head_.find(pred);
    return it == by_head_.end() ? nullptr : &rules_[it->second];
  }

  // All predicate and function symbols occurring in the system, heads and
  // right-hand sides alike.
  const std::set<std::string>& predicate_symbols() const { return preds_; }
  const std::set<std::string>& function_symbols() const { return funs_; }

  friend RewriteSystem validate_orthogonal(std::vector<RewriteRule> rules);

 private:
  std::vector<RewriteRule> rules_;
  std::map<std::string, size_t> by_head_;
  std::set<std::string> preds_;
  std::set<std::string> funs_;
};

inline RewriteSystem validate_orthogonal(std::vector<RewriteRule> rules) {
  RewriteSystem sys;
  for (RewriteRule& r : rules) {
    if (sys.by_head_.count(r.head))
      throw RewriteError(RewriteError::Kind::DuplicateHead,
                         "two rules rewrite predicate '" + r.head + "'");
    std::set<std::string> seen;
    for (const std::string& v : r.params)
      if (!seen.insert(v).second)
        throw RewriteError(RewriteError::Kind::NonLinearParams,
                           "rule for '" + r.head + "' repeats parameter '" + v + "'");
    for (const std::string& v : free_vars(r.rhs))
      if (!seen.count(v))
        throw RewriteError(RewriteError::Kind::FreeVarEscape,
                           "rule for '" + r.head + "': right-hand side has free variable '" +
                               v + "' not among the parameters");
    sys.preds_.insert(r.head);
    std::set<std::string> funs, preds;
    collect_symbols(r.rhs, funs, preds);
    sys.preds_.insert(preds.begin(), preds.end());
    sys.funs_.insert(funs.begin(), funs.end());
    sys.by_head_[r.head] = sys.rules_.size();
    sys.rules_.push_back(std::move(r));
  }
  return sys;
}

inline RewriteSystem make_system(std::initializer_list<RewriteRule> rules) {
  return validate_orthogonal(std::vector<RewriteRule>(rules));
}

// Instantiate a rule's right-hand side with the matched atom's arguments.
inline Prop instantiate(const RewriteRule& rule, const std::vector<Term>& args) {
  std::map<std::string, Term> sub;
  for (size_t i = 0; i < rule.params.size(); ++i) sub[rule.params[i]] = args[i];
  return substitute(rule.rhs, sub);
}

namespace detail {

// Contracts the n-th matching atom in left-to-right order; counts matches in
// *skip and decrements. Returns the rewritten proposition when *skip hits 0.
inline std::optional<Prop> rewrite_nth(const Prop& p, const RewriteSystem& sys, int& skip) {
  switch (p.kind) {
    case Prop::Kind::Atom: {
      const RewriteRule* r = sys.rule_for(p.name);
      if (!r || r->params.size() != p.args.size()) return std::nullopt;
      if (skip-- > 0) return std::nullopt;
      return instantiate(*r, p.args);
    }
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      return std::nullopt;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      if (auto l = rewrite_nth(p.lhs(), sys, skip))
        return Prop::binary(p.kind, std::move(*l), p.rhs());
      if (auto r = rewrite_nth(p.rhs(), sys, skip))
        return Prop::binary(p.kind, p.lhs(), std::move(*r));
      return std::nullopt;
    }
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      if (auto b = rewrite_nth(p.body(), sys, skip))
        return Prop::quant(p.kind, p.name, std::move(*b));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// One step at the leftmost matching atom; nullopt when p is a normal form.
inline std::optional<Prop> rewrite_step(const Prop& p, const RewriteSystem& sys) {
  int skip = 0;
  return detail::rewrite_nth(p, sys, skip);
}

// Every one-step reduct of p, one per matching atom occurrence.
inline std::vector<Prop> one_step_reducts(const Prop& p, const RewriteSystem& sys) {
  std::vector<Prop> out;
  for (int n = 0;; ++n) {
    int skip = n;
    auto q = detail::rewrite_nth(p, sys, skip);
    if (!q) break;
    out.push_back(std::move(*q));
  }
  return out;
}

struct NormalizeResult {
  bool normal;  // false: fuel ran out, `value` is the last reduct reached
  Prop value;
  int steps = 0;
};

inline NormalizeResult normalize(const Prop& p, const RewriteSystem& sys, int fuel) {
  Prop cur = p;
  int steps = 0;
  for (;;) {
    auto next = rewrite_step(cur, sys);
    if (!next) return {true, std::move(cur), steps};
    if (steps >= fuel) return {false, std::move(cur), steps};
    cur = std::move(*next);
    ++steps;
  }
}

enum class Congruence { Yes, No, Unknown };

// Decides p == q modulo the congruence generated by sys, within fuel.
//
// Fast path: when both sides normalize within a small slice of the fuel,
// the normal forms are decisive, the system being confluent. Otherwise a
// bounded breadth-first joinability search runs over all one-step reducts
// of both sides: a common reduct certifies Yes even for non-terminating
// systems (P -> P => Q makes P congruent to P => Q in one step although P
// itself never normalizes), and two drained frontiers mean the reduct
// closures are finite and disjoint, which under confluence refutes the
// congruence. When neither route settles the question within fuel, the
// answer is Unknown, never a guess. The search keeps every visited term
// shallow, so diverging atoms cost a bounded amount per call no matter how
// large the fuel is.
inline Congruence congruent(const Prop& p, const Prop& q, const RewriteSystem& sys, int fuel) {
  if (alpha_eq(p, q)) return Congruence::Yes;
  int slice = std::min(fuel, 64);
  NormalizeResult np = normalize(p, sys, slice);
  NormalizeResult nq = normalize(q, sys, slice);
  if (np.normal && nq.normal)
    return alpha_eq(np.value, nq.value) ? Congruence::Yes : Congruence::No;

  std::set<std::string> seen_p, seen_q;
  std::deque<Prop> frontier_p{p}, frontier_q{q};
  seen_p.insert(canon_string(p));
  seen_q.insert(canon_string(q));
  auto expand = [&](std::deque<Prop>& frontier, std::set<std::string>& mine,
                    const std::set<std::string>& other) -> std::optional<Congruence> {
    if (frontier.empty()) return std::nullopt;
    Prop cur = std::move(frontier.front());
    frontier.pop_front();
    for (Prop& r : one_step_reducts(cur, sys)) {
      std::string key = canon_string(r);
      if (other.count(key)) return Congruence::Yes;
      if (mine.insert(key).second) frontier.push_back(std::move(r));
    }
    return std::nullopt;
  };
  for (int budget = fuel; budget > 0; --budget) {
    if (frontier_p.empty() && frontier_q.empty())
      return Congruence::No;  // both closures enumerated without meeting
    if (auto res = expand(frontier_p, seen_p, seen_q)) return *res;
    if (auto res = expand(frontier_q, seen_q, seen_p)) return *res;
  }
  if (frontier_p.empty() && frontier_q.empty()) return Congruence::No;
  return Congruence::Unknown;
}

// True iff `a` shares no predicate or function symbol with the system.
inline bool r_compatible(const Prop& a, const RewriteSystem& sys) {
  std::set<std::string> funs, preds;
  collect_symbols(a, funs, preds);
  for (const std::string& p : preds)
    if (sys.predicate_symbols().count(p)) return false;
  for (const std::string& f : funs)
    if (sys.function_symbols().count(f)) return false;
  return true;
}

// --- rule files -------------------------------------------------------------
//
// One rule per line:   P(x, y) -> <prop>
// Blank lines and lines starting with '#' are skipped. Identifiers in term
// position are variables, so any right-hand side variable that is not a
// parameter is reported as an escape rather than read as a constant.

inline RewriteRule parse_rule(std::string_view line) {
  size_t arrow = std::string_view::npos;
  for (size_t i = 0; i + 1 < line.size(); ++i)
    if (line[i] == '-' && line[i + 1] == '>') { arrow = i; break; }
  if (arrow == std::string_view::npos)
    throw ParseError("rule is missing '->'", 0);
  std::string_view lhs = line.substr(0, arrow);
  std::string_view rhs = line.substr(arrow + 2);

  Signature scratch;
  Prop head = detail::PropParser(lhs, nullptr, &scratch).parse_prop_all({});
  if (head.kind != Prop::Kind::Atom)
    throw ParseError("rule left-hand side must be an atom", 0);
  RewriteRule r;
  r.head = head.name;
  for (const Term& t : head.args) {
    if (t.kind != Term::Kind::Var)
      throw ParseError("rule parameters must be variables", 0);
    r.params.push_back(t.name);
  }
  std::set<std::string> params(r.params.begin(), r.params.end());
  Signature scratch2;
  r.rhs = detail::PropParser(rhs, nullptr, &scratch2).parse_prop_all(params);
  return r;
}

inline RewriteSystem parse_system(std::string_view text) {
  std::vector<RewriteRule> rules;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#')
      rules.push_back(parse_rule(line.substr(first)));
    if (end == text.size()) break;
    start = end + 1;
  }
  return validate_orthogonal(std::move(rules));
}

inline std::string print_rule(const RewriteRule& r) {
  std::string out = r.head;
  if (!r.params.empty()) {
    out += '(';
    for (size_t i = 0; i < r.params.size(); ++i) {
      if (i) out += ", ";
      out += r.params[i];
    }
    out += ')';
  }
  out += " -> ";
  out += print_prop(r.rhs);
  return out;
}

inline std::string print_system(const RewriteSystem& sys) {
  std::string out;
  for (const RewriteRule& r : sys.rules()) {
    out += print_rule(r);
    out += '\n';
  }
  return out;
}

}  // namespace modulo
