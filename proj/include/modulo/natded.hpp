#pragma once

// Natural-deduction proof terms over implication, conjunction and the unit
// constant, typed modulo a rewrite system. The congruence enters at the
// head of the type: a rule applies once the goal rewrites (at the root, an
// atom at a time) to the right connective. Reduction offers two
// strategies: leftmost-outermost single steps, and one full development per
// step, contracting every redex visible in the term at once.

#include <optional>

#include "modulo/atrans.hpp"
#include "modulo/parse.hpp"
#include "modulo/rewrite.hpp"
#include "modulo/syntax.hpp"

namespace modulo {

struct ProofTerm {
  enum class Kind { Var, Lam, App, Pair, Fst, Snd, Unit };
  Kind kind = Kind::Unit;
  std::string var;               // Var: the name; Lam: the binder
  std::optional<Prop> ann;       // Lam only, optional binder annotation
  std::vector<ProofTerm> kids;   // Lam: {body}; App/Pair: {l, r}; Fst/Snd: {t}

  static ProofTerm mkvar(std::string x) {
    ProofTerm t;
    t.kind = Kind::Var;
    t.var = std::move(x);
    return t;
  }
  static ProofTerm lam(std::string x, ProofTerm body, std::optional<Prop> ann = {}) {
    ProofTerm t;
    t.kind = Kind::Lam;
    t.var = std::move(x);
    t.ann = std::move(ann);
    t.kids.push_back(std::move(body));
    return t;
  }
  static ProofTerm app(ProofTerm f, ProofTerm x) {
    ProofTerm t;
    t.kind = Kind::App;
    t.kids.push_back(std::move(f));
    t.kids.push_back(std::move(x));
    return t;
  }
  static ProofTerm pair(ProofTerm a, ProofTerm b) {
    ProofTerm t;
    t.kind = Kind::Pair;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
  }
  static ProofTerm fst(ProofTerm x) {
    ProofTerm t;
    t.kind = Kind::Fst;
    t.kids.push_back(std::move(x));
    return t;
  }
  static ProofTerm snd(ProofTerm x) {
    ProofTerm t;
    t.kind = Kind::Snd;
    t.kids.push_back(std::move(x));
    return t;
  }
  static ProofTerm unit() { return ProofTerm{}; }

  bool operator==(const ProofTerm&) const = default;
};

inline void term_free_vars(const ProofTerm& t, std::set<std::string>& out) {
  switch (t.kind) {
    case ProofTerm::Kind::Var: out.insert(t.var); break;
    case ProofTerm::Kind::Lam: {
      std::set<std::string> inner;
      term_free_vars(t.kids[0], inner);
      inner.erase(t.var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    default:
      for (const ProofTerm& k : t.kids) term_free_vars(k, out);
  }
}

inline ProofTerm subst_term(const ProofTerm& body, const std::string& x, const ProofTerm& v) {
  switch (body.kind) {
    case ProofTerm::Kind::Var:
      return body.var == x ? v : body;
    case ProofTerm::Kind::Unit:
      return body;
    case ProofTerm::Kind::Lam: {
      if (body.var == x) return body;
      std::set<std::string> fv;
      term_free_vars(v, fv);
      std::set<std::string> bodyfv;
      term_free_vars(body.kids[0], bodyfv);
      if (!bodyfv.count(x)) return body;
      std::string binder = body.var;
      ProofTerm inner = body.kids[0];
      if (fv.count(binder)) {
        std::set<std::string> avoid = fv;
        avoid.insert(bodyfv.begin(), bodyfv.end());
        avoid.insert(x);
        std::string fresh = fresh_name(binder, avoid);
        inner = subst_term(inner, binder, ProofTerm::mkvar(fresh));
        binder = fresh;
      }
      return ProofTerm::lam(binder, subst_term(inner, x, v), body.ann);
    }
    default: {
      ProofTerm out = body;
      for (ProofTerm& k : out.kids) k = subst_term(k, x, v);
      return out;
    }
  }
}

// Canonical rendering with de Bruijn binders; the cycle detector keys on it.
namespace detail {

inline void canon_pterm(const ProofTerm& t, std::map<std::string, int> env, int depth,
                        std::string& out) {
  switch (t.kind) {
    case ProofTerm::Kind::Var: {
      auto it = env.find(t.var);
      out += it != env.end() ? "#" + std::to_string(it->second) : t.var;
      return;
    }
    case ProofTerm::Kind::Unit: out += "I"; return;
    case ProofTerm::Kind::Lam:
      out += "L.";
      env[t.var] = depth;
      canon_pterm(t.kids[0], std::move(env), depth + 1, out);
      return;
    case ProofTerm::Kind::App:
      out += "(";
      canon_pterm(t.kids[0], env, depth, out);
      out += " ";
      canon_pterm(t.kids[1], env, depth, out);
      out += ")";
      return;
    case ProofTerm::Kind::Pair:
      out += "<";
      canon_pterm(t.kids[0], env, depth, out);
      out += ",";
      canon_pterm(t.kids[1], env, depth, out);
      out += ">";
      return;
    case ProofTerm::Kind::Fst:
      out += "fst ";
      canon_pterm(t.kids[0], env, depth, out);
      return;
    case ProofTerm::Kind::Snd:
      out += "snd ";
      canon_pterm(t.kids[0], env, depth, out);
      return;
  }
}

}  // namespace detail

inline std::string canon_string(const ProofTerm& t) {
  std::string out;
  detail::canon_pterm(t, {}, 0, out);
  return out;
}

inline std::string print_proof_term(const ProofTerm& t) {
  switch (t.kind) {
    case ProofTerm::Kind::Var: return t.var;
    case ProofTerm::Kind::Unit: return "I";
    case ProofTerm::Kind::Lam:
      return "\\" + t.var + (t.ann ? " : " + print_prop(*t.ann) : "") + ". " +
             print_proof_term(t.kids[0]);
    case ProofTerm::Kind::App: {
      const ProofTerm& f = t.kids[0];
      const ProofTerm& x = t.kids[1];
      std::string fs = f.kind == ProofTerm::Kind::Lam ? "(" + print_proof_term(f) + ")"
                                                      : print_proof_term(f);
      bool xatom = x.kind == ProofTerm::Kind::Var || x.kind == ProofTerm::Kind::Unit ||
                   x.kind == ProofTerm::Kind::Pair;
      std::string xs = xatom ? print_proof_term(x) : "(" + print_proof_term(x) + ")";
      return fs + " " + xs;
    }
    case ProofTerm::Kind::Pair:
      return "<" + print_proof_term(t.kids[0]) + ", " + print_proof_term(t.kids[1]) + ">";
    case ProofTerm::Kind::Fst: return "fst(" + print_proof_term(t.kids[0]) + ")";
    case ProofTerm::Kind::Snd: return "snd(" + print_proof_term(t.kids[0]) + ")";
  }
  return "?";
}

// --- typing -------------------------------------------------------------------

using TypingContext = std::map<std::string, Prop>;

enum class TypeStatus { Accepted, Rejected, Unknown };

struct TypeVerdict {
  TypeStatus status = TypeStatus::Accepted;
  std::string message;
  bool ok() const { return status == TypeStatus::Accepted; }
};

namespace detail {

struct HeadResult {
  enum class Status { Match, Mismatch, Fuel };
  Status status;
  Prop value;
};

// Rewrites the root atom until the wanted connective appears. Inner atoms
// never change the head, so only root steps matter.
inline HeadResult head_normalize(Prop p, Prop::Kind want, const RewriteSystem& sys, int fuel) {
  int steps = 0;
  while (p.kind == Prop::Kind::Atom && p.kind != want) {
    const RewriteRule* r = sys.rule_for(p.name);
    if (!r || r->params.size() != p.args.size())
      return {HeadResult::Status::Mismatch, std::move(p)};
    if (steps++ >= fuel) return {HeadResult::Status::Fuel, std::move(p)};
    p = instantiate(*r, p.args);
  }
  return {p.kind == want ? HeadResult::Status::Match : HeadResult::Status::Mismatch,
          std::move(p)};
}

class TypeChecker {
 public:
  TypeChecker(const RewriteSystem& sys, int fuel) : sys_(sys), fuel_(fuel) {}

  TypeVerdict check(const ProofTerm& t, const TypingContext& ctx, const Prop& goal) {
    switch (t.kind) {
      case ProofTerm::Kind::Lam: {
        auto h = head_normalize(goal, Prop::Kind::Imp, sys_, fuel_);
        if (h.status == HeadResult::Status::Fuel)
          return {TypeStatus::Unknown, "goal head undecided within fuel"};
        if (h.status == HeadResult::Status::Mismatch)
          return {TypeStatus::Rejected,
                  "abstraction against non-implication '" + print_prop(goal) + "'"};
        if (t.ann) {
          auto c = congruent(*t.ann, h.value.lhs(), sys_, fuel_);
          if (c == Congruence::No)
            return {TypeStatus::Rejected, "annotation does not match the goal domain"};
          if (c == Congruence::Unknown)
            return {TypeStatus::Unknown, "annotation congruence undecided"};
        }
        TypingContext inner = ctx;
        inner[t.var] = h.value.lhs();
        return check(t.kids[0], inner, h.value.rhs());
      }
      case ProofTerm::Kind::Pair: {
        auto h = head_normalize(goal, Prop::Kind::And, sys_, fuel_);
        if (h.status == HeadResult::Status::Fuel)
          return {TypeStatus::Unknown, "goal head undecided within fuel"};
        if (h.status == HeadResult::Status::Mismatch)
          return {TypeStatus::Rejected,
                  "pair against non-conjunction '" + print_prop(goal) + "'"};
        TypeVerdict l = check(t.kids[0], ctx, h.value.lhs());
        if (!l.ok()) return l;
        return check(t.kids[1], ctx, h.value.rhs());
      }
      case ProofTerm::Kind::Unit: {
        auto h = head_normalize(goal, Prop::Kind::Top, sys_, fuel_);
        if (h.status == HeadResult::Status::Fuel)
          return {TypeStatus::Unknown, "goal head undecided within fuel"};
        if (h.status == HeadResult::Status::Mismatch)
          return {TypeStatus::Rejected, "unit against '" + print_prop(goal) + "'"};
        return {};
      }
      default: {
        Prop inferred;
        TypeVerdict v = infer(t, ctx, inferred);
        if (!v.ok()) return v;
        switch (congruent(inferred, goal, sys_, fuel_)) {
          case Congruence::Yes: return {};
          case Congruence::No:
            return {TypeStatus::Rejected, "term has type '" + print_prop(inferred) +
                                              "', goal is '" + print_prop(goal) + "'"};
          case Congruence::Unknown:
            return {TypeStatus::Unknown, "type congruence undecided within fuel"};
        }
        return {};
      }
    }
  }

  TypeVerdict infer(const ProofTerm& t, const TypingContext& ctx, Prop& out) {
    switch (t.kind) {
      case ProofTerm::Kind::Var: {
        auto it = ctx.find(t.var);
        if (it == ctx.end())
          return {TypeStatus::Rejected, "unbound proof variable '" + t.var + "'"};
        out = it->second;
        return {};
      }
      case ProofTerm::Kind::Unit:
        out = Prop::top();
        return {};
      case ProofTerm::Kind::Lam: {
        if (!t.ann)
          return {TypeStatus::Rejected,
                  "cannot infer the type of an unannotated abstraction"};
        TypingContext inner = ctx;
        inner[t.var] = *t.ann;
        Prop body;
        TypeVerdict v = infer(t.kids[0], inner, body);
        if (!v.ok()) return v;
        out = Prop::imp(*t.ann, std::move(body));
        return {};
      }
      case ProofTerm::Kind::App: {
        Prop fun;
        TypeVerdict v = infer(t.kids[0], ctx, fun);
        if (!v.ok()) return v;
        auto h = head_normalize(fun, Prop::Kind::Imp, sys_, fuel_);
        if (h.status == HeadResult::Status::Fuel)
          return {TypeStatus::Unknown, "function head undecided within fuel"};
        if (h.status == HeadResult::Status::Mismatch)
          return {TypeStatus::Rejected,
                  "application of a non-implication '" + print_prop(fun) + "'"};
        TypeVerdict arg = check(t.kids[1], ctx, h.value.lhs());
        if (!arg.ok()) return arg;
        out = h.value.rhs();
        return {};
      }
      case ProofTerm::Kind::Fst:
      case ProofTerm::Kind::Snd: {
        Prop pairty;
        TypeVerdict v = infer(t.kids[0], ctx, pairty);
        if (!v.ok()) return v;
        auto h = head_normalize(pairty, Prop::Kind::And, sys_, fuel_);
        if (h.status == HeadResult::Status::Fuel)
          return {TypeStatus::Unknown, "projection head undecided within fuel"};
        if (h.status == HeadResult::Status::Mismatch)
          return {TypeStatus::Rejected,
                  "projection from a non-conjunction '" + print_prop(pairty) + "'"};
        out = t.kind == ProofTerm::Kind::Fst ? h.value.lhs() : h.value.rhs();
        return {};
      }
      case ProofTerm::Kind::Pair:
        return {TypeStatus::Rejected, "cannot infer the type of a bare pair"};
    }
    return {TypeStatus::Rejected, "unreachable"};
  }

 private:
  const RewriteSystem& sys_;
  int fuel_;
};

}  // namespace detail

inline TypeVerdict type_check(const ProofTerm& t, const TypingContext& ctx, const Prop& goal,
                              const RewriteSystem& sys, int fuel) {
  return detail::TypeChecker(sys, fuel).check(t, ctx, goal);
}

// --- reduction ----------------------------------------------------------------

enum class Strategy { LeftmostOutermost, FullDevelopment };

inline bool is_redex(const ProofTerm& t) {
  return (t.kind == ProofTerm::Kind::App && t.kids[0].kind == ProofTerm::Kind::Lam) ||
         ((t.kind == ProofTerm::Kind::Fst || t.kind == ProofTerm::Kind::Snd) &&
          t.kids[0].kind == ProofTerm::Kind::Pair);
}

inline bool has_redex(const ProofTerm& t) {
  if (is_redex(t)) return true;
  for (const ProofTerm& k : t.kids)
    if (has_redex(k)) return true;
  return false;
}

namespace detail {

inline std::optional<ProofTerm> step_lo(const ProofTerm& t) {
  if (t.kind == ProofTerm::Kind::App && t.kids[0].kind == ProofTerm::Kind::Lam)
    return subst_term(t.kids[0].kids[0], t.kids[0].var, t.kids[1]);
  if ((t.kind == ProofTerm::Kind::Fst || t.kind == ProofTerm::Kind::Snd) &&
      t.kids[0].kind == ProofTerm::Kind::Pair)
    return t.kids[0].kids[t.kind == ProofTerm::Kind::Fst ? 0 : 1];
  for (size_t i = 0; i < t.kids.size(); ++i)
    if (auto r = step_lo(t.kids[i])) {
      ProofTerm out = t;
      out.kids[i] = std::move(*r);
      return out;
    }
  return std::nullopt;
}

// One full development: contract exactly the redexes present in the input,
// innermost results first. Whether a position fires is decided on the input
// term, so redexes created by the contraction itself wait for the next step.
inline ProofTerm develop(const ProofTerm& t) {
  switch (t.kind) {
    case ProofTerm::Kind::Var:
    case ProofTerm::Kind::Unit:
      return t;
    case ProofTerm::Kind::Lam:
      return ProofTerm::lam(t.var, develop(t.kids[0]), t.ann);
    case ProofTerm::Kind::Pair:
      return ProofTerm::pair(develop(t.kids[0]), develop(t.kids[1]));
    case ProofTerm::Kind::App: {
      bool fires = t.kids[0].kind == ProofTerm::Kind::Lam;
      ProofTerm f = develop(t.kids[0]);
      ProofTerm x = develop(t.kids[1]);
      if (fires) return subst_term(f.kids[0], f.var, x);
      return ProofTerm::app(std::move(f), std::move(x));
    }
    case ProofTerm::Kind::Fst:
    case ProofTerm::Kind::Snd: {
      bool fires = t.kids[0].kind == ProofTerm::Kind::Pair;
      ProofTerm inner = develop(t.kids[0]);
      if (fires) return inner.kids[t.kind == ProofTerm::Kind::Fst ? 0 : 1];
      ProofTerm out;
      out.kind = t.kind;
      out.kids.push_back(std::move(inner));
      return out;
    }
  }
  return t;
}

}  // namespace detail

// One step of the chosen strategy; nullopt on normal forms.
inline std::optional<ProofTerm> reduce_step(const ProofTerm& t, Strategy strategy) {
  if (strategy == Strategy::LeftmostOutermost) return detail::step_lo(t);
  if (!has_redex(t)) return std::nullopt;
  return detail::develop(t);
}

struct ReduceResult {
  enum class Status { Normal, Cycle, FuelExhausted };
  Status status = Status::Normal;
  ProofTerm term;                 // the normal form, or the last term reached
  std::vector<ProofTerm> cycle;   // the repeating segment, first occurrence onward
  int steps = 0;
};

// Iterates reduce_step with a seen-set of canonical forms; a revisit yields
// the repeating segment.
inline ReduceResult reduce(const ProofTerm& t, int fuel,
                           Strategy strategy = Strategy::FullDevelopment) {
  ReduceResult res;
  std::vector<ProofTerm> history{t};
  std::map<std::string, size_t> seen{{canon_string(t), 0}};
  ProofTerm cur = t;
  for (int i = 0; i < fuel; ++i) {
    auto next = reduce_step(cur, strategy);
    if (!next) {
      res.status = ReduceResult::Status::Normal;
      res.term = std::move(cur);
      res.steps = i;
      return res;
    }
    cur = std::move(*next);
    ++res.steps;
    std::string key = canon_string(cur);
    auto it = seen.find(key);
    if (it != seen.end()) {
      res.status = ReduceResult::Status::Cycle;
      res.term = cur;
      res.cycle.assign(history.begin() + static_cast<long>(it->second), history.end());
      return res;
    }
    seen[key] = history.size();
    history.push_back(cur);
  }
  res.status = ReduceResult::Status::FuelExhausted;
  res.term = std::move(cur);
  return res;
}

// --- the bundled looping example -----------------------------------------------

struct LoopExample {
  ProofTerm t1, t2, redex;   // redex = t1 applied to t2
  RewriteSystem system;      // P -> (top => P => P) /\ (top => P => P)
  Prop type_t1;              // (top => P) => P
  Prop type_t2;              // top => P, through the congruence
};

inline LoopExample build_loop_example() {
  LoopExample ex;
  Prop P = Prop::atom("P");
  Prop clause = wrap2(Prop::top(), P);  // (top => P) => P
  ex.system = make_system({{"P", {}, Prop::and_(clause, clause)}});

  ProofTerm x = ProofTerm::mkvar("x");
  ProofTerm xi = ProofTerm::app(x, ProofTerm::unit());
  ex.t1 = ProofTerm::lam(
      "x", ProofTerm::app(ProofTerm::fst(xi), ProofTerm::lam("z", xi)));
  ex.t2 = ProofTerm::lam("z", ProofTerm::pair(ex.t1, ex.t1));
  ex.redex = ProofTerm::app(ex.t1, ex.t2);
  ex.type_t1 = clause;
  ex.type_t2 = Prop::imp(Prop::top(), P);
  return ex;
}

}  // namespace modulo
