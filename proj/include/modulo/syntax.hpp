#pragma once

// First-order terms and propositions with capture-avoiding substitution.
// Values are immutable trees; all operations return fresh values.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modulo {

struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  std::string name;         // variable name or function symbol
  std::vector<Term> args;   // App only

  static Term var(std::string n) {
    Term t;
    t.kind = Kind::Var;
    t.name = std::move(n);
    return t;
  }
  static Term app(std::string f, std::vector<Term> as = {}) {
    Term t;
    t.kind = Kind::App;
    t.name = std::move(f);
    t.args = std::move(as);
    return t;
  }
  bool operator==(const Term&) const = default;
};

struct Prop {
  enum class Kind { Atom, Top, Bot, Imp, And, Or, Forall, Exists };
  Kind kind = Kind::Top;
  std::string name;         // Atom: predicate symbol; Forall/Exists: bound variable
  std::vector<Term> args;   // Atom only
  std::vector<Prop> kids;   // Imp/And/Or: {lhs, rhs}; Forall/Exists: {body}

  static Prop atom(std::string p, std::vector<Term> as = {}) {
    Prop q;
    q.kind = Kind::Atom;
    q.name = std::move(p);
    q.args = std::move(as);
    return q;
  }
  static Prop top() { Prop q; q.kind = Kind::Top; return q; }
  static Prop bot() { Prop q; q.kind = Kind::Bot; return q; }
  static Prop binary(Kind k, Prop a, Prop b) {
    Prop q;
    q.kind = k;
    q.kids.push_back(std::move(a));
    q.kids.push_back(std::move(b));
    return q;
  }
  static Prop imp(Prop a, Prop b) { return binary(Kind::Imp, std::move(a), std::move(b)); }
  static Prop and_(Prop a, Prop b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static Prop or_(Prop a, Prop b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static Prop quant(Kind k, std::string x, Prop body) {
    Prop q;
    q.kind = k;
    q.name = std::move(x);
    q.kids.push_back(std::move(body));
    return q;
  }
  static Prop forall(std::string x, Prop body) {
    return quant(Kind::Forall, std::move(x), std::move(body));
  }
  static Prop exists(std::string x, Prop body) {
    return quant(Kind::Exists, std::move(x), std::move(body));
  }

  bool is_binary() const { return kind == Kind::Imp || kind == Kind::And || kind == Kind::Or; }
  bool is_quant() const { return kind == Kind::Forall || kind == Kind::Exists; }
  const Prop& lhs() const { return kids[0]; }
  const Prop& rhs() const { return kids[1]; }
  const Prop& body() const { return kids[0]; }

  bool operator==(const Prop&) const = default;
};

// ~B is not primitive; it abbreviates B => bot.
inline Prop neg(Prop b) { return Prop::imp(std::move(b), Prop::bot()); }

struct Signature {
  std::map<std::string, int> functions;
  std::map<std::string, int> predicates;

  void add_function(const std::string& f, int arity) {
    if (predicates.count(f))
      throw std::runtime_error("symbol '" + f + "' already declared as predicate");
    auto it = functions.find(f);
    if (it != functions.end() && it->second != arity)
      throw std::runtime_error("function '" + f + "' redeclared with different arity");
    functions[f] = arity;
  }
  void add_predicate(const std::string& p, int arity) {
    if (functions.count(p))
      throw std::runtime_error("symbol '" + p + "' already declared as function");
    auto it = predicates.find(p);
    if (it != predicates.end() && it->second != arity)
      throw std::runtime_error("predicate '" + p + "' redeclared with different arity");
    predicates[p] = arity;
  }
  void merge(const Signature& other) {
    for (auto& [f, n] : other.functions) add_function(f, n);
    for (auto& [p, n] : other.predicates) add_predicate(p, n);
  }
};

// --- free variables -------------------------------------------------------

inline void free_vars_into(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    out.insert(t.name);
  } else {
    for (const Term& a : t.args) free_vars_into(a, out);
  }
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  free_vars_into(t, out);
  return out;
}

inline void free_vars_into(const Prop& p, std::set<std::string>& out) {
  switch (p.kind) {
    case Prop::Kind::Atom:
      for (const Term& a : p.args) free_vars_into(a, out);
      break;
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      break;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or:
      free_vars_into(p.lhs(), out);
      free_vars_into(p.rhs(), out);
      break;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      std::set<std::string> inner;
      free_vars_into(p.body(), inner);
      inner.erase(p.name);
      out.insert(inner.begin(), inner.end());
      break;
    }
  }
}

inline std::set<std::string> free_vars(const Prop& p) {
  std::set<std::string> out;
  free_vars_into(p, out);
  return out;
}

// Every variable name bound by a quantifier anywhere in p.
inline void binder_names_into(const Prop& p, std::set<std::string>& out) {
  if (p.is_quant()) {
    out.insert(p.name);
    binder_names_into(p.body(), out);
  } else if (p.is_binary()) {
    binder_names_into(p.lhs(), out);
    binder_names_into(p.rhs(), out);
  }
}

inline std::set<std::string> binder_names(const Prop& p) {
  std::set<std::string> out;
  binder_names_into(p, out);
  return out;
}

// --- symbol collection ----------------------------------------------------

inline void collect_symbols(const Term& t, std::set<std::string>& funs) {
  if (t.kind == Term::Kind::App) {
    funs.insert(t.name);
    for (const Term& a : t.args) collect_symbols(a, funs);
  }
}

inline void collect_symbols(const Prop& p, std::set<std::string>& funs,
                            std::set<std::string>& preds) {
  switch (p.kind) {
    case Prop::Kind::Atom:
      preds.insert(p.name);
      for (const Term& a : p.args) collect_symbols(a, funs);
      break;
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      break;
    default:
      for (const Prop& k : p.kids) collect_symbols(k, funs, preds);
      break;
  }
}

// --- substitution ---------------------------------------------------------

// Deterministic freshening: append primes until the name avoids the set.
inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string cand = base;
  while (avoid.count(cand)) cand += '\'';
  return cand;
}

inline Term substitute(const Term& t, const std::map<std::string, Term>& sub) {
  if (t.kind == Term::Kind::Var) {
    auto it = sub.find(t.name);
    return it == sub.end() ? t : it->second;
  }
  Term out = Term::app(t.name);
  out.args.reserve(t.args.size());
  for (const Term& a : t.args) out.args.push_back(substitute(a, sub));
  return out;
}

inline Prop substitute(const Prop& p, const std::map<std::string, Term>& sub) {
  switch (p.kind) {
    case Prop::Kind::Atom: {
      Prop out = Prop::atom(p.name);
      out.args.reserve(p.args.size());
      for (const Term& a : p.args) out.args.push_back(substitute(a, sub));
      return out;
    }
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      return p;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return Prop::binary(p.kind, substitute(p.lhs(), sub), substitute(p.rhs(), sub));
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      std::map<std::string, Term> inner = sub;
      inner.erase(p.name);  // shadowed
      // Restrict to entries whose variable actually occurs free in the body.
      std::set<std::string> bodyfv = free_vars(p.body());
      for (auto it = inner.begin(); it != inner.end();) {
        if (!bodyfv.count(it->first))
          it = inner.erase(it);
        else
          ++it;
      }
      if (inner.empty()) return p;
      std::set<std::string> clash;
      for (auto& [v, t] : inner) free_vars_into(t, clash);
      std::string x = p.name;
      Prop body = p.body();
      if (clash.count(x)) {
        // Binder would capture a substituted term: rename it first.
        std::set<std::string> avoid = clash;
        avoid.insert(bodyfv.begin(), bodyfv.end());
        for (auto& [v, t] : inner) avoid.insert(v);
        std::string x2 = fresh_name(x, avoid);
        body = substitute(body, {{x, Term::var(x2)}});
        x = x2;
      }
      return Prop::quant(p.kind, x, substitute(body, inner));
    }
  }
  throw std::logic_error("unreachable");
}

inline Prop substitute(const Prop& p, const std::string& var, const Term& t) {
  return substitute(p, std::map<std::string, Term>{{var, t}});
}

// --- alpha equivalence ----------------------------------------------------

namespace detail {

inline bool alpha_eq_term(const Term& a, const Term& b,
                          const std::map<std::string, std::string>& envl,
                          const std::map<std::string, std::string>& envr) {
  if (a.kind != b.kind) return false;
  if (a.kind == Term::Kind::Var) {
    auto il = envl.find(a.name);
    auto ir = envr.find(b.name);
    if (il != envl.end() || ir != envr.end())
      return il != envl.end() && ir != envr.end() && il->second == ir->second;
    return a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!alpha_eq_term(a.args[i], b.args[i], envl, envr)) return false;
  return true;
}

inline bool alpha_eq_prop(const Prop& a, const Prop& b,
                          std::map<std::string, std::string> envl,
                          std::map<std::string, std::string> envr, int depth) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Prop::Kind::Atom:
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (size_t i = 0; i < a.args.size(); ++i)
        if (!alpha_eq_term(a.args[i], b.args[i], envl, envr)) return false;
      return true;
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      return true;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return alpha_eq_prop(a.lhs(), b.lhs(), envl, envr, depth) &&
             alpha_eq_prop(a.rhs(), b.rhs(), envl, envr, depth);
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      std::string marker = "#" + std::to_string(depth);
      envl[a.name] = marker;
      envr[b.name] = marker;
      return alpha_eq_prop(a.body(), b.body(), std::move(envl), std::move(envr), depth + 1);
    }
  }
  return false;
}

}  // namespace detail

inline bool alpha_eq(const Prop& a, const Prop& b) {
  return detail::alpha_eq_prop(a, b, {}, {}, 0);
}

// Canonical rendering with de Bruijn-style binders; alpha-equivalent
// propositions map to the same string. Used as a set/multiset key.
namespace detail {

inline void canon_term(const Term& t, const std::map<std::string, int>& env, std::string& out) {
  if (t.kind == Term::Kind::Var) {
    auto it = env.find(t.name);
    if (it != env.end())
      out += "#" + std::to_string(it->second);
    else
      out += t.name;
    return;
  }
  out += t.name;
  out += '(';
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ',';
    canon_term(t.args[i], env, out);
  }
  out += ')';
}

inline void canon_prop(const Prop& p, std::map<std::string, int> env, int depth,
                       std::string& out) {
  switch (p.kind) {
    case Prop::Kind::Atom:
      out += p.name;
      out += '(';
      for (size_t i = 0; i < p.args.size(); ++i) {
        if (i) out += ',';
        canon_term(p.args[i], env, out);
      }
      out += ')';
      return;
    case Prop::Kind::Top: out += "T"; return;
    case Prop::Kind::Bot: out += "F"; return;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      out += p.kind == Prop::Kind::Imp ? "I" : p.kind == Prop::Kind::And ? "A" : "O";
      out += '(';
      canon_prop(p.lhs(), env, depth, out);
      out += ',';
      canon_prop(p.rhs(), env, depth, out);
      out += ')';
      return;
    }
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      out += p.kind == Prop::Kind::Forall ? "V" : "E";
      env[p.name] = depth;
      out += '.';
      canon_prop(p.body(), std::move(env), depth + 1, out);
      return;
    }
  }
}

}  // namespace detail

inline std::string canon_string(const Prop& p) {
  std::string out;
  detail::canon_prop(p, {}, 0, out);
  return out;
}

// True iff no free variable of a occurs as a quantifier binder in b,
// so inserting a anywhere in b cannot capture.
inline bool is_unbound(const Prop& a, const Prop& b) {
  std::set<std::string> fv = free_vars(a);
  std::set<std::string> bound = binder_names(b);
  for (const std::string& v : fv)
    if (bound.count(v)) return false;
  return true;
}

// --- sequents ---------------------------------------------------------------

enum class Flavor { Classical, Intuitionistic };

struct Sequent {
  std::vector<Prop> left;
  std::vector<Prop> right;

  bool operator==(const Sequent&) const = default;
};

inline bool multiset_alpha_eq(const std::vector<Prop>& a, const std::vector<Prop>& b) {
  if (a.size() != b.size()) return false;
  std::multiset<std::string> ka, kb;
  for (const Prop& p : a) ka.insert(canon_string(p));
  for (const Prop& p : b) kb.insert(canon_string(p));
  return ka == kb;
}

inline bool sequent_alpha_eq(const Sequent& a, const Sequent& b) {
  return multiset_alpha_eq(a.left, b.left) && multiset_alpha_eq(a.right, b.right);
}

}  // namespace modulo
