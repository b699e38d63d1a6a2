#pragma once

// Algebra-valued structures over a finite domain: function symbols get
// tables into the domain, predicate symbols get tables into an algebra
// carrier. Denotation is the usual clause-by-clause evaluation; quantifiers
// collect the value set over the whole domain and look up the subset table.

#include <memory>
#include <optional>

#include "modulo/atrans.hpp"
#include "modulo/gen.hpp"
#include "modulo/pha.hpp"
#include "modulo/rewrite.hpp"
#include "modulo/syntax.hpp"

namespace modulo {

struct SemanticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SymbolTable {
  int arity = 0;
  std::vector<int> values;  // m^arity entries, row-major in argument order

  bool operator==(const SymbolTable&) const = default;
};

struct Structure {
  std::shared_ptr<const FinitePHA> algebra;
  int m = 1;  // domain {0..m-1}, never empty
  std::map<std::string, SymbolTable> fhat;  // into the domain
  std::map<std::string, SymbolTable> phat;  // into the algebra carrier

  Structure with_algebra(std::shared_ptr<const FinitePHA> alg) const {
    Structure out = *this;
    out.algebra = std::move(alg);
    return out;
  }
};

using Assignment = std::map<std::string, int>;

inline bool algebra_equal(const FinitePHA& a, const FinitePHA& b) {
  return a.n == b.n && a.leq == b.leq && a.sqle == b.sqle && a.top == b.top &&
         a.bot == b.bot && a.imp == b.imp && a.meet == b.meet && a.join == b.join &&
         a.forall == b.forall && a.exists == b.exists;
}

// All tables filled with bot / domain element 0.
inline Structure default_structure(std::shared_ptr<const FinitePHA> alg, int m,
                                   const std::map<std::string, int>& funs,
                                   const std::map<std::string, int>& preds) {
  if (m < 1) throw SemanticsError("domain must be non-empty");
  Structure s;
  s.algebra = std::move(alg);
  s.m = m;
  auto entries = [&](int arity) {
    size_t e = 1;
    for (int i = 0; i < arity; ++i) e *= static_cast<size_t>(m);
    return e;
  };
  for (auto& [f, arity] : funs) s.fhat[f] = {arity, std::vector<int>(entries(arity), 0)};
  for (auto& [p, arity] : preds)
    s.phat[p] = {arity, std::vector<int>(entries(arity), s.algebra->bot)};
  return s;
}

namespace detail {

inline size_t table_index(const std::vector<int>& args, int m) {
  size_t idx = 0;
  for (int a : args) idx = idx * static_cast<size_t>(m) + static_cast<size_t>(a);
  return idx;
}

}  // namespace detail

inline int eval_term(const Term& t, const Structure& s, const Assignment& phi) {
  if (t.kind == Term::Kind::Var) {
    auto it = phi.find(t.name);
    if (it == phi.end()) throw SemanticsError("unassigned variable '" + t.name + "'");
    return it->second;
  }
  auto it = s.fhat.find(t.name);
  if (it == s.fhat.end()) throw SemanticsError("no table for function '" + t.name + "'");
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const Term& a : t.args) args.push_back(eval_term(a, s, phi));
  return it->second.values[detail::table_index(args, s.m)];
}

inline int eval_prop(const Prop& p, const Structure& s, const Assignment& phi) {
  const FinitePHA& B = *s.algebra;
  switch (p.kind) {
    case Prop::Kind::Atom: {
      auto it = s.phat.find(p.name);
      if (it == s.phat.end())
        throw SemanticsError("no table for predicate '" + p.name + "'");
      std::vector<int> args;
      args.reserve(p.args.size());
      for (const Term& a : p.args) args.push_back(eval_term(a, s, phi));
      return it->second.values[detail::table_index(args, s.m)];
    }
    case Prop::Kind::Top: return B.top;
    case Prop::Kind::Bot: return B.bot;
    case Prop::Kind::Imp: return B.imp_(eval_prop(p.lhs(), s, phi), eval_prop(p.rhs(), s, phi));
    case Prop::Kind::And: return B.and_(eval_prop(p.lhs(), s, phi), eval_prop(p.rhs(), s, phi));
    case Prop::Kind::Or: return B.or_(eval_prop(p.lhs(), s, phi), eval_prop(p.rhs(), s, phi));
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      uint32_t mask = 0;
      Assignment inner = phi;
      for (int e = 0; e < s.m; ++e) {
        inner[p.name] = e;
        mask |= 1u << eval_prop(p.body(), s, inner);
      }
      return p.kind == Prop::Kind::Forall ? B.fa(mask) : B.ex(mask);
    }
  }
  throw std::logic_error("unreachable");
}

// --- the model condition ----------------------------------------------------

struct ModelReport {
  bool ok = true;
  std::string failure;
};

// Checks the condition rule by rule: for every rule P(xs) -> F and every
// assignment of xs over the domain, the two sides denote the same element.
// Denotation is compositional and the congruence is the closure of the
// rules, so rule-level equality under all assignments gives the congruence-
// level condition; the sampled test alongside this module exercises that
// reduction.
inline ModelReport is_model(const Structure& s, const RewriteSystem& sys) {
  for (const RewriteRule& r : sys.rules()) {
    auto it = s.phat.find(r.head);
    if (it == s.phat.end())
      return {false, "no table for rewritten predicate '" + r.head + "'"};
    int k = static_cast<int>(r.params.size());
    std::vector<int> tuple(k, 0);
    for (;;) {
      Assignment phi;
      for (int i = 0; i < k; ++i) phi[r.params[i]] = tuple[i];
      int lhs = it->second.values[detail::table_index(tuple, s.m)];
      int rhs = eval_prop(r.rhs, s, phi);
      if (lhs != rhs) {
        std::string at = "(";
        for (int i = 0; i < k; ++i) at += (i ? "," : "") + std::to_string(tuple[i]);
        return {false, "rule for '" + r.head + "' fails at " + at + "): " +
                           std::to_string(lhs) + " vs " + std::to_string(rhs)};
      }
      int i = k - 1;
      while (i >= 0 && tuple[i] == s.m - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
  }
  return {};
}

// --- grafting ---------------------------------------------------------------

// Symbol-wise combination: symbols occurring in `a` take their tables from
// m0, all others from m1. Both structures must interpret the same symbols
// over the same algebra and domain.
inline Structure graft(const Structure& m0, const Structure& m1, const Prop& a) {
  if (m0.m != m1.m || !algebra_equal(*m0.algebra, *m1.algebra))
    throw SemanticsError("grafted structures must share the algebra and domain");
  auto same_symbols = [](const std::map<std::string, SymbolTable>& x,
                         const std::map<std::string, SymbolTable>& y) {
    if (x.size() != y.size()) return false;
    for (auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end() || it->second.arity != v.arity) return false;
    }
    return true;
  };
  if (!same_symbols(m0.fhat, m1.fhat) || !same_symbols(m0.phat, m1.phat))
    throw SemanticsError("grafted structures must interpret the same symbols");
  std::set<std::string> funs, preds;
  collect_symbols(a, funs, preds);
  Structure out = m1;
  for (const std::string& f : funs)
    if (auto it = m0.fhat.find(f); it != m0.fhat.end()) out.fhat[f] = it->second;
  for (const std::string& p : preds)
    if (auto it = m0.phat.find(p); it != m0.phat.end()) out.phat[p] = it->second;
  return out;
}

struct SampledReport {
  bool ok = true;
  int samples = 0;
  std::string failure;
};

namespace detail {

inline SymbolPool pool_from_structure(const Structure& s,
                                      const std::set<std::string>* only_preds,
                                      const std::set<std::string>* only_funs,
                                      bool complement) {
  SymbolPool pool;
  for (auto& [p, t] : s.phat) {
    bool in = only_preds && only_preds->count(p);
    if (only_preds == nullptr || in != complement) pool.preds.push_back({p, t.arity});
  }
  for (auto& [f, t] : s.fhat) {
    bool in = only_funs && only_funs->count(f);
    if (only_funs == nullptr || in != complement) pool.funs.push_back({f, t.arity});
  }
  return pool;
}

inline Assignment random_assignment(const Prop& p, int m, std::mt19937_64& rng) {
  Assignment phi;
  std::uniform_int_distribution<int> d(0, m - 1);
  for (const std::string& v : free_vars(p)) phi[v] = d(rng);
  return phi;
}

}  // namespace detail

// Evaluates generated propositions of the two symbol classes in the graft
// and in the structure the class should agree with.
inline SampledReport check_grafting(const Structure& m0, const Structure& m1, const Prop& a,
                                    int samples, uint64_t seed = 1) {
  Structure m2 = graft(m0, m1, a);
  std::set<std::string> afuns, apreds;
  collect_symbols(a, afuns, apreds);

  SampledReport rep;
  PropGen gen_in(detail::pool_from_structure(m2, &apreds, &afuns, false), seed);
  PropGen gen_out(detail::pool_from_structure(m2, &apreds, &afuns, true), seed + 1);
  for (int i = 0; i < samples; ++i) {
    Prop inside = gen_in.prop(3);
    Assignment phi = detail::random_assignment(inside, m2.m, gen_in.rng());
    ++rep.samples;
    if (eval_prop(inside, m2, phi) != eval_prop(inside, m0, phi))
      return {false, rep.samples,
              "graft disagrees with the source structure on '" + print_prop(inside) + "'"};
    Prop outside = gen_out.prop(3);
    phi = detail::random_assignment(outside, m2.m, gen_out.rng());
    ++rep.samples;
    if (eval_prop(outside, m2, phi) != eval_prop(outside, m1, phi))
      return {false, rep.samples,
              "graft disagrees with the target structure on '" + print_prop(outside) + "'"};
  }
  return rep;
}

// Two routes to the same element: translate the proposition and evaluate it
// in the original algebra, or evaluate it unchanged in the algebra
// translated at the denotation of the parameter. The same structure tables
// serve both readings.
inline SampledReport check_translation_agreement(const Structure& s, const Prop& a, int samples,
                                   uint64_t seed = 1, int depth = 4) {
  if (!free_vars(a).empty())
    throw TranslationError("translation parameter must be closed");
  int ahat = eval_prop(a, s, {});
  auto translated = std::make_shared<FinitePHA>(a_translate(*s.algebra, ahat));
  Structure s_t = s.with_algebra(translated);
  TranslationContext ctx = TranslationContext::make(a);

  SampledReport rep;
  PropGen gen(detail::pool_from_structure(s, nullptr, nullptr, false), seed);
  for (int i = 0; i < samples; ++i) {
    Prop b = gen.prop(depth);
    Assignment phi = detail::random_assignment(b, s.m, gen.rng());
    ++rep.samples;
    int via_syntax = eval_prop(atrans_prop(b, ctx), s, phi);
    int via_algebra = eval_prop(b, s_t, phi);
    if (via_syntax != via_algebra)
      return {false, rep.samples,
              "translation routes disagree on '" + print_prop(b) + "': " +
                  std::to_string(via_syntax) + " vs " + std::to_string(via_algebra)};
  }
  return rep;
}

// --- model search -----------------------------------------------------------

struct SearchResult {
  enum class Status { Found, None, BudgetExhausted };
  Status status = Status::None;
  std::optional<Structure> structure;
  long long examined = 0;
};

// Exhaustive enumeration of interpretation tables, bounded by `budget`
// candidate structures. Function tables vary slowest; predicate tables are
// propagated first where a rule forces them (a rule P(xs) -> F whose
// predicates are all already determined pins the whole P table to the
// denotation of F) and the rest are enumerated fastest. Enumeration order
// is canonical, so single-threaded results are deterministic.
inline SearchResult model_search(const RewriteSystem& sys,
                                 std::shared_ptr<const FinitePHA> alg, int m,
                                 long long budget,
                                 const std::map<std::string, SymbolTable>& fixed_preds = {}) {
  if (m < 1) throw SemanticsError("domain must be non-empty");
  const int n = alg->n;

  // Signature of the system plus anything pinned by the caller.
  std::map<std::string, int> funs, preds;
  for (const RewriteRule& r : sys.rules()) {
    preds[r.head] = static_cast<int>(r.params.size());
    struct Walk {
      std::map<std::string, int>& funs;
      std::map<std::string, int>& preds;
      void term(const Term& t) {
        if (t.kind == Term::Kind::App) {
          funs[t.name] = static_cast<int>(t.args.size());
          for (const Term& a : t.args) term(a);
        }
      }
      void prop(const Prop& p) {
        if (p.kind == Prop::Kind::Atom) {
          preds[p.name] = static_cast<int>(p.args.size());
          for (const Term& a : p.args) term(a);
        } else {
          for (const Prop& k : p.kids) prop(k);
        }
      }
    } walk{funs, preds};
    walk.prop(r.rhs);
  }
  for (auto& [p, t] : fixed_preds) preds[p] = t.arity;

  auto entries = [&](int arity) {
    size_t e = 1;
    for (int i = 0; i < arity; ++i) e *= static_cast<size_t>(m);
    return e;
  };

  std::vector<std::pair<std::string, int>> fun_list(funs.begin(), funs.end());
  SearchResult res;

  Structure s;
  s.algebra = alg;
  s.m = m;
  for (auto& [f, arity] : funs) s.fhat[f] = {arity, std::vector<int>(entries(arity), 0)};

  // Odometer over all function tables at once.
  std::vector<std::vector<int>*> fun_cells;
  for (auto& [f, arity] : fun_list) fun_cells.push_back(&s.fhat[f].values);

  auto advance_functions = [&]() -> bool {
    for (auto* cells : fun_cells)
      for (int& v : *cells) {
        if (v + 1 < m) { ++v; return true; }
        v = 0;
      }
    return false;
  };

  do {
    // Forced predicates: fixed ones, then closure under fully-determined
    // rules.
    std::map<std::string, SymbolTable> determined = fixed_preds;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const RewriteRule& r : sys.rules()) {
        if (determined.count(r.head)) continue;
        std::set<std::string> fs, ps;
        collect_symbols(r.rhs, fs, ps);
        bool ready = true;
        for (const std::string& p : ps)
          if (!determined.count(p)) { ready = false; break; }
        if (!ready) continue;
        Structure probe = s;
        probe.phat = determined;
        int k = static_cast<int>(r.params.size());
        SymbolTable table{k, std::vector<int>(entries(k), 0)};
        std::vector<int> tuple(k, 0);
        for (;;) {
          Assignment phi;
          for (int i = 0; i < k; ++i) phi[r.params[i]] = tuple[i];
          table.values[detail::table_index(tuple, m)] = eval_prop(r.rhs, probe, phi);
          int i = k - 1;
          while (i >= 0 && tuple[i] == m - 1) tuple[i--] = 0;
          if (i < 0) break;
          ++tuple[i];
        }
        determined[r.head] = std::move(table);
        changed = true;
      }
    }

    std::vector<std::pair<std::string, int>> open;
    for (auto& [p, arity] : preds)
      if (!determined.count(p)) open.push_back({p, arity});

    s.phat = determined;
    for (auto& [p, arity] : open)
      s.phat[p] = {arity, std::vector<int>(entries(arity), 0)};
    std::vector<std::vector<int>*> pred_cells;
    for (auto& [p, arity] : open) pred_cells.push_back(&s.phat[p].values);

    auto advance_preds = [&]() -> bool {
      for (auto* cells : pred_cells)
        for (int& v : *cells) {
          if (v + 1 < n) { ++v; return true; }
          v = 0;
        }
      return false;
    };

    do {
      if (++res.examined > budget) {
        res.status = SearchResult::Status::BudgetExhausted;
        return res;
      }
      if (is_model(s, sys).ok) {
        res.status = SearchResult::Status::Found;
        res.structure = s;
        return res;
      }
    } while (advance_preds());
  } while (advance_functions());

  res.status = SearchResult::Status::None;
  return res;
}

// --- stability construction --------------------------------------------------

struct WitnessResult {
  SearchResult::Status status = SearchResult::Status::None;
  std::optional<Structure> structure;  // models the translated system when set
  std::string note;
};

// Builds a model of the translated system from a model of the original one:
// pick a base structure, translate the algebra at the denotation of `a`,
// search a model of the original system there, then graft the base tables
// for a's symbols on top and read the result back in the original algebra.
inline WitnessResult stability_witness(const RewriteSystem& sys, const Prop& a,
                                       std::shared_ptr<const FinitePHA> alg, int m,
                                       long long budget) {
  if (!free_vars(a).empty())
    throw TranslationError("translation parameter must be closed");
  if (!r_compatible(a, sys))
    throw TranslationError("translation parameter shares symbols with the system");

  std::map<std::string, int> funs, preds;
  {
    std::set<std::string> fs, ps;
    collect_symbols(a, fs, ps);
    struct Walk {
      std::map<std::string, int>& funs;
      std::map<std::string, int>& preds;
      void term(const Term& t) {
        if (t.kind == Term::Kind::App) {
          funs[t.name] = static_cast<int>(t.args.size());
          for (const Term& x : t.args) term(x);
        }
      }
      void prop(const Prop& p) {
        if (p.kind == Prop::Kind::Atom) {
          preds[p.name] = static_cast<int>(p.args.size());
          for (const Term& x : p.args) term(x);
        } else {
          for (const Prop& k : p.kids) prop(k);
        }
      }
    } walk{funs, preds};
    walk.prop(a);
  }

  Structure m0 = default_structure(alg, m, funs, preds);
  int ahat = eval_prop(a, m0, {});
  auto translated = std::make_shared<FinitePHA>(a_translate(*alg, ahat));

  SearchResult found = model_search(sys, translated, m, budget);
  WitnessResult out;
  out.status = found.status;
  if (found.status != SearchResult::Status::Found) return out;

  // Extend the found structure to the union signature and read it in the
  // original algebra; the carrier is shared so the tables transfer as-is.
  Structure m1 = found.structure->with_algebra(alg);
  for (auto& [f, t] : m0.fhat) m1.fhat.emplace(f, t);
  for (auto& [p, t] : m0.phat) m1.phat.emplace(p, t);
  for (auto& [f, t] : m1.fhat) m0.fhat.emplace(f, t);
  for (auto& [p, t] : m1.phat) m0.phat.emplace(p, t);

  Structure m2 = graft(m0, m1, a);
  ModelReport check = is_model(m2, atrans_system(sys, a));
  if (!check.ok) {
    out.status = SearchResult::Status::None;
    out.note = "grafted structure failed the translated system: " + check.failure;
    return out;
  }
  out.structure = std::move(m2);
  return out;
}

// --- finite probe -------------------------------------------------------------

struct ProbeRow {
  std::string algebra;
  int m = 1;
  SearchResult::Status status = SearchResult::Status::None;
  long long examined = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  // A single None row refutes the universal model-existence property; rows
  // that are all Found are evidence only, since only finitely many algebras
  // were probed.
  bool refuted() const {
    for (const ProbeRow& r : rows)
      if (r.status == SearchResult::Status::None) return true;
    return false;
  }
  bool all_found() const {
    for (const ProbeRow& r : rows)
      if (r.status != SearchResult::Status::Found) return false;
    return !rows.empty();
  }
};

inline ProbeReport superconsistency_probe(const RewriteSystem& sys,
                                          const std::vector<FinitePHA>& algebras,
                                          const std::vector<int>& domain_sizes,
                                          long long budget) {
  ProbeReport rep;
  for (const FinitePHA& B : algebras) {
    auto alg = std::make_shared<FinitePHA>(B);
    for (int m : domain_sizes) {
      SearchResult r = model_search(sys, alg, m, budget);
      rep.rows.push_back({B.name, m, r.status, r.examined});
    }
  }
  return rep;
}

}  // namespace modulo
