#pragma once

// Translation of propositions and rewrite systems against a parameter
// proposition `a`: every connective and quantifier body B becomes
// (B => a) => a, written wrap2 below, while atoms, top and bot are kept.
// The translation commutes with rewriting: translating a system's
// right-hand sides makes the translated system simulate the original
// step for step.

#include <optional>

#include "modulo/rewrite.hpp"
#include "modulo/syntax.hpp"

namespace modulo {

struct TranslationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TranslationContext {
  Prop a;
  bool require_closed = true;

  static TranslationContext make(Prop a, bool require_closed = true) {
    if (require_closed && !free_vars(a).empty())
      throw TranslationError("translation parameter must be closed (free: '" +
                             *free_vars(a).begin() + "')");
    return TranslationContext{std::move(a), require_closed};
  }
};

// (b => a) => a
inline Prop wrap2(Prop b, const Prop& a) {
  return Prop::imp(Prop::imp(std::move(b), a), a);
}
// b => a
inline Prop wrap1(Prop b, const Prop& a) { return Prop::imp(std::move(b), a); }

inline Prop atrans_prop(const Prop& b, const TranslationContext& ctx) {
  if (!ctx.require_closed && !is_unbound(ctx.a, b))
    throw TranslationError("a free variable of the parameter is bound in the translated "
                           "proposition");
  switch (b.kind) {
    case Prop::Kind::Atom:
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      return b;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return Prop::binary(b.kind, wrap2(atrans_prop(b.lhs(), ctx), ctx.a),
                          wrap2(atrans_prop(b.rhs(), ctx), ctx.a));
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      return Prop::quant(b.kind, b.name, wrap2(atrans_prop(b.body(), ctx), ctx.a));
  }
  throw std::logic_error("unreachable");
}

inline Prop atrans_prop(const Prop& b, const Prop& a) {
  return atrans_prop(b, TranslationContext::make(a));
}

// Heads untouched, right-hand sides translated. The result is revalidated,
// so a non-closed parameter whose variables would escape a rule is rejected.
inline RewriteSystem atrans_system(const RewriteSystem& sys, const TranslationContext& ctx) {
  std::vector<RewriteRule> out;
  for (const RewriteRule& r : sys.rules())
    out.push_back(RewriteRule{r.head, r.params, atrans_prop(r.rhs, ctx)});
  return validate_orthogonal(std::move(out));
}

inline RewriteSystem atrans_system(const RewriteSystem& sys, const Prop& a) {
  return atrans_system(sys, TranslationContext::make(a));
}

// Double negation: ~~(b translated at bot).
inline Prop kolmogorov(const Prop& b) {
  return wrap2(atrans_prop(b, TranslationContext::make(Prop::bot())), Prop::bot());
}

// Partial inverse of atrans_prop: succeeds exactly on syntactic translates.
inline std::optional<Prop> untranslate(const Prop& p, const Prop& a) {
  auto unwrap2 = [&](const Prop& q) -> const Prop* {
    if (q.kind != Prop::Kind::Imp || !alpha_eq(q.rhs(), a)) return nullptr;
    const Prop& inner = q.lhs();
    if (inner.kind != Prop::Kind::Imp || !alpha_eq(inner.rhs(), a)) return nullptr;
    return &inner.lhs();
  };
  switch (p.kind) {
    case Prop::Kind::Atom:
    case Prop::Kind::Top:
    case Prop::Kind::Bot:
      return p;
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      const Prop* l = unwrap2(p.lhs());
      const Prop* r = unwrap2(p.rhs());
      if (!l || !r) return std::nullopt;
      auto lu = untranslate(*l, a);
      auto ru = untranslate(*r, a);
      if (!lu || !ru) return std::nullopt;
      return Prop::binary(p.kind, std::move(*lu), std::move(*ru));
    }
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      const Prop* b = unwrap2(p.body());
      if (!b) return std::nullopt;
      auto bu = untranslate(*b, a);
      if (!bu) return std::nullopt;
      return Prop::quant(p.kind, p.name, std::move(*bu));
    }
  }
  return std::nullopt;
}

// --- simulation check -------------------------------------------------------

struct SimulationReport {
  bool ok = true;
  int reducts_checked = 0;
  std::string failure;  // description of the first reduct that failed
};

// For every one-step reduct C of b, verify that the translation of b reaches
// the translation of C under the translated system (a bounded breadth-first
// reachability search; the expected distance is a single step).
inline SimulationReport check_translation_simulation(const Prop& b, const RewriteSystem& sys,
                                                     const TranslationContext& ctx, int fuel) {
  SimulationReport rep;
  RewriteSystem tsys = atrans_system(sys, ctx);
  Prop tb = atrans_prop(b, ctx);
  for (const Prop& c : one_step_reducts(b, sys)) {
    ++rep.reducts_checked;
    Prop target = atrans_prop(c, ctx);
    std::string goal = canon_string(target);
    std::set<std::string> seen{canon_string(tb)};
    std::deque<Prop> frontier{tb};
    bool reached = goal == canon_string(tb);
    for (int budget = fuel; budget > 0 && !reached && !frontier.empty(); --budget) {
      Prop cur = std::move(frontier.front());
      frontier.pop_front();
      for (Prop& r : one_step_reducts(cur, tsys)) {
        std::string key = canon_string(r);
        if (key == goal) { reached = true; break; }
        if (seen.insert(key).second) frontier.push_back(std::move(r));
      }
    }
    if (!reached) {
      rep.ok = false;
      rep.failure = "translated term does not reach the translation of reduct '" +
                    print_prop(c) + "'";
      return rep;
    }
  }
  return rep;
}

}  // namespace modulo
