#pragma once

// Sequent calculus proofs modulo a rewrite system, for both the classical
// calculus and its intuitionistic restriction (at most one formula on the
// right; the or-right rule splits in two and the imp-left right premiss
// drops the surrounding right context).
//
// Every rule application is stored with its principal position and the
// exact congruence instances the side condition relates, so the checker
// verifies congruences directly instead of searching for them. Contexts
// are multisets; exchange is implicit.

#include <optional>

#include "modulo/atrans.hpp"
#include "modulo/rewrite.hpp"
#include "modulo/syntax.hpp"

namespace modulo {

enum class Rule {
  Axiom, Cut,
  AndL, AndR, OrL, OrR, OrR1, OrR2, ImpL, ImpR,
  BotL, TopR,
  ForallL, ForallR, ExistsL, ExistsR,
  ContrL, ContrR, WeakL, WeakR,
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::Cut: return "cut";
    case Rule::AndL: return "and-l";
    case Rule::AndR: return "and-r";
    case Rule::OrL: return "or-l";
    case Rule::OrR: return "or-r";
    case Rule::OrR1: return "or-r1";
    case Rule::OrR2: return "or-r2";
    case Rule::ImpL: return "imp-l";
    case Rule::ImpR: return "imp-r";
    case Rule::BotL: return "bot-l";
    case Rule::TopR: return "top-r";
    case Rule::ForallL: return "forall-l";
    case Rule::ForallR: return "forall-r";
    case Rule::ExistsL: return "exists-l";
    case Rule::ExistsR: return "exists-r";
    case Rule::ContrL: return "contr-l";
    case Rule::ContrR: return "contr-r";
    case Rule::WeakL: return "weak-l";
    case Rule::WeakR: return "weak-r";
  }
  return "?";
}

inline std::optional<Rule> rule_from_name(const std::string& s) {
  for (Rule r : {Rule::Axiom, Rule::Cut, Rule::AndL, Rule::AndR, Rule::OrL, Rule::OrR,
                 Rule::OrR1, Rule::OrR2, Rule::ImpL, Rule::ImpR, Rule::BotL, Rule::TopR,
                 Rule::ForallL, Rule::ForallR, Rule::ExistsL, Rule::ExistsR, Rule::ContrL,
                 Rule::ContrR, Rule::WeakL, Rule::WeakR})
    if (s == rule_name(r)) return r;
  return std::nullopt;
}

struct ProofNode {
  Rule rule = Rule::Axiom;
  Sequent conclusion;
  int principal = -1;            // index into conclusion.left or .right, per rule
  std::vector<Prop> inst;        // congruence instances, per rule
  std::string bound_var;         // quantifier rules: the bound/eigen variable
  std::optional<Term> witness;   // forall-l, exists-r
  std::vector<ProofNode> premises;
};

struct SequentProof {
  Flavor flavor = Flavor::Classical;
  ProofNode root;
};

inline bool is_cut_free(const ProofNode& n) {
  if (n.rule == Rule::Cut) return false;
  for (const ProofNode& p : n.premises)
    if (!is_cut_free(p)) return false;
  return true;
}

inline bool is_cut_free(const SequentProof& p) { return is_cut_free(p.root); }

// True unless b is the parameter itself, X => a, or (X => a) => a; the
// shapes a translated proposition can never take, which is what makes
// axiom nodes copyable between the two calculi. The third pattern ends in
// an implication into a, so the second test covers it.
inline bool shape_excluded(const Prop& b, const Prop& a) {
  if (alpha_eq(b, a)) return false;
  if (b.kind == Prop::Kind::Imp && alpha_eq(b.rhs(), a)) return false;
  return true;
}

// --- checking -----------------------------------------------------------------

enum class ProofStatus { Accepted, Rejected, Unknown };

struct ProofVerdict {
  ProofStatus status = ProofStatus::Accepted;
  std::string path;     // premise indices from the root, e.g. "0.1"
  std::string message;
  bool ok() const { return status == ProofStatus::Accepted; }
};

namespace detail {

inline std::vector<Prop> without_index(const std::vector<Prop>& xs, int i) {
  std::vector<Prop> out;
  out.reserve(xs.size() - 1);
  for (size_t k = 0; k < xs.size(); ++k)
    if (static_cast<int>(k) != i) out.push_back(xs[k]);
  return out;
}

inline std::vector<Prop> with_front(std::vector<Prop> xs, std::initializer_list<Prop> front) {
  std::vector<Prop> out(front);
  out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

// Removes one alpha-matching occurrence; throws when absent.
inline std::vector<Prop> multiset_remove_one(const std::vector<Prop>& xs, const Prop& p) {
  std::vector<Prop> out;
  bool removed = false;
  for (const Prop& x : xs) {
    if (!removed && alpha_eq(x, p)) {
      removed = true;
      continue;
    }
    out.push_back(x);
  }
  if (!removed)
    throw std::runtime_error("formula '" + canon_string(p) + "' not present in context");
  return out;
}

}  // namespace detail

class ProofChecker {
 public:
  ProofChecker(const RewriteSystem& sys, Flavor flavor, int fuel)
      : sys_(sys), flavor_(flavor), fuel_(fuel) {}

  ProofVerdict check(const ProofNode& root) { return visit(root, ""); }

 private:
  ProofVerdict fail(const std::string& path, std::string msg) {
    return {ProofStatus::Rejected, path, std::move(msg)};
  }
  ProofVerdict unknown(const std::string& path, std::string msg) {
    return {ProofStatus::Unknown, path, std::move(msg)};
  }

  // Rejected on No, Unknown on fuel, empty verdict on Yes.
  std::optional<ProofVerdict> need_congruent(const Prop& x, const Prop& y,
                                             const std::string& path, const char* what) {
    switch (congruent(x, y, sys_, fuel_)) {
      case Congruence::Yes: return std::nullopt;
      case Congruence::No:
        return fail(path, std::string(what) + ": '" + print_prop(x) +
                              "' is not congruent to '" + print_prop(y) + "'");
      case Congruence::Unknown:
        return unknown(path, std::string(what) + ": congruence of '" + print_prop(x) +
                                 "' and '" + print_prop(y) + "' undecided within fuel");
    }
    return std::nullopt;
  }

  ProofVerdict visit(const ProofNode& n, const std::string& path) {
    const Sequent& c = n.conclusion;
    if (flavor_ == Flavor::Intuitionistic && c.right.size() > 1)
      return fail(path, "intuitionistic sequent with " + std::to_string(c.right.size()) +
                            " right formulas");
    if (flavor_ == Flavor::Intuitionistic && (n.rule == Rule::OrR || n.rule == Rule::ContrR))
      return fail(path, std::string(rule_name(n.rule)) + " is not an intuitionistic rule");
    if (flavor_ == Flavor::Classical && (n.rule == Rule::OrR1 || n.rule == Rule::OrR2))
      return fail(path, std::string(rule_name(n.rule)) + " is an intuitionistic rule");

    std::vector<Sequent> expect;
    switch (n.rule) {
      case Rule::Axiom: {
        if (!n.premises.empty()) return fail(path, "axiom with premises");
        if (c.left.size() != 1 || c.right.size() != 1)
          return fail(path, "axiom requires exactly one formula on each side");
        if (auto v = need_congruent(c.left[0], c.right[0], path, "axiom")) return *v;
        return {};
      }
      case Rule::BotL: {
        if (!n.premises.empty()) return fail(path, "bot-l with premises");
        if (c.left.size() != 1 || !c.right.empty())
          return fail(path, "bot-l concludes exactly 'A |-'");
        if (auto v = need_congruent(c.left[0], Prop::bot(), path, "bot-l")) return *v;
        return {};
      }
      case Rule::TopR: {
        if (!n.premises.empty()) return fail(path, "top-r with premises");
        if (!c.left.empty() || c.right.size() != 1)
          return fail(path, "top-r concludes exactly '|- A'");
        if (auto v = need_congruent(c.right[0], Prop::top(), path, "top-r")) return *v;
        return {};
      }
      case Rule::Cut: {
        if (n.inst.size() != 2) return fail(path, "cut needs two instances");
        if (auto v = need_congruent(n.inst[0], n.inst[1], path, "cut")) return *v;
        Sequent first{c.left, {}};
        first.right.push_back(n.inst[0]);
        if (flavor_ == Flavor::Classical)
          first.right.insert(first.right.end(), c.right.begin(), c.right.end());
        Sequent second{detail::with_front(c.left, {n.inst[1]}), c.right};
        expect = {first, second};
        break;
      }
      case Rule::AndL:
      case Rule::OrL:
      case Rule::ImpL: {
        if (n.principal < 0 || n.principal >= static_cast<int>(c.left.size()))
          return fail(path, "principal index out of range");
        if (n.inst.size() != 2) return fail(path, "rule needs two instances");
        Prop::Kind k = n.rule == Rule::AndL   ? Prop::Kind::And
                       : n.rule == Rule::OrL ? Prop::Kind::Or
                                             : Prop::Kind::Imp;
        Prop shape = Prop::binary(k, n.inst[0], n.inst[1]);
        if (auto v = need_congruent(c.left[n.principal], shape, path, rule_name(n.rule)))
          return *v;
        std::vector<Prop> rest = detail::without_index(c.left, n.principal);
        if (n.rule == Rule::AndL) {
          expect = {Sequent{detail::with_front(rest, {n.inst[0], n.inst[1]}), c.right}};
        } else if (n.rule == Rule::OrL) {
          expect = {Sequent{detail::with_front(rest, {n.inst[0]}), c.right},
                    Sequent{detail::with_front(rest, {n.inst[1]}), c.right}};
        } else {
          Sequent right_premiss{rest, {n.inst[0]}};
          if (flavor_ == Flavor::Classical)
            right_premiss.right.insert(right_premiss.right.end(), c.right.begin(),
                                       c.right.end());
          expect = {Sequent{detail::with_front(rest, {n.inst[1]}), c.right}, right_premiss};
        }
        break;
      }
      case Rule::AndR:
      case Rule::OrR:
      case Rule::OrR1:
      case Rule::OrR2:
      case Rule::ImpR: {
        if (n.principal < 0 || n.principal >= static_cast<int>(c.right.size()))
          return fail(path, "principal index out of range");
        if (n.inst.size() != 2) return fail(path, "rule needs two instances");
        bool is_and = n.rule == Rule::AndR;
        bool is_imp = n.rule == Rule::ImpR;
        Prop::Kind k = is_and ? Prop::Kind::And : is_imp ? Prop::Kind::Imp : Prop::Kind::Or;
        Prop shape = Prop::binary(k, n.inst[0], n.inst[1]);
        if (auto v = need_congruent(c.right[n.principal], shape, path, rule_name(n.rule)))
          return *v;
        std::vector<Prop> rest = detail::without_index(c.right, n.principal);
        switch (n.rule) {
          case Rule::AndR:
            expect = {Sequent{c.left, detail::with_front(rest, {n.inst[0]})},
                      Sequent{c.left, detail::with_front(rest, {n.inst[1]})}};
            break;
          case Rule::OrR:
            expect = {Sequent{c.left, detail::with_front(rest, {n.inst[0], n.inst[1]})}};
            break;
          case Rule::OrR1:
            expect = {Sequent{c.left, detail::with_front(rest, {n.inst[0]})}};
            break;
          case Rule::OrR2:
            expect = {Sequent{c.left, detail::with_front(rest, {n.inst[1]})}};
            break;
          default:  // ImpR
            expect = {Sequent{detail::with_front(c.left, {n.inst[0]}),
                              detail::with_front(rest, {n.inst[1]})}};
            break;
        }
        break;
      }
      case Rule::ForallL:
      case Rule::ExistsL: {
        if (n.principal < 0 || n.principal >= static_cast<int>(c.left.size()))
          return fail(path, "principal index out of range");
        if (n.inst.size() != 1) return fail(path, "quantifier rule needs one instance");
        Prop::Kind k = n.rule == Rule::ForallL ? Prop::Kind::Forall : Prop::Kind::Exists;
        Prop shape = Prop::quant(k, n.bound_var, n.inst[0]);
        if (auto v = need_congruent(c.left[n.principal], shape, path, rule_name(n.rule)))
          return *v;
        std::vector<Prop> rest = detail::without_index(c.left, n.principal);
        if (n.rule == Rule::ForallL) {
          if (!n.witness) return fail(path, "forall-l needs a witness term");
          Prop instd = substitute(n.inst[0], n.bound_var, *n.witness);
          expect = {Sequent{detail::with_front(rest, {instd}), c.right}};
        } else {
          if (auto v = eigen_fresh(n, path)) return *v;
          expect = {Sequent{detail::with_front(rest, {n.inst[0]}), c.right}};
        }
        break;
      }
      case Rule::ForallR:
      case Rule::ExistsR: {
        if (n.principal < 0 || n.principal >= static_cast<int>(c.right.size()))
          return fail(path, "principal index out of range");
        if (n.inst.size() != 1) return fail(path, "quantifier rule needs one instance");
        Prop::Kind k = n.rule == Rule::ForallR ? Prop::Kind::Forall : Prop::Kind::Exists;
        Prop shape = Prop::quant(k, n.bound_var, n.inst[0]);
        if (auto v = need_congruent(c.right[n.principal], shape, path, rule_name(n.rule)))
          return *v;
        std::vector<Prop> rest = detail::without_index(c.right, n.principal);
        if (n.rule == Rule::ForallR) {
          if (auto v = eigen_fresh(n, path)) return *v;
          expect = {Sequent{c.left, detail::with_front(rest, {n.inst[0]})}};
        } else {
          if (!n.witness) return fail(path, "exists-r needs a witness term");
          Prop instd = substitute(n.inst[0], n.bound_var, *n.witness);
          expect = {Sequent{c.left, detail::with_front(rest, {instd})}};
        }
        break;
      }
      case Rule::ContrL:
      case Rule::ContrR: {
        bool left = n.rule == Rule::ContrL;
        const std::vector<Prop>& side = left ? c.left : c.right;
        if (n.principal < 0 || n.principal >= static_cast<int>(side.size()))
          return fail(path, "principal index out of range");
        if (n.inst.size() != 2) return fail(path, "contraction needs two instances");
        for (const Prop& b : n.inst)
          if (auto v = need_congruent(side[n.principal], b, path, rule_name(n.rule)))
            return *v;
        std::vector<Prop> rest = detail::without_index(side, n.principal);
        std::vector<Prop> grown = detail::with_front(rest, {n.inst[0], n.inst[1]});
        expect = {left ? Sequent{grown, c.right} : Sequent{c.left, grown}};
        break;
      }
      case Rule::WeakL:
      case Rule::WeakR: {
        bool left = n.rule == Rule::WeakL;
        const std::vector<Prop>& side = left ? c.left : c.right;
        if (n.principal < 0 || n.principal >= static_cast<int>(side.size()))
          return fail(path, "principal index out of range");
        std::vector<Prop> rest = detail::without_index(side, n.principal);
        expect = {left ? Sequent{rest, c.right} : Sequent{c.left, rest}};
        break;
      }
    }

    if (n.premises.size() != expect.size())
      return fail(path, std::string(rule_name(n.rule)) + " expects " +
                            std::to_string(expect.size()) + " premise(s), got " +
                            std::to_string(n.premises.size()));
    for (size_t i = 0; i < expect.size(); ++i) {
      std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
      if (!sequent_alpha_eq(n.premises[i].conclusion, expect[i]))
        return fail(sub, std::string("premise of ") + rule_name(n.rule) +
                             " does not match the expected sequent");
      ProofVerdict v = visit(n.premises[i], sub);
      if (!v.ok()) return v;
    }
    return {};
  }

  std::optional<ProofVerdict> eigen_fresh(const ProofNode& n, const std::string& path) {
    std::set<std::string> fv;
    for (const Prop& p : n.conclusion.left) free_vars_into(p, fv);
    for (const Prop& p : n.conclusion.right) free_vars_into(p, fv);
    if (fv.count(n.bound_var))
      return fail(path, "eigenvariable '" + n.bound_var + "' occurs free in the conclusion");
    return std::nullopt;
  }

  const RewriteSystem& sys_;
  Flavor flavor_;
  int fuel_;
};

inline ProofVerdict check_classical(const SequentProof& p, const RewriteSystem& sys, int fuel) {
  if (p.flavor != Flavor::Classical)
    return {ProofStatus::Rejected, "", "proof is not flagged classical"};
  return ProofChecker(sys, Flavor::Classical, fuel).check(p.root);
}

inline ProofVerdict check_intuitionistic(const SequentProof& p, const RewriteSystem& sys,
                                         int fuel) {
  if (p.flavor != Flavor::Intuitionistic)
    return {ProofStatus::Rejected, "", "proof is not flagged intuitionistic"};
  return ProofChecker(sys, Flavor::Intuitionistic, fuel).check(p.root);
}

// --- node builders ------------------------------------------------------------

namespace build {

inline ProofNode axiom(Prop a, Prop b) {
  ProofNode n;
  n.rule = Rule::Axiom;
  n.conclusion = {{std::move(a)}, {std::move(b)}};
  return n;
}

inline ProofNode bot_l(Prop a) {
  ProofNode n;
  n.rule = Rule::BotL;
  n.conclusion = {{std::move(a)}, {}};
  return n;
}

inline ProofNode top_r(Prop a) {
  ProofNode n;
  n.rule = Rule::TopR;
  n.conclusion = {{}, {std::move(a)}};
  return n;
}

inline ProofNode weak_l(Prop a, ProofNode premise) {
  ProofNode n;
  n.rule = Rule::WeakL;
  n.conclusion = {detail::with_front(premise.conclusion.left, {std::move(a)}),
                  premise.conclusion.right};
  n.principal = 0;
  n.premises.push_back(std::move(premise));
  return n;
}

inline ProofNode weak_r(Prop a, ProofNode premise) {
  ProofNode n;
  n.rule = Rule::WeakR;
  n.conclusion = {premise.conclusion.left,
                  detail::with_front(premise.conclusion.right, {std::move(a)})};
  n.principal = 0;
  n.premises.push_back(std::move(premise));
  return n;
}

// a |- a padded with weakenings for every formula of ctx.
inline ProofNode axiom_in_context(const std::vector<Prop>& ctx, const Prop& a) {
  ProofNode n = axiom(a, a);
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) n = weak_l(*it, n);
  return n;
}

}  // namespace build

// --- admissible macros ----------------------------------------------------------

// From a proof of G, C |- D builds a proof of G, (C => D) => D |- D using
// only imp-l, imp-r, axiom and weakenings.
inline ProofNode admissible_1(const ProofNode& sub, const Prop& c) {
  if (sub.conclusion.right.size() != 1)
    throw std::runtime_error("admissible_1 expects a single right formula");
  const Prop d = sub.conclusion.right[0];
  std::vector<Prop> gamma = detail::multiset_remove_one(sub.conclusion.left, c);
  Prop cd = Prop::imp(c, d);
  Prop w = Prop::imp(cd, d);

  ProofNode imp_r;
  imp_r.rule = Rule::ImpR;
  imp_r.conclusion = {gamma, {cd}};
  imp_r.principal = 0;
  imp_r.inst = {c, d};
  imp_r.premises.push_back(sub);

  ProofNode n;
  n.rule = Rule::ImpL;
  n.conclusion = {detail::with_front(gamma, {w}), {d}};
  n.principal = 0;
  n.inst = {cd, d};
  n.premises.push_back(build::axiom_in_context(gamma, d));
  n.premises.push_back(std::move(imp_r));
  return n;
}

// From a proof of G |- C builds a proof of G, C => D |- D.
inline ProofNode admissible_2(const ProofNode& sub, const Prop& d) {
  if (sub.conclusion.right.size() != 1)
    throw std::runtime_error("admissible_2 expects a single right formula");
  const Prop c = sub.conclusion.right[0];
  const std::vector<Prop>& gamma = sub.conclusion.left;

  ProofNode n;
  n.rule = Rule::ImpL;
  n.conclusion = {detail::with_front(gamma, {Prop::imp(c, d)}), {d}};
  n.principal = 0;
  n.inst = {c, d};
  n.premises.push_back(build::axiom_in_context(gamma, d));
  n.premises.push_back(sub);
  return n;
}

// --- frozen-parameter scan ------------------------------------------------------

// Finds a logical right rule whose principal formula is the parameter
// itself. Returns the node path, or nothing when the proof leaves the
// parameter opaque (axioms and structural rules are allowed to touch it).
inline std::optional<std::string> frozen_right_rule(const ProofNode& n, const Prop& a,
                                                    const std::string& path = "") {
  bool right_logical = false;
  switch (n.rule) {
    case Rule::AndR:
    case Rule::OrR:
    case Rule::OrR1:
    case Rule::OrR2:
    case Rule::ImpR:
    case Rule::ForallR:
    case Rule::ExistsR:
    case Rule::TopR:
      right_logical = true;
      break;
    default:
      break;
  }
  if (right_logical && n.principal >= 0 &&
      n.principal < static_cast<int>(n.conclusion.right.size()) &&
      alpha_eq(n.conclusion.right[n.principal], a))
    return path.empty() ? "root" : path;
  if (n.rule == Rule::TopR && !n.conclusion.right.empty() &&
      alpha_eq(n.conclusion.right[0], a))
    return path.empty() ? "root" : path;
  for (size_t i = 0; i < n.premises.size(); ++i) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (auto hit = frozen_right_rule(n.premises[i], a, sub)) return hit;
  }
  return std::nullopt;
}

// --- classical to intuitionistic --------------------------------------------------

// The representation of a classical sequent by an intuitionistic one: each
// occurrence is a translate of a classical formula under up to two trailing
// implications into the parameter. Which side of the classical sequent an
// occurrence comes from is determined by its position and wrap count:
// in the left context, one wrap means a classical right formula; on the
// right of the turnstile, one wrap means a classical left formula.
struct RepEntry {
  enum class Side { Left, Right };
  Side side = Side::Left;
  Prop classical;
  int wraps = 0;
};

struct Representation {
  std::vector<RepEntry> left;        // one per intuitionistic left occurrence
  std::optional<RepEntry> right;     // nothing: the right side is the frozen parameter
};

inline Sequent represented_sequent(const Representation& rep) {
  Sequent s;
  auto push = [&](const RepEntry& e) {
    (e.side == RepEntry::Side::Left ? s.left : s.right).push_back(e.classical);
  };
  for (const RepEntry& e : rep.left) push(e);
  if (rep.right) push(*rep.right);
  return s;
}

struct ClasToIntResult {
  SequentProof proof;       // intuitionistic, right side is the parameter
  RewriteSystem system;     // the translated rewrite system
  Representation induced;   // representation of the root conclusion
};

namespace detail {

class ForwardTx {
 public:
  ForwardTx(const Prop& a, const TranslationContext& ctx) : a_(a), ctx_(ctx) {}

  // Proof of T(G), T(D) => a |- a from a classical proof of G |- D.
  ProofNode go(const ProofNode& n) {
    switch (n.rule) {
      case Rule::Axiom:
        return admissible_2(build::axiom(tr(n.conclusion.left[0]), tr(n.conclusion.right[0])),
                            a_);
      case Rule::BotL:
        return build::weak_r(a_, build::bot_l(tr(n.conclusion.left[0])));
      case Rule::TopR:
        return admissible_2(build::top_r(tr(n.conclusion.right[0])), a_);
      case Rule::Cut: {
        ProofNode h1 = go(n.premises[0]);  // .., T(A) => a, .. |- a
        ProofNode h2 = go(n.premises[1]);  // .., T(B), .. |- a
        Prop ta = wrap1(tr(n.inst[0]), a_);
        Prop tb = tr(n.inst[1]);
        ProofNode lam;
        lam.rule = Rule::ImpR;
        lam.conclusion = {multiset_remove_one(h2.conclusion.left, tb), {Prop::imp(tb, a_)}};
        lam.principal = 0;
        lam.inst = {tb, a_};
        lam.premises.push_back(std::move(h2));
        ProofNode cut;
        cut.rule = Rule::Cut;
        cut.conclusion = {multiset_remove_one(h1.conclusion.left, ta), {a_}};
        cut.inst = {Prop::imp(tb, a_), ta};
        cut.premises.push_back(std::move(lam));
        cut.premises.push_back(std::move(h1));
        return cut;
      }
      case Rule::AndL:
      case Rule::OrL:
      case Rule::ExistsL:
      case Rule::ForallL: {
        const Prop& c = n.conclusion.left[n.principal];
        std::vector<ProofNode> prem;
        if (n.rule == Rule::AndL) {
          ProofNode h = go(n.premises[0]);
          h = admissible_1(h, tr(n.inst[0]));
          h = admissible_1(h, tr(n.inst[1]));
          prem.push_back(std::move(h));
        } else if (n.rule == Rule::OrL) {
          prem.push_back(admissible_1(go(n.premises[0]), tr(n.inst[0])));
          prem.push_back(admissible_1(go(n.premises[1]), tr(n.inst[1])));
        } else if (n.rule == Rule::ForallL) {
          Prop instd = substitute(n.inst[0], n.bound_var, *n.witness);
          prem.push_back(admissible_1(go(n.premises[0]), tr(instd)));
        } else {  // ExistsL
          prem.push_back(admissible_1(go(n.premises[0]), tr(n.inst[0])));
        }
        ProofNode out;
        out.rule = n.rule;
        out.bound_var = n.bound_var;
        out.witness = n.witness;
        out.conclusion = {with_front(context_of(n, prem[0]), {tr(c)}), {a_}};
        out.principal = 0;
        for (const Prop& i : n.inst) out.inst.push_back(wrap2(tr(i), a_));
        for (ProofNode& p : prem) out.premises.push_back(std::move(p));
        return out;
      }
      case Rule::ImpL: {
        const Prop& c = n.conclusion.left[n.principal];
        ProofNode sB = admissible_1(go(n.premises[0]), tr(n.inst[1]));
        ProofNode hA = go(n.premises[1]);
        Prop wa = wrap1(tr(n.inst[0]), a_);
        ProofNode qA;
        qA.rule = Rule::ImpR;
        qA.conclusion = {multiset_remove_one(hA.conclusion.left, wa),
                         {wrap2(tr(n.inst[0]), a_)}};
        qA.principal = 0;
        qA.inst = {wa, a_};
        qA.premises.push_back(std::move(hA));
        ProofNode out;
        out.rule = Rule::ImpL;
        out.conclusion = {with_front(qA.conclusion.left, {tr(c)}), {a_}};
        out.principal = 0;
        out.inst = {wrap2(tr(n.inst[0]), a_), wrap2(tr(n.inst[1]), a_)};
        out.premises.push_back(std::move(sB));
        out.premises.push_back(std::move(qA));
        return out;
      }
      case Rule::ImpR: {
        const Prop& c = n.conclusion.right[n.principal];
        ProofNode h = go(n.premises[0]);
        ProofNode s = admissible_1(h, tr(n.inst[0]));
        Prop wb1 = wrap1(tr(n.inst[1]), a_);
        ProofNode r1;
        r1.rule = Rule::ImpR;
        r1.conclusion = {multiset_remove_one(s.conclusion.left, wb1),
                         {wrap2(tr(n.inst[1]), a_)}};
        r1.principal = 0;
        r1.inst = {wb1, a_};
        r1.premises.push_back(std::move(s));
        ProofNode r2;
        r2.rule = Rule::ImpR;
        r2.conclusion = {multiset_remove_one(r1.conclusion.left, wrap2(tr(n.inst[0]), a_)),
                         {tr(c)}};
        r2.principal = 0;
        r2.inst = {wrap2(tr(n.inst[0]), a_), wrap2(tr(n.inst[1]), a_)};
        r2.premises.push_back(std::move(r1));
        return close_over(tr(c), std::move(r2));
      }
      case Rule::AndR: {
        const Prop& c = n.conclusion.right[n.principal];
        ProofNode qa = discharge(go(n.premises[0]), tr(n.inst[0]));
        ProofNode qb = discharge(go(n.premises[1]), tr(n.inst[1]));
        ProofNode andr;
        andr.rule = Rule::AndR;
        andr.conclusion = {qa.conclusion.left, {tr(c)}};
        andr.principal = 0;
        andr.inst = {wrap2(tr(n.inst[0]), a_), wrap2(tr(n.inst[1]), a_)};
        andr.premises.push_back(std::move(qa));
        andr.premises.push_back(std::move(qb));
        return close_over(tr(c), std::move(andr));
      }
      case Rule::OrR: {
        const Prop& c = n.conclusion.right[n.principal];
        Prop x = wrap1(tr(c), a_);
        Prop wa = wrap2(tr(n.inst[0]), a_), wb = wrap2(tr(n.inst[1]), a_);
        Prop ka = wrap1(tr(n.inst[0]), a_), kb = wrap1(tr(n.inst[1]), a_);
        ProofNode h = go(n.premises[0]);  // ctx, T(A)=>a, T(B)=>a |- a
        ProofNode n1;  // ctx, T(A)=>a |- wb
        n1.rule = Rule::ImpR;
        n1.conclusion = {multiset_remove_one(h.conclusion.left, kb), {wb}};
        n1.principal = 0;
        n1.inst = {kb, a_};
        n1.premises.push_back(std::move(h));
        ProofNode n2;  // ctx, T(A)=>a |- T(C)
        n2.rule = Rule::OrR2;
        n2.conclusion = {n1.conclusion.left, {tr(c)}};
        n2.principal = 0;
        n2.inst = {wa, wb};
        n2.premises.push_back(std::move(n1));
        ProofNode n3;  // x, ctx, T(A)=>a |- a
        n3.rule = Rule::ImpL;
        n3.conclusion = {with_front(n2.conclusion.left, {x}), {a_}};
        n3.principal = 0;
        n3.inst = {tr(c), a_};
        n3.premises.push_back(build::axiom_in_context(n2.conclusion.left, a_));
        n3.premises.push_back(std::move(n2));
        ProofNode n4;  // x, ctx |- wa
        n4.rule = Rule::ImpR;
        n4.conclusion = {multiset_remove_one(n3.conclusion.left, ka), {wa}};
        n4.principal = 0;
        n4.inst = {ka, a_};
        n4.premises.push_back(std::move(n3));
        ProofNode n5;  // x, ctx |- T(C)
        n5.rule = Rule::OrR1;
        n5.conclusion = {n4.conclusion.left, {tr(c)}};
        n5.principal = 0;
        n5.inst = {wa, wb};
        n5.premises.push_back(std::move(n4));
        ProofNode n6;  // x, x, ctx |- a
        n6.rule = Rule::ImpL;
        n6.conclusion = {with_front(n5.conclusion.left, {x}), {a_}};
        n6.principal = 0;
        n6.inst = {tr(c), a_};
        n6.premises.push_back(build::axiom_in_context(n5.conclusion.left, a_));
        n6.premises.push_back(std::move(n5));
        ProofNode n7;  // x, ctx |- a
        n7.rule = Rule::ContrL;
        n7.conclusion = {multiset_remove_one(n6.conclusion.left, x), {a_}};
        n7.principal = 0;
        n7.inst = {x, x};
        n7.premises.push_back(std::move(n6));
        return n7;
      }
      case Rule::ForallR:
      case Rule::ExistsR: {
        const Prop& c = n.conclusion.right[n.principal];
        Prop instd = n.rule == Rule::ExistsR
                         ? substitute(n.inst[0], n.bound_var, *n.witness)
                         : n.inst[0];
        ProofNode q = discharge(go(n.premises[0]), tr(instd));
        ProofNode r;
        r.rule = n.rule;
        r.conclusion = {q.conclusion.left, {tr(c)}};
        r.principal = 0;
        r.inst = {wrap2(tr(n.inst[0]), a_)};
        r.bound_var = n.bound_var;
        r.witness = n.witness;
        r.premises.push_back(std::move(q));
        return close_over(tr(c), std::move(r));
      }
      case Rule::ContrL: {
        ProofNode h = go(n.premises[0]);
        ProofNode out;
        out.rule = Rule::ContrL;
        Prop tb1 = tr(n.inst[0]), tb2 = tr(n.inst[1]);
        std::vector<Prop> rest =
            multiset_remove_one(multiset_remove_one(h.conclusion.left, tb1), tb2);
        out.conclusion = {with_front(rest, {tr(n.conclusion.left[n.principal])}), {a_}};
        out.principal = 0;
        out.inst = {tb1, tb2};
        out.premises.push_back(std::move(h));
        return out;
      }
      case Rule::ContrR: {
        ProofNode h = go(n.premises[0]);
        ProofNode out;
        out.rule = Rule::ContrL;
        Prop w1 = wrap1(tr(n.inst[0]), a_), w2 = wrap1(tr(n.inst[1]), a_);
        std::vector<Prop> rest =
            multiset_remove_one(multiset_remove_one(h.conclusion.left, w1), w2);
        out.conclusion = {
            with_front(rest, {wrap1(tr(n.conclusion.right[n.principal]), a_)}), {a_}};
        out.principal = 0;
        out.inst = {w1, w2};
        out.premises.push_back(std::move(h));
        return out;
      }
      case Rule::WeakL:
        return build::weak_l(tr(n.conclusion.left[n.principal]), go(n.premises[0]));
      case Rule::WeakR:
        return build::weak_l(wrap1(tr(n.conclusion.right[n.principal]), a_),
                             go(n.premises[0]));
      default:
        throw TranslationError(std::string("cannot translate rule ") + rule_name(n.rule));
    }
  }

 private:
  Prop tr(const Prop& p) { return atrans_prop(p, ctx_); }

  // The residual context of the translated node: everything in the premise
  // conclusion except the new principal material, recovered by removal.
  std::vector<Prop> context_of(const ProofNode& n, const ProofNode& prem) {
    std::vector<Prop> ctx = prem.conclusion.left;
    if (n.rule == Rule::AndL) {
      ctx = multiset_remove_one(ctx, wrap2(tr(n.inst[0]), a_));
      ctx = multiset_remove_one(ctx, wrap2(tr(n.inst[1]), a_));
    } else if (n.rule == Rule::OrL) {
      ctx = multiset_remove_one(ctx, wrap2(tr(n.inst[0]), a_));
    } else if (n.rule == Rule::ForallL) {
      Prop instd = substitute(n.inst[0], n.bound_var, *n.witness);
      ctx = multiset_remove_one(ctx, wrap2(tr(instd), a_));
    } else {  // ExistsL
      ctx = multiset_remove_one(ctx, wrap2(tr(n.inst[0]), a_));
    }
    return ctx;
  }

  // From ctx, T(X) => a |- a build ctx |- (T(X) => a) => a.
  ProofNode discharge(ProofNode h, const Prop& tx) {
    Prop k = wrap1(tx, a_);
    ProofNode q;
    q.rule = Rule::ImpR;
    q.conclusion = {multiset_remove_one(h.conclusion.left, k), {wrap2(tx, a_)}};
    q.principal = 0;
    q.inst = {k, a_};
    q.premises.push_back(std::move(h));
    return q;
  }

  // From ctx |- T(C) build ctx, T(C) => a |- a.
  ProofNode close_over(const Prop& tc, ProofNode r) {
    ProofNode out;
    out.rule = Rule::ImpL;
    out.conclusion = {with_front(r.conclusion.left, {wrap1(tc, a_)}), {a_}};
    out.principal = 0;
    out.inst = {tc, a_};
    out.premises.push_back(build::axiom_in_context(r.conclusion.left, a_));
    out.premises.push_back(std::move(r));
    return out;
  }

  Prop a_;
  const TranslationContext& ctx_;
};

}  // namespace detail

inline ClasToIntResult translate_clas_to_int(const SequentProof& pi, const Prop& a,
                                             const RewriteSystem& sys, int fuel) {
  if (pi.flavor != Flavor::Classical)
    throw TranslationError("input proof must be classical");
  if (!free_vars(a).empty()) throw TranslationError("parameter must be closed");
  if (!r_compatible(a, sys))
    throw TranslationError("parameter shares symbols with the rewrite system");
  ProofVerdict v = check_classical(pi, sys, fuel);
  if (!v.ok())
    throw TranslationError("input proof does not check: " + v.message + " at " +
                           (v.path.empty() ? "root" : v.path));

  TranslationContext ctx = TranslationContext::make(a);
  detail::ForwardTx tx(a, ctx);
  ClasToIntResult out;
  out.proof.flavor = Flavor::Intuitionistic;
  out.proof.root = tx.go(pi.root);
  out.system = atrans_system(sys, ctx);

  for (const Prop& f : out.proof.root.conclusion.left) {
    if (auto plain = untranslate(f, a)) {
      out.induced.left.push_back({RepEntry::Side::Left, std::move(*plain), 0});
    } else if (f.kind == Prop::Kind::Imp && alpha_eq(f.rhs(), a)) {
      auto base = untranslate(f.lhs(), a);
      if (!base) throw TranslationError("untranslatable formula in root conclusion");
      out.induced.left.push_back({RepEntry::Side::Right, std::move(*base), 1});
    } else {
      throw TranslationError("untranslatable formula in root conclusion");
    }
  }
  return out;
}

// --- intuitionistic back to classical ----------------------------------------------

namespace detail {

class BackwardTx {
 public:
  BackwardTx(const Prop& a, const RewriteSystem& sys, int fuel)
      : a_(a), sys_(sys), fuel_(fuel) {}

  ProofNode go(const ProofNode& n, const std::string& path) {
    switch (n.rule) {
      case Rule::Cut:
        throw TranslationError("input proof must be cut-free (cut at " + at(path) + ")");
      case Rule::Axiom: {
        RepEntry l = decode_left(n.conclusion.left[0], path);
        RepEntry r = decode_right(n, path);
        if (l.wraps != r.wraps)
          throw TranslationError("axiom relates differently wrapped shapes at " + at(path));
        if (l.side == r.side)
          throw TranslationError("axiom maps both sides to the same classical side at " +
                                 at(path));
        const RepEntry& cl = l.side == RepEntry::Side::Left ? l : r;
        const RepEntry& cr = l.side == RepEntry::Side::Left ? r : l;
        return build::axiom(cl.classical, cr.classical);
      }
      case Rule::TopR: {
        RepEntry r = decode_right(n, path);
        if (r.wraps != 0)
          throw TranslationError("top-r on a wrapped shape at " + at(path));
        return build::top_r(r.classical);
      }
      case Rule::BotL: {
        RepEntry l = decode_left(n.conclusion.left[0], path);
        if (l.wraps != 0)
          throw TranslationError("bot-l on a wrapped shape at " + at(path));
        return build::bot_l(l.classical);
      }
      case Rule::WeakR: {
        ProofNode sub = go(n.premises[0], path + ".0");
        if (is_frozen_right(n)) return sub;  // dropping the parameter changes nothing
        RepEntry e = decode_right(n, path);
        return e.side == RepEntry::Side::Right ? build::weak_r(e.classical, std::move(sub))
                                               : build::weak_l(e.classical, std::move(sub));
      }
      case Rule::WeakL: {
        ProofNode sub = go(n.premises[0], path + ".0");
        RepEntry e = decode_left(n.conclusion.left[n.principal], path);
        return e.side == RepEntry::Side::Left ? build::weak_l(e.classical, std::move(sub))
                                              : build::weak_r(e.classical, std::move(sub));
      }
      case Rule::ContrL: {
        RepEntry e = decode_left(n.conclusion.left[n.principal], path);
        RepEntry e1 = decode_left(n.inst[0], path);
        RepEntry e2 = decode_left(n.inst[1], path);
        ProofNode sub = go(n.premises[0], path + ".0");
        ProofNode out;
        out.rule = e.side == RepEntry::Side::Left ? Rule::ContrL : Rule::ContrR;
        Sequent sc = sub.conclusion;
        std::vector<Prop>& side =
            e.side == RepEntry::Side::Left ? sc.left : sc.right;
        side = multiset_remove_one(side, e1.classical);
        side = multiset_remove_one(side, e2.classical);
        side = with_front(side, {e.classical});
        out.conclusion = std::move(sc);
        out.principal = 0;
        out.inst = {e1.classical, e2.classical};
        out.premises.push_back(std::move(sub));
        return out;
      }
      case Rule::ContrR:
        throw TranslationError("contraction on the right is not intuitionistic (" +
                               at(path) + ")");
      case Rule::ImpR: {
        if (is_frozen_right(n))
          throw TranslationError("right rule on the frozen parameter at " + at(path));
        RepEntry e = decode_right(n, path);
        if (e.wraps > 0) return go(n.premises[0], path + ".0");  // unwrap, same sequent
        return copy_imp_r(n, e, path);
      }
      case Rule::AndR:
      case Rule::OrR1:
      case Rule::OrR2:
      case Rule::ForallR:
      case Rule::ExistsR: {
        if (is_frozen_right(n))
          throw TranslationError("right rule on the frozen parameter at " + at(path));
        RepEntry e = decode_right(n, path);
        if (e.wraps != 0)
          throw TranslationError(std::string(rule_name(n.rule)) +
                                 " on a wrapped shape at " + at(path));
        return copy_right_rule(n, e, path);
      }
      case Rule::OrR:
        throw TranslationError("or-r is not intuitionistic (" + at(path) + ")");
      case Rule::ImpL: {
        RepEntry e = decode_left(n.conclusion.left[n.principal], path);
        if (e.wraps > 0) {
          // Wrapper shapes carry no classical rule: the classical content
          // lives in the right premiss, whose new right formula re-homes
          // the wrapper's classical formula. The previous right formula is
          // restored by weakening, placed directly below the recursion.
          ProofNode sub = go(n.premises[1], path + ".1");
          return restore_right(n, std::move(sub), path);
        }
        return copy_imp_l(n, e, path);
      }
      case Rule::AndL:
      case Rule::OrL:
      case Rule::ForallL:
      case Rule::ExistsL: {
        RepEntry e = decode_left(n.conclusion.left[n.principal], path);
        if (e.wraps != 0)
          throw TranslationError(std::string(rule_name(n.rule)) +
                                 " on a wrapped shape at " + at(path));
        return copy_left_rule(n, e, path);
      }
      default:
        throw TranslationError(std::string("unhandled rule ") + rule_name(n.rule) +
                               " at " + at(path));
    }
  }

  // Classical sequent represented by an intuitionistic node conclusion.
  Sequent represent(const ProofNode& n, const std::string& path) {
    Sequent s;
    for (const Prop& f : n.conclusion.left) {
      RepEntry e = decode_left(f, path);
      (e.side == RepEntry::Side::Left ? s.left : s.right).push_back(e.classical);
    }
    if (!n.conclusion.right.empty() && !is_frozen_right(n)) {
      RepEntry e = decode_right(n, path);
      (e.side == RepEntry::Side::Left ? s.left : s.right).push_back(e.classical);
    }
    return s;
  }

 private:
  static std::string at(const std::string& path) { return path.empty() ? "root" : path; }

  bool is_frozen_right(const ProofNode& n) const {
    return !n.conclusion.right.empty() && alpha_eq(n.conclusion.right[0], a_);
  }

  RepEntry decode(const Prop& f, bool in_left_context, const std::string& path) {
    // Wrap counts are unambiguous when the parameter is not itself a
    // translate shape: a translate never ends in an implication into the
    // parameter.
    if (f.kind == Prop::Kind::Imp && alpha_eq(f.rhs(), a_)) {
      const Prop& inner = f.lhs();
      if (inner.kind == Prop::Kind::Imp && alpha_eq(inner.rhs(), a_)) {
        if (auto base = untranslate(inner.lhs(), a_))
          return {in_left_context ? RepEntry::Side::Left : RepEntry::Side::Right,
                  std::move(*base), 2};
      }
      if (auto base = untranslate(inner, a_))
        return {in_left_context ? RepEntry::Side::Right : RepEntry::Side::Left,
                std::move(*base), 1};
    }
    if (auto plain = untranslate(f, a_))
      return {in_left_context ? RepEntry::Side::Left : RepEntry::Side::Right,
              std::move(*plain), 0};
    throw TranslationError("formula '" + print_prop(f) +
                           "' is not a wrapped translate at " + at(path));
  }

  RepEntry decode_left(const Prop& f, const std::string& path) {
    return decode(f, true, path);
  }

  RepEntry decode_right(const ProofNode& n, const std::string& path) {
    if (n.conclusion.right.empty())
      throw TranslationError("no right formula to decode at " + at(path));
    return decode(n.conclusion.right[0], false, path);
  }

  // Weakens the classical formula represented by the right side of n's
  // conclusion back in, unless that right side is the frozen parameter.
  ProofNode restore_right(const ProofNode& n, ProofNode sub, const std::string& path) {
    if (n.conclusion.right.empty() || is_frozen_right(n)) return sub;
    RepEntry e = decode_right(n, path);
    return e.side == RepEntry::Side::Right ? build::weak_r(e.classical, std::move(sub))
                                           : build::weak_l(e.classical, std::move(sub));
  }

  ProofNode copy_imp_r(const ProofNode& n, const RepEntry& e, const std::string& path) {
    // e.classical is congruent to X1 => X2; the instances are the wrapped
    // translates of X1 and X2.
    Prop x1 = unwrap_inst(n.inst[0], path);
    Prop x2 = unwrap_inst(n.inst[1], path);
    ProofNode sub = go(n.premises[0], path + ".0");
    ProofNode out;
    out.rule = Rule::ImpR;
    Sequent sc = sub.conclusion;
    sc.left = multiset_remove_one(sc.left, x1);
    sc.right = with_front(multiset_remove_one(sc.right, x2), {e.classical});
    out.conclusion = std::move(sc);
    out.principal = 0;
    out.inst = {x1, x2};
    out.premises.push_back(std::move(sub));
    return out;
  }

  ProofNode copy_right_rule(const ProofNode& n, const RepEntry& e, const std::string& path) {
    ProofNode out;
    out.principal = 0;
    switch (n.rule) {
      case Rule::AndR: {
        Prop x1 = unwrap_inst(n.inst[0], path), x2 = unwrap_inst(n.inst[1], path);
        ProofNode s1 = go(n.premises[0], path + ".0");
        ProofNode s2 = go(n.premises[1], path + ".1");
        out.rule = Rule::AndR;
        Sequent sc = s1.conclusion;
        sc.right = with_front(multiset_remove_one(sc.right, x1), {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {x1, x2};
        out.premises.push_back(std::move(s1));
        out.premises.push_back(std::move(s2));
        return out;
      }
      case Rule::OrR1:
      case Rule::OrR2: {
        Prop x1 = unwrap_inst(n.inst[0], path), x2 = unwrap_inst(n.inst[1], path);
        ProofNode sub = go(n.premises[0], path + ".0");
        // The classical or-right rule consumes both disjuncts; weaken the
        // missing one in.
        sub = n.rule == Rule::OrR1 ? build::weak_r(x2, std::move(sub))
                                   : build::weak_r(x1, std::move(sub));
        out.rule = Rule::OrR;
        Sequent sc = sub.conclusion;
        sc.right = multiset_remove_one(sc.right, x1);
        sc.right = multiset_remove_one(sc.right, x2);
        sc.right = with_front(sc.right, {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {x1, x2};
        out.premises.push_back(std::move(sub));
        return out;
      }
      case Rule::ForallR:
      case Rule::ExistsR: {
        Prop body = unwrap_inst(n.inst[0], path);
        ProofNode sub = go(n.premises[0], path + ".0");
        out.rule = n.rule;
        out.bound_var = n.bound_var;
        out.witness = n.witness;
        Prop premise_form = n.rule == Rule::ForallR
                                ? body
                                : substitute(body, n.bound_var, *n.witness);
        Sequent sc = sub.conclusion;
        sc.right = with_front(multiset_remove_one(sc.right, premise_form), {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {body};
        out.premises.push_back(std::move(sub));
        return out;
      }
      default:
        throw TranslationError("unexpected right rule at " + at(path));
    }
  }

  ProofNode copy_imp_l(const ProofNode& n, const RepEntry& e, const std::string& path) {
    Prop x1 = unwrap_inst(n.inst[0], path);
    Prop x2 = unwrap_inst(n.inst[1], path);
    ProofNode left_sub = go(n.premises[0], path + ".0");
    ProofNode right_sub = restore_right(n, go(n.premises[1], path + ".1"), path);
    ProofNode out;
    out.rule = Rule::ImpL;
    Sequent sc = left_sub.conclusion;
    sc.left = with_front(multiset_remove_one(sc.left, x2), {e.classical});
    out.conclusion = std::move(sc);
    out.principal = 0;
    out.inst = {x1, x2};
    out.premises.push_back(std::move(left_sub));
    out.premises.push_back(std::move(right_sub));
    return out;
  }

  ProofNode copy_left_rule(const ProofNode& n, const RepEntry& e, const std::string& path) {
    ProofNode out;
    out.principal = 0;
    switch (n.rule) {
      case Rule::AndL: {
        Prop x1 = unwrap_inst(n.inst[0], path), x2 = unwrap_inst(n.inst[1], path);
        ProofNode sub = go(n.premises[0], path + ".0");
        out.rule = Rule::AndL;
        Sequent sc = sub.conclusion;
        sc.left = multiset_remove_one(sc.left, x1);
        sc.left = multiset_remove_one(sc.left, x2);
        sc.left = with_front(sc.left, {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {x1, x2};
        out.premises.push_back(std::move(sub));
        return out;
      }
      case Rule::OrL: {
        Prop x1 = unwrap_inst(n.inst[0], path), x2 = unwrap_inst(n.inst[1], path);
        ProofNode s1 = go(n.premises[0], path + ".0");
        ProofNode s2 = go(n.premises[1], path + ".1");
        out.rule = Rule::OrL;
        Sequent sc = s1.conclusion;
        sc.left = with_front(multiset_remove_one(sc.left, x1), {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {x1, x2};
        out.premises.push_back(std::move(s1));
        out.premises.push_back(std::move(s2));
        return out;
      }
      case Rule::ForallL:
      case Rule::ExistsL: {
        Prop body = unwrap_inst(n.inst[0], path);
        ProofNode sub = go(n.premises[0], path + ".0");
        out.rule = n.rule;
        out.bound_var = n.bound_var;
        out.witness = n.witness;
        Prop premise_form = n.rule == Rule::ForallL
                                ? substitute(body, n.bound_var, *n.witness)
                                : body;
        Sequent sc = sub.conclusion;
        sc.left = with_front(multiset_remove_one(sc.left, premise_form), {e.classical});
        out.conclusion = std::move(sc);
        out.inst = {body};
        out.premises.push_back(std::move(sub));
        return out;
      }
      default:
        throw TranslationError("unexpected left rule at " + at(path));
    }
  }

  // The instances of copied rules are double-wrapped translates (or, under
  // a quantifier, a binder over one); recover the classical instance.
  Prop unwrap_inst(const Prop& w, const std::string& path) {
    if (w.is_quant()) {
      Prop inner = unwrap_inst(w.body(), path);
      return Prop::quant(w.kind, w.name, std::move(inner));
    }
    if (w.kind == Prop::Kind::Imp && alpha_eq(w.rhs(), a_) &&
        w.lhs().kind == Prop::Kind::Imp && alpha_eq(w.lhs().rhs(), a_)) {
      if (auto base = untranslate(w.lhs().lhs(), a_)) return *base;
    }
    throw TranslationError("instance '" + print_prop(w) +
                           "' is not a wrapped translate at " + at(path));
  }

  Prop a_;
  const RewriteSystem& sys_;
  int fuel_;
};

}  // namespace detail

inline SequentProof translate_int_to_clas(const SequentProof& pi, const Representation& xi,
                                          const Prop& a, const RewriteSystem& sys, int fuel) {
  if (pi.flavor != Flavor::Intuitionistic)
    throw TranslationError("input proof must be intuitionistic");
  if (!is_cut_free(pi)) throw TranslationError("input proof must be cut-free");
  RewriteSystem tsys = atrans_system(sys, TranslationContext::make(a));
  ProofVerdict v = check_intuitionistic(pi, tsys, fuel);
  if (!v.ok())
    throw TranslationError("input proof does not check under the translated system: " +
                           v.message + " at " + (v.path.empty() ? "root" : v.path));

  detail::BackwardTx tx(a, sys, fuel);

  // The stated representation must match the root conclusion.
  const Sequent& c = pi.root.conclusion;
  if (xi.left.size() != c.left.size())
    throw TranslationError("representation does not cover the left context");
  for (size_t i = 0; i < xi.left.size(); ++i) {
    Prop expected = atrans_prop(xi.left[i].classical, a);
    for (int w = 0; w < xi.left[i].wraps; ++w) expected = wrap1(std::move(expected), a);
    if (!alpha_eq(expected, c.left[i]))
      throw TranslationError("representation entry " + std::to_string(i) +
                             " does not match the conclusion");
  }
  if (xi.right) {
    if (c.right.empty()) throw TranslationError("representation names a missing right side");
    Prop expected = atrans_prop(xi.right->classical, a);
    for (int w = 0; w < xi.right->wraps; ++w) expected = wrap1(std::move(expected), a);
    if (!alpha_eq(expected, c.right[0]))
      throw TranslationError("right representation entry does not match the conclusion");
  } else if (!c.right.empty() && !alpha_eq(c.right[0], a)) {
    throw TranslationError("right side is neither represented nor the frozen parameter");
  }

  SequentProof out;
  out.flavor = Flavor::Classical;
  out.root = tx.go(pi.root, "");
  if (!sequent_alpha_eq(out.root.conclusion, represented_sequent(xi)))
    throw TranslationError("translated proof concludes a different sequent than represented");
  return out;
}

}  // namespace modulo
