#pragma once

// Bundled end-to-end scenarios: the two-rule system proofs and the looping
// proof terms the workbench ships as named demos.

#include "modulo/natded.hpp"
#include "modulo/sequent.hpp"

namespace modulo::scenarios {

struct SequentScenario {
  SequentProof proof;
  RewriteSystem system;
};

// Classical proof of |- Q under P -> P => Q. The cut formula is P, read
// through the congruence as P => Q on one side and as the bare atom on the
// other; the sequent has no cut-free proof under this system.
inline SequentScenario cut_proof_q() {
  Prop P = Prop::atom("P"), Q = Prop::atom("Q");
  SequentScenario s;
  s.system = make_system({{"P", {}, Prop::imp(P, Q)}});

  // P, P |- Q by imp-l on the first P (congruent to P => Q).
  ProofNode impl;
  impl.rule = Rule::ImpL;
  impl.conclusion = {{P, P}, {Q}};
  impl.principal = 0;
  impl.inst = {P, Q};
  impl.premises.push_back(build::weak_l(P, build::axiom(Q, Q)));
  impl.premises.push_back(build::weak_r(Q, build::axiom(P, P)));

  // P |- Q by contracting the two hypotheses.
  ProofNode contr;
  contr.rule = Rule::ContrL;
  contr.conclusion = {{P}, {Q}};
  contr.principal = 0;
  contr.inst = {P, P};
  contr.premises.push_back(std::move(impl));

  // |- P, Q by imp-r on P (congruent to P => Q).
  ProofNode impr;
  impr.rule = Rule::ImpR;
  impr.conclusion = {{}, {P, Q}};
  impr.principal = 0;
  impr.inst = {P, Q};
  impr.premises.push_back(build::weak_r(Q, contr));

  ProofNode cut;
  cut.rule = Rule::Cut;
  cut.conclusion = {{}, {Q}};
  cut.inst = {P, P};
  cut.premises.push_back(std::move(impr));
  cut.premises.push_back(std::move(contr));

  s.proof = {Flavor::Classical, std::move(cut)};
  return s;
}

// Cut-free classical proof of |- P under P -> P => P, in two rules.
inline SequentScenario two_step_proof_p() {
  Prop P = Prop::atom("P");
  SequentScenario s;
  s.system = make_system({{"P", {}, Prop::imp(P, P)}});

  ProofNode impr;
  impr.rule = Rule::ImpR;
  impr.conclusion = {{}, {P}};
  impr.principal = 0;
  impr.inst = {P, P};
  impr.premises.push_back(build::axiom(P, P));

  s.proof = {Flavor::Classical, std::move(impr)};
  return s;
}

struct OmegaScenario {
  ProofTerm term;          // the self-application applied to itself
  Prop goal;               // Q
  RewriteSystem system;    // P -> P => Q
};

// The self-application becomes typable because P is congruent to P => Q;
// the function copy carries the annotation x : P so its type is inferable.
inline OmegaScenario omega() {
  Prop P = Prop::atom("P"), Q = Prop::atom("Q");
  OmegaScenario s;
  s.system = make_system({{"P", {}, Prop::imp(P, Q)}});
  ProofTerm self_ann = ProofTerm::lam(
      "x", ProofTerm::app(ProofTerm::mkvar("x"), ProofTerm::mkvar("x")), P);
  ProofTerm self = ProofTerm::lam(
      "x", ProofTerm::app(ProofTerm::mkvar("x"), ProofTerm::mkvar("x")));
  s.term = ProofTerm::app(std::move(self_ann), std::move(self));
  s.goal = Q;
  return s;
}

}  // namespace modulo::scenarios
