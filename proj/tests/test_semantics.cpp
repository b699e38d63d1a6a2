#include <catch2/catch_amalgamated.hpp>

#include "modulo/semantics.hpp"

using namespace modulo;

namespace {

std::shared_ptr<const FinitePHA> shared(FinitePHA b) {
  return std::make_shared<FinitePHA>(std::move(b));
}

const Prop P = Prop::atom("P");
const Prop Q = Prop::atom("Q");

}  // namespace

TEST_CASE("term evaluation") {
  Structure s = default_structure(shared(boolean_2()), 2, {{"f", 1}, {"g", 1}, {"c", 0}}, {});
  s.fhat["f"].values = {0, 1};  // identity
  s.fhat["g"].values = {1, 0};  // swap
  s.fhat["c"].values = {1};

  CHECK(eval_term(Term::var("x"), s, {{"x", 1}}) == 1);
  CHECK(eval_term(Term::app("f", {Term::var("x")}), s, {{"x", 1}}) == 1);
  CHECK(eval_term(Term::app("f", {Term::app("g", {Term::app("c")})}), s, {}) == 0);
  CHECK_THROWS_AS(eval_term(Term::var("y"), s, {}), SemanticsError);
}

TEST_CASE("proposition evaluation") {
  Structure s = default_structure(shared(boolean_2()), 2, {}, {{"P", 0}, {"Q", 0}, {"R", 1}});
  s.phat["P"].values = {1};
  s.phat["Q"].values = {0};
  s.phat["R"].values = {1, 0};

  CHECK(eval_prop(Prop::top(), s, {}) == 1);
  CHECK(eval_prop(Prop::and_(P, Q), s, {}) == 0);
  CHECK(eval_prop(Prop::forall("x", Prop::atom("R", {Term::var("x")})), s, {}) == 0);
  CHECK(eval_prop(Prop::exists("x", Prop::atom("R", {Term::var("x")})), s, {}) == 1);
}

TEST_CASE("model condition on rules") {
  RewriteSystem sys = make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}});
  Structure s = default_structure(shared(boolean_2()), 1, {}, {{"P", 0}});
  const FinitePHA& B = *s.algebra;

  s.phat["P"].values = {B.and_(B.top, B.top)};
  CHECK(is_model(s, sys).ok);

  s.phat["P"].values = {0};
  CHECK_FALSE(is_model(s, sys).ok);

  CHECK(is_model(s, RewriteSystem{}).ok);
}

TEST_CASE("rule-level model condition extends to rewriting") {
  RewriteSystem sys = make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}});
  Structure s = default_structure(shared(boolean_2()), 2, {}, {{"P", 0}, {"Q", 1}});
  s.phat["P"].values = {1};
  s.phat["Q"].values = {0, 1};
  REQUIRE(is_model(s, sys).ok);

  SymbolPool pool;
  pool.preds = {{"P", 0}, {"Q", 1}};
  PropGen gen(pool, 37);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Prop p = gen.prop(4);
    Prop q = p;
    for (int steps = 0; steps < 3; ++steps) {
      std::vector<Prop> reducts = one_step_reducts(q, sys);
      if (reducts.empty()) break;
      q = reducts[std::uniform_int_distribution<size_t>(0, reducts.size() - 1)(rng)];
    }
    Assignment phi;
    std::uniform_int_distribution<int> d(0, 1);
    for (const std::string& v : free_vars(p)) phi[v] = d(rng);
    CHECK(eval_prop(p, s, phi) == eval_prop(q, s, phi));
  }
}

TEST_CASE("grafting picks tables by symbol occurrence") {
  auto alg = shared(boolean_2());
  Structure m0 = default_structure(alg, 2, {{"f", 1}}, {{"P", 0}, {"Q", 0}});
  Structure m1 = m0;
  m0.phat["P"].values = {1};
  m0.phat["Q"].values = {1};
  m0.fhat["f"].values = {1, 1};
  m1.phat["P"].values = {0};
  m1.phat["Q"].values = {0};
  m1.fhat["f"].values = {0, 0};

  Structure g1 = graft(m0, m1, Q);
  CHECK(g1.phat["Q"].values == m0.phat["Q"].values);
  CHECK(g1.phat["P"].values == m1.phat["P"].values);
  CHECK(g1.fhat["f"].values == m1.fhat["f"].values);

  Structure g2 = graft(m0, m1, Prop::top());
  CHECK(g2.phat["P"].values == m1.phat["P"].values);
  CHECK(g2.phat["Q"].values == m1.phat["Q"].values);

  Prop all = Prop::and_(P, Prop::and_(Q, Prop::atom("R2", {Term::app("f", {Term::var("x")})})));
  (void)all;
  Structure g3 = graft(m0, m1, Prop::and_(P, Prop::and_(Q, Prop::atom("P", {}))));
  CHECK(g3.phat["P"].values == m0.phat["P"].values);
  CHECK(g3.phat["Q"].values == m0.phat["Q"].values);

  // Grafting twice along the same proposition changes nothing more.
  Structure gg = graft(m0, g1, Q);
  CHECK(gg.phat == g1.phat);
  CHECK(gg.fhat == g1.fhat);

  Structure other = default_structure(shared(chain_n(3)), 2, {{"f", 1}}, {{"P", 0}, {"Q", 0}});
  CHECK_THROWS_AS(graft(m0, other, Q), SemanticsError);
}

TEST_CASE("sampled grafting equalities") {
  auto alg = shared(chain_n(3));
  Structure m0 = default_structure(alg, 2, {{"f", 1}}, {{"P", 1}, {"Q", 0}, {"R", 1}});
  Structure m1 = m0;
  m0.phat["P"].values = {2, 1};
  m0.phat["Q"].values = {1};
  m0.phat["R"].values = {0, 2};
  m0.fhat["f"].values = {1, 0};
  m1.phat["P"].values = {0, 0};
  m1.phat["Q"].values = {2};
  m1.phat["R"].values = {1, 1};
  m1.fhat["f"].values = {0, 1};

  Prop a = Prop::and_(Q, Prop::exists("x", Prop::atom("R", {Term::var("x")})));
  SampledReport rep = check_grafting(m0, m1, a, 500, 101);
  INFO(rep.failure);
  CHECK(rep.ok);
  CHECK(rep.samples == 1000);
}

TEST_CASE("both translation routes evaluate identically") {
  auto alg = shared(chain_n(3));
  Structure s = default_structure(alg, 2, {{"f", 1}}, {{"P", 1}, {"Q", 0}, {"S", 0}});
  s.phat["P"].values = {2, 0};
  s.phat["Q"].values = {1};
  s.phat["S"].values = {0};
  s.fhat["f"].values = {1, 0};

  Prop a = Prop::atom("S");
  SampledReport rep = check_translation_agreement(s, a, 400, 7);
  INFO(rep.failure);
  CHECK(rep.ok);

  // Explicit instance: both routes on P(x) => Q with the parameter denoting 0.
  int ahat = eval_prop(a, s, {});
  REQUIRE(ahat == 0);
  auto translated = shared(a_translate(*alg, ahat));
  Prop b = Prop::imp(Prop::atom("P", {Term::var("x")}), Q);
  Assignment phi{{"x", 0}};
  CHECK(eval_prop(atrans_prop(b, a), s, phi) ==
        eval_prop(b, s.with_algebra(translated), phi));

  CHECK_THROWS_AS(check_translation_agreement(s, Prop::atom("P", {Term::var("x")}), 10, 1),
                  TranslationError);
}

TEST_CASE("model search finds the forced table") {
  RewriteSystem sys = make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}});
  for (const FinitePHA& B : bundled_algebras()) {
    auto alg = shared(B);
    SearchResult r = model_search(sys, alg, 1, 1000);
    INFO(B.name);
    REQUIRE(r.status == SearchResult::Status::Found);
    CHECK(r.structure->phat.at("P").values[0] == B.and_(B.top, B.top));
  }
}

TEST_CASE("model search scans fixed points of self-referential rules") {
  RewriteSystem sys = make_system({{"P", {}, Prop::imp(P, P)}});
  auto alg = shared(chain_n(3));
  SearchResult r = model_search(sys, alg, 1, 1000);
  REQUIRE(r.status == SearchResult::Status::Found);
  int found = r.structure->phat.at("P").values[0];

  // Oracle: scan the implication diagonal directly.
  std::set<int> solutions;
  const FinitePHA& B = *alg;
  for (int p = 0; p < B.n; ++p)
    if (B.imp_(p, p) == p) solutions.insert(p);
  CHECK(solutions == std::set<int>{2});
  CHECK(solutions.count(found));
}

TEST_CASE("model search distinguishes exhaustion kinds") {
  RewriteSystem sys = make_system({{"P", {}, Prop::imp(P, Q)}});
  auto alg = shared(boolean_2());

  SearchResult found = model_search(sys, alg, 1, 1000);
  REQUIRE(found.status == SearchResult::Status::Found);
  const FinitePHA& B = *alg;
  int p = found.structure->phat.at("P").values[0];
  int q = found.structure->phat.at("Q").values[0];
  CHECK(p == B.imp_(p, q));

  std::map<std::string, SymbolTable> pinned{{"Q", {0, {0}}}};
  SearchResult none = model_search(sys, alg, 1, 1000, pinned);
  CHECK(none.status == SearchResult::Status::None);

  SearchResult tight = model_search(sys, alg, 1, 1, pinned);
  CHECK(tight.status == SearchResult::Status::BudgetExhausted);
}

TEST_CASE("stability witness builds a model of the translated system") {
  std::vector<RewriteSystem> systems;
  systems.push_back(make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}}));
  systems.push_back(make_system({{"P", {}, Prop::imp(P, P)}}));
  for (const RewriteSystem& sys : systems)
    for (const FinitePHA& B : bundled_algebras()) {
      INFO(B.name);
      WitnessResult w = stability_witness(sys, Q, shared(B), 1, 100000);
      REQUIRE(w.status == SearchResult::Status::Found);
      CHECK(is_model(*w.structure, atrans_system(sys, Q)).ok);
    }

  WitnessResult empty = stability_witness(RewriteSystem{}, Q, shared(boolean_2()), 2, 100);
  CHECK(empty.status == SearchResult::Status::Found);

  CHECK_THROWS_AS(stability_witness(systems[0], P, shared(boolean_2()), 1, 100),
                  TranslationError);
}

TEST_CASE("finite probe over the bundled algebras") {
  RewriteSystem sys = make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}});
  ProbeReport rep = superconsistency_probe(sys, bundled_algebras(), {1, 2}, 100000);
  CHECK(rep.all_found());
  CHECK_FALSE(rep.refuted());

  // The translated system still has a model in every bundled algebra; the
  // probe can only refute, never certify, the universal property.
  RewriteSystem tsys = atrans_system(sys, P);
  ProbeReport rep2 = superconsistency_probe(tsys, bundled_algebras(), {1}, 100000);
  CHECK(rep2.all_found());
}
