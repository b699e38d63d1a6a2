#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modulo/natded.hpp"
#include "modulo/parse.hpp"
#include "modulo/scenarios.hpp"

using namespace modulo;

namespace {

const Prop P = Prop::atom("P");
const Prop Q = Prop::atom("Q");
const int kFuel = 200;

ProofTerm V(const std::string& x) { return ProofTerm::mkvar(x); }

}  // namespace

TEST_CASE("typing the self-application body") {
  // x : P with P congruent to P => Q makes x x : Q.
  RewriteSystem sys = make_system({{"P", {}, Prop::imp(P, Q)}});
  ProofTerm t = ProofTerm::lam("x", ProofTerm::app(V("x"), V("x")));
  CHECK(type_check(t, {}, Prop::imp(P, Q), sys, kFuel).ok());
  CHECK(type_check(t, {}, P, sys, kFuel).ok());  // P itself reads as P => Q
}

TEST_CASE("typing rejections and fuel") {
  RewriteSystem empty;
  CHECK(type_check(ProofTerm::pair(ProofTerm::unit(), ProofTerm::unit()), {},
                   Prop::and_(Prop::top(), Prop::top()), empty, kFuel)
            .ok());
  CHECK(type_check(ProofTerm::unit(), {}, Prop::bot(), empty, kFuel).status ==
        TypeStatus::Rejected);
  CHECK(type_check(V("x"), {}, P, empty, kFuel).status == TypeStatus::Rejected);
  CHECK(type_check(ProofTerm::fst(ProofTerm::unit()), {}, P, empty, kFuel).status ==
        TypeStatus::Rejected);

  // P -> P never reaches a connective: the goal head stays undecided.
  RewriteSystem loop = make_system({{"P", {}, P}});
  CHECK(type_check(ProofTerm::lam("x", V("x")), {}, P, loop, kFuel).status ==
        TypeStatus::Unknown);
}

TEST_CASE("the bundled looping terms type-check") {
  LoopExample ex = build_loop_example();
  CHECK(type_check(ex.t1, {}, ex.type_t1, ex.system, kFuel).ok());
  CHECK(type_check(ex.t2, {}, ex.type_t2, ex.system, kFuel).ok());
  CHECK(ex.type_t1 == parse_prop("top => P => P"));
  CHECK(ex.type_t2 == parse_prop("top => P"));
}

TEST_CASE("single reduction steps") {
  ProofTerm id_app = ProofTerm::app(ProofTerm::lam("x", V("x")), ProofTerm::unit());
  auto r = reduce_step(id_app, Strategy::LeftmostOutermost);
  REQUIRE(r);
  CHECK(*r == ProofTerm::unit());

  ProofTerm proj = ProofTerm::fst(ProofTerm::pair(ProofTerm::unit(), V("t")));
  auto r2 = reduce_step(proj, Strategy::LeftmostOutermost);
  REQUIRE(r2);
  CHECK(*r2 == ProofTerm::unit());

  CHECK_FALSE(reduce_step(V("x"), Strategy::LeftmostOutermost));
  CHECK_FALSE(reduce_step(ProofTerm::pair(ProofTerm::unit(), ProofTerm::unit()),
                          Strategy::FullDevelopment));
}

TEST_CASE("substitution avoids capture in proof terms") {
  // (\y. x y){y/x} must rename the binder.
  ProofTerm t = ProofTerm::lam("y", ProofTerm::app(V("x"), V("y")));
  ProofTerm r = subst_term(t, "x", V("y"));
  CHECK(canon_string(r) == canon_string(ProofTerm::lam("z", ProofTerm::app(V("y"), V("z")))));
}

TEST_CASE("the self-application loops with period one") {
  auto omega = scenarios::omega();
  CHECK(type_check(omega.term, {}, omega.goal, omega.system, kFuel).ok());
  for (Strategy s : {Strategy::LeftmostOutermost, Strategy::FullDevelopment}) {
    ReduceResult r = reduce(omega.term, 50, s);
    CHECK(r.status == ReduceResult::Status::Cycle);
    CHECK(r.cycle.size() == 1);
  }
}

TEST_CASE("the bundled loop cycles with period three under full development") {
  LoopExample ex = build_loop_example();
  ReduceResult r = reduce(ex.redex, 50, Strategy::FullDevelopment);
  REQUIRE(r.status == ReduceResult::Status::Cycle);
  REQUIRE(r.cycle.size() == 3);

  // The displayed sequence: t1 t2, then fst(t2 I) (\z. t2 I), then
  // fst<t1,t1> (\z. <t1,t1>), and back to t1 t2.
  ProofTerm t2i = ProofTerm::app(ex.t2, ProofTerm::unit());
  ProofTerm step1 = ProofTerm::app(ProofTerm::fst(t2i), ProofTerm::lam("z", t2i));
  ProofTerm pp = ProofTerm::pair(ex.t1, ex.t1);
  ProofTerm step2 = ProofTerm::app(ProofTerm::fst(pp), ProofTerm::lam("z", pp));
  CHECK(canon_string(r.cycle[0]) == canon_string(ex.redex));
  CHECK(canon_string(r.cycle[1]) == canon_string(step1));
  CHECK(canon_string(r.cycle[2]) == canon_string(step2));

  // Leftmost-outermost interleaves the two residuals and keeps growing
  // instead of cycling.
  ReduceResult lo = reduce(ex.redex, 200, Strategy::LeftmostOutermost);
  CHECK(lo.status == ReduceResult::Status::FuelExhausted);
}

TEST_CASE("reported cycles really repeat") {
  auto omega = scenarios::omega();
  LoopExample ex = build_loop_example();
  std::vector<std::pair<ProofTerm, Strategy>> cases = {
      {omega.term, Strategy::LeftmostOutermost},
      {omega.term, Strategy::FullDevelopment},
      {ex.redex, Strategy::FullDevelopment},
  };
  for (auto& [t, strat] : cases) {
    ReduceResult r = reduce(t, 100, strat);
    REQUIRE(r.status == ReduceResult::Status::Cycle);
    ProofTerm cur = r.cycle[0];
    for (size_t i = 0; i < r.cycle.size(); ++i) {
      auto next = reduce_step(cur, strat);
      REQUIRE(next);
      cur = *next;
    }
    CHECK(canon_string(cur) == canon_string(r.cycle[0]));
  }
}

// --- well-typed term generation for the sampled properties -----------------

namespace {

struct TypedGen {
  std::mt19937_64 rng;
  explicit TypedGen(uint64_t seed) : rng(seed) {}

  size_t pick(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }

  Prop type(int depth) {
    if (depth <= 0) return pick(2) ? Prop::top() : Prop::atom(pick(2) ? "X" : "Y");
    switch (pick(4)) {
      case 0: return Prop::top();
      case 1: return Prop::atom(pick(2) ? "X" : "Y");
      case 2: return Prop::imp(type(depth - 1), type(depth - 1));
      default: return Prop::and_(type(depth - 1), type(depth - 1));
    }
  }

  std::optional<ProofTerm> term_of(const Prop& goal,
                                   const std::vector<std::pair<std::string, Prop>>& ctx,
                                   int depth) {
    std::vector<ProofTerm> vars;
    for (auto& [x, ty] : ctx)
      if (alpha_eq(ty, goal)) vars.push_back(ProofTerm::mkvar(x));
    if (!vars.empty() && pick(3) == 0) return vars[pick(vars.size())];

    if (depth > 0 && pick(4) == 0) {
      // Indirection through an application or a projection.
      if (pick(2) == 0) {
        Prop arg = type(1);
        auto fn = term_of(Prop::imp(arg, goal), ctx, depth - 1);
        auto xv = term_of(arg, ctx, depth - 1);
        if (fn && xv) return ProofTerm::app(std::move(*fn), std::move(*xv));
      } else {
        Prop other = type(1);
        auto pr = term_of(Prop::and_(goal, other), ctx, depth - 1);
        if (pr) return ProofTerm::fst(std::move(*pr));
      }
    }

    switch (goal.kind) {
      case Prop::Kind::Top: return ProofTerm::unit();
      case Prop::Kind::Imp: {
        std::string x = "v" + std::to_string(ctx.size());
        auto ctx2 = ctx;
        ctx2.push_back({x, goal.lhs()});
        auto body = term_of(goal.rhs(), ctx2, depth - 1);
        if (!body) return std::nullopt;
        return ProofTerm::lam(x, std::move(*body));
      }
      case Prop::Kind::And: {
        auto l = term_of(goal.lhs(), ctx, depth - 1);
        auto r = term_of(goal.rhs(), ctx, depth - 1);
        if (!l || !r) return std::nullopt;
        return ProofTerm::pair(std::move(*l), std::move(*r));
      }
      default:
        return vars.empty() ? std::nullopt
                            : std::optional<ProofTerm>(vars[pick(vars.size())]);
    }
  }
};

}  // namespace

TEST_CASE("subject reduction on generated well-typed terms") {
  RewriteSystem empty;
  TypedGen gen(321);
  int produced = 0;
  for (int i = 0; i < 400 && produced < 150; ++i) {
    Prop goal = gen.type(3);
    auto t = gen.term_of(goal, {}, 4);
    if (!t) continue;
    if (!type_check(*t, {}, goal, empty, kFuel).ok()) continue;
    ++produced;
    ProofTerm cur = *t;
    for (int step = 0; step < 10; ++step) {
      auto next = reduce_step(cur, Strategy::LeftmostOutermost);
      if (!next) break;
      cur = *next;
      TypeVerdict v = type_check(cur, {}, goal, empty, kFuel);
      INFO(print_proof_term(*t) + "  ->*  " + print_proof_term(cur));
      CHECK(v.ok());
    }
  }
  CHECK(produced >= 100);
}

TEST_CASE("without rewriting every generated term normalizes") {
  RewriteSystem empty;
  TypedGen gen(654);
  int produced = 0;
  for (int i = 0; i < 400 && produced < 150; ++i) {
    Prop goal = gen.type(3);
    auto t = gen.term_of(goal, {}, 4);
    if (!t) continue;
    if (!type_check(*t, {}, goal, empty, kFuel).ok()) continue;
    ++produced;
    ReduceResult r = reduce(*t, 10000, Strategy::LeftmostOutermost);
    CHECK(r.status == ReduceResult::Status::Normal);
  }
  CHECK(produced >= 100);
}
