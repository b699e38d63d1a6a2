#include <catch2/catch_amalgamated.hpp>

#include "modulo/pha.hpp"

using namespace modulo;

TEST_CASE("bundled algebras satisfy every axiom") {
  for (const FinitePHA& B : bundled_algebras()) {
    INFO(B.name);
    CHECK_NOTHROW(B.validate());
    CHECK(check_pha(B).ok());
    CHECK(check_ordered(B).ok());
    CHECK(check_complete(B).ok());
  }
}

TEST_CASE("chain implication matches the residuation oracle") {
  for (int k = 2; k <= 5; ++k) {
    FinitePHA B = chain_n(k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        // Largest c with min(c, a) <= b.
        int best = -1;
        for (int c = 0; c < k; ++c)
          if (std::min(c, a) <= b) best = std::max(best, c);
        REQUIRE(best >= 0);
        CHECK(B.imp_(a, b) == best);
      }
  }
  CHECK(chain_n(3).imp_(2, 1) == 1);  // top imp middle = middle
}

TEST_CASE("chain_2 is boolean_2 up to naming") {
  FinitePHA a = boolean_2(), b = chain_n(2);
  CHECK(a.leq == b.leq);
  CHECK(a.imp == b.imp);
  CHECK(a.meet == b.meet);
  CHECK(a.join == b.join);
  CHECK(a.forall == b.forall);
  CHECK(a.exists == b.exists);
}

TEST_CASE("a corrupted implication table is pinned to the residuation clause") {
  FinitePHA B = boolean_2();
  B.imp[1 * 2 + 0] = 1;  // imp(1,0) corrupted
  AlgebraReport rep = check_pha(B);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const AlgebraViolation& v : rep.violations)
    found = found || (v.clause == 7 && v.detail.find("(a=1,b=1,c=0)") != std::string::npos);
  CHECK(found);
}

TEST_CASE("reversed refinement order violates the refinement condition") {
  FinitePHA B = chain_n(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) B.sqle[a * 3 + b] = b <= a;
  AlgebraReport rep = check_ordered(B);
  REQUIRE_FALSE(rep.ok());
  bool refinement = false;
  for (const AlgebraViolation& v : rep.violations) refinement = refinement || v.clause == 2;
  CHECK(refinement);
}

TEST_CASE("pre3 is a genuine pre-order") {
  FinitePHA B = pre3();
  CHECK(B.le(1, 2));
  CHECK(B.le(2, 1));  // equivalent but distinct elements
  CHECK_FALSE(B.le(1, 0));
  CHECK(check_pha(B).ok());
  CHECK(check_ordered(B).ok());
  CHECK(check_complete(B).ok());
}

TEST_CASE("an antichain refinement misses bounds") {
  FinitePHA B = product(boolean_2(), boolean_2());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) B.sqle[a * 4 + b] = a == b;
  CompletenessReport rep = check_complete(B);
  CHECK_FALSE(rep.ok());
  CHECK(rep.glb[(1u << 1) | (1u << 2)] == -1);  // {1,2} has no glb
}

TEST_CASE("implication inequalities hold on every bundled algebra") {
  for (const FinitePHA& B : bundled_algebras()) {
    INFO(B.name);
    CHECK(check_implication_laws(B).ok());
  }
}

TEST_CASE("mutated tables are reported with the failing inequality") {
  FinitePHA B = boolean_2();
  B.imp[1 * 2 + 1] = 0;  // imp(1,1) corrupted
  AlgebraReport rep = check_implication_laws(B);
  REQUIRE_FALSE(rep.ok());
  bool first = false;
  for (const AlgebraViolation& v : rep.violations) first = first || v.clause == 1;
  CHECK(first);  // b <= a imp b fails at a=b=1
}

TEST_CASE("translation at bot is the identity on boolean_2") {
  FinitePHA B = boolean_2();
  FinitePHA T = a_translate(B, 0);
  CHECK(T.leq == B.leq);
  CHECK(T.imp == B.imp);
  CHECK(T.meet == B.meet);
  CHECK(T.join == B.join);
  CHECK(T.forall == B.forall);
  CHECK(T.exists == B.exists);
}

TEST_CASE("translated chain_3 at bot compares via double negation") {
  FinitePHA B = chain_n(3);
  FinitePHA T = a_translate(B, 0);
  // (1 imp 0) imp 0 = 2 and (2 imp 0) imp 0 = 2: the middle element and top
  // become equivalent, so the new comparison is not antisymmetric.
  CHECK(T.le(1, 2));
  CHECK(T.le(2, 1));
  CHECK_FALSE(T.le(1, 0));
}

TEST_CASE("translation at top collapses the comparison") {
  FinitePHA B = chain_n(3);
  FinitePHA T = a_translate(B, B.top);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(T.le(a, b));
}

TEST_CASE("translated algebras pass all checkers for every element") {
  for (const FinitePHA& B : bundled_algebras())
    for (int a = 0; a < B.n; ++a) {
      FinitePHA T = a_translate(B, a);
      INFO(T.name);
      CHECK(check_pha(T).ok());
      CHECK(check_ordered(T).ok());
      CHECK(check_complete(T).ok());
    }
}

TEST_CASE("translated quantifier tables are the image composition") {
  for (const FinitePHA& B : bundled_algebras())
    for (int a = 0; a < B.n; ++a) {
      FinitePHA T = a_translate(B, a);
      for (uint32_t mask = 0; mask <= B.full_mask(); ++mask) {
        uint32_t image = 0;
        for (int x = 0; x < B.n; ++x)
          if (mask & (1u << x)) image |= 1u << B.imp_(B.imp_(x, a), a);
        CHECK(T.fa(mask) == B.fa(image));
        CHECK(T.ex(mask) == B.ex(image));
      }
    }
}

TEST_CASE("the translated comparison extends the original") {
  for (const FinitePHA& B : bundled_algebras())
    for (int a = 0; a < B.n; ++a) {
      FinitePHA T = a_translate(B, a);
      for (int b = 0; b < B.n; ++b)
        for (int c = 0; c < B.n; ++c)
          if (B.le(b, c)) CHECK(T.le(b, c));
    }
}
