#pragma once

// Finite pseudo-Heyting algebras. The comparison <= is only a pre-order, so
// meets, joins and the quantifier tables are some choice of bound, not the
// unique one. Quantifier tables are stored explicitly for every subset of
// the carrier (bitmask-indexed) instead of being derived, both because the
// pre-order does not pin them down and because the element translation
// composes them pointwise.
//
// Carrier sizes are expected to stay small (the quantifier tables have 2^n
// entries); the bundled algebras use n <= 6 and the checkers are exhaustive.

#include <cstdint>
#include <string>
#include <vector>

#include "modulo/syntax.hpp"

namespace modulo {

struct FinitePHA {
  int n = 0;
  std::string name;
  std::vector<uint8_t> leq;     // n*n, row-major: leq[a*n+b] <=> a <= b
  std::vector<uint8_t> sqle;    // n*n, the refinement order
  int top = 0, bot = 0;
  std::vector<int> imp, meet, join;      // n*n, row-major
  std::vector<int> forall, exists;       // 2^n, indexed by subset bitmask

  bool le(int a, int b) const { return leq[a * n + b] != 0; }
  bool sq(int a, int b) const { return sqle[a * n + b] != 0; }
  int imp_(int a, int b) const { return imp[a * n + b]; }
  int and_(int a, int b) const { return meet[a * n + b]; }
  int or_(int a, int b) const { return join[a * n + b]; }
  int fa(uint32_t mask) const { return forall[mask]; }
  int ex(uint32_t mask) const { return exists[mask]; }
  uint32_t full_mask() const { return (1u << n) - 1; }

  // Structural sanity: table sizes and entry ranges. Axioms are the
  // checkers' business. Carriers are capped at 12 elements: the quantifier
  // tables have 2^n entries and the exhaustive checkers walk subset pairs.
  void validate() const {
    if (n <= 0 || n > 12) throw std::runtime_error("algebra carrier size out of range");
    size_t nn = static_cast<size_t>(n) * n, qn = size_t{1} << n;
    if (leq.size() != nn || sqle.size() != nn || imp.size() != nn || meet.size() != nn ||
        join.size() != nn)
      throw std::runtime_error("algebra table has wrong size");
    if (forall.size() != qn || exists.size() != qn)
      throw std::runtime_error("quantifier table has wrong size");
    auto in_range = [&](int x) { return 0 <= x && x < n; };
    if (!in_range(top) || !in_range(bot))
      throw std::runtime_error("top/bot index out of range");
    for (int x : imp) if (!in_range(x)) throw std::runtime_error("imp entry out of range");
    for (int x : meet) if (!in_range(x)) throw std::runtime_error("meet entry out of range");
    for (int x : join) if (!in_range(x)) throw std::runtime_error("join entry out of range");
    for (int x : forall) if (!in_range(x)) throw std::runtime_error("forall entry out of range");
    for (int x : exists) if (!in_range(x)) throw std::runtime_error("exists entry out of range");
  }
};

struct AlgebraViolation {
  int clause = 0;        // axiom/property number within the relevant checker
  std::string detail;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const { return violations.empty(); }
  void add(int clause, std::string detail) {
    violations.push_back({clause, std::move(detail)});
  }
};

namespace detail {

inline std::string mask_str(uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

}  // namespace detail

// Axioms of the algebra, checked exhaustively.
//   1 pre-order   2 bounds   3 meet is a glb   4 join is a lub
//   5 forall is a glb of every subset   6 exists is a lub of every subset
//   7 residuation: a <= b imp c iff a meet b <= c
inline AlgebraReport check_pha(const FinitePHA& B) {
  AlgebraReport rep;
  const int n = B.n;
  for (int a = 0; a < n; ++a) {
    if (!B.le(a, a)) rep.add(1, "not reflexive at " + std::to_string(a));
    if (!B.le(a, B.top)) rep.add(2, std::to_string(a) + " not below top");
    if (!B.le(B.bot, a)) rep.add(2, "bot not below " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (B.le(a, b) && B.le(b, c) && !B.le(a, c))
          rep.add(1, "not transitive at (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(c) + ")");
        if (B.le(c, a) && B.le(c, b) && !B.le(c, B.and_(a, b)))
          rep.add(3, "meet not greatest at (a=" + std::to_string(a) + ",b=" +
                         std::to_string(b) + ",c=" + std::to_string(c) + ")");
        if (B.le(a, c) && B.le(b, c) && !B.le(B.or_(a, b), c))
          rep.add(4, "join not least at (a=" + std::to_string(a) + ",b=" +
                         std::to_string(b) + ",c=" + std::to_string(c) + ")");
        bool lhs = B.le(a, B.imp_(b, c));
        bool rhs = B.le(B.and_(a, b), c);
        if (lhs != rhs)
          rep.add(7, "residuation fails at (a=" + std::to_string(a) + ",b=" +
                         std::to_string(b) + ",c=" + std::to_string(c) + ")");
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!B.le(B.and_(a, b), a) || !B.le(B.and_(a, b), b))
        rep.add(3, "meet not a lower bound at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
      if (!B.le(a, B.or_(a, b)) || !B.le(b, B.or_(a, b)))
        rep.add(4, "join not an upper bound at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    }
  for (uint32_t mask = 0; mask <= B.full_mask(); ++mask) {
    int f = B.fa(mask), e = B.ex(mask);
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        if (!B.le(f, x))
          rep.add(5, "forall" + detail::mask_str(mask, n) + " not below member " +
                         std::to_string(x));
        if (!B.le(x, e))
          rep.add(6, "exists" + detail::mask_str(mask, n) + " not above member " +
                         std::to_string(x));
      }
    for (int b = 0; b < n; ++b) {
      bool below_all = true, above_all = true;
      for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) {
          below_all = below_all && B.le(b, x);
          above_all = above_all && B.le(x, b);
        }
      if (below_all && !B.le(b, f))
        rep.add(5, "forall" + detail::mask_str(mask, n) + " not greatest (witness " +
                       std::to_string(b) + ")");
      if (above_all && !B.le(e, b))
        rep.add(6, "exists" + detail::mask_str(mask, n) + " not least (witness " +
                       std::to_string(b) + ")");
    }
  }
  return rep;
}

// The refinement order and monotonicity conditions.
//   1 partial order   2 refines <=   3 top maximal
//   4 meet/join monotone   5 imp left anti-monotone, right monotone
//   6 quantifier tables monotone under the subset comparisons below
//
// Subsets compare for the existential table as: every element of the left
// set is refined by some element of the right set. The universal table uses
// the mirror condition: every element of the right set refines above some
// element of the left set. Each condition is exactly what makes the
// corresponding bound move the right way.
inline AlgebraReport check_ordered(const FinitePHA& B) {
  AlgebraReport rep;
  const int n = B.n;
  for (int a = 0; a < n; ++a) {
    if (!B.sq(a, a)) rep.add(1, "refinement not reflexive at " + std::to_string(a));
    if (B.sq(B.top, a) && a != B.top)
      rep.add(3, "top not maximal: top refined by " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (B.sq(a, b) && B.sq(b, a) && a != b)
        rep.add(1, "refinement not antisymmetric at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
      if (B.sq(a, b) && !B.le(a, b))
        rep.add(2, "refinement does not imply <= at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
      for (int c = 0; c < n; ++c)
        if (B.sq(a, b) && B.sq(b, c) && !B.sq(a, c))
          rep.add(1, "refinement not transitive at (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
    }
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (!B.sq(a, a2)) continue;
      for (int b = 0; b < n; ++b) {
        if (!B.sq(B.and_(a, b), B.and_(a2, b)) || !B.sq(B.and_(b, a), B.and_(b, a2)))
          rep.add(4, "meet not monotone at (" + std::to_string(a) + " sq " +
                         std::to_string(a2) + ", b=" + std::to_string(b) + ")");
        if (!B.sq(B.or_(a, b), B.or_(a2, b)) || !B.sq(B.or_(b, a), B.or_(b, a2)))
          rep.add(4, "join not monotone at (" + std::to_string(a) + " sq " +
                         std::to_string(a2) + ", b=" + std::to_string(b) + ")");
        if (!B.sq(B.imp_(a2, b), B.imp_(a, b)))
          rep.add(5, "imp not left anti-monotone at (" + std::to_string(a) + " sq " +
                         std::to_string(a2) + ", b=" + std::to_string(b) + ")");
        if (!B.sq(B.imp_(b, a), B.imp_(b, a2)))
          rep.add(5, "imp not right monotone at (" + std::to_string(a) + " sq " +
                         std::to_string(a2) + ", b=" + std::to_string(b) + ")");
      }
    }

  // above[x] = elements refining above x; below[y] = elements refined by y.
  std::vector<uint32_t> above(n, 0), below(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (B.sq(x, y)) {
        above[x] |= 1u << y;
        below[y] |= 1u << x;
      }
  uint32_t full = B.full_mask();
  std::vector<uint32_t> cover_up(full + 1, 0), cover_down(full + 1, 0);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    uint32_t up = 0, down = 0;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        up |= above[x];
        down |= below[x];
      }
    cover_up[mask] = up;     // elements dominating some member of mask
    cover_down[mask] = down; // elements refined by some member of mask
  }
  for (uint32_t s = 0; s <= full; ++s)
    for (uint32_t s2 = 0; s2 <= full; ++s2) {
      // forall comparison: every member of s2 dominates a member of s
      if ((s2 & ~cover_up[s]) == 0 && !B.sq(B.fa(s), B.fa(s2)))
        rep.add(6, "forall not monotone between " + detail::mask_str(s, n) + " and " +
                       detail::mask_str(s2, n));
      // exists comparison: every member of s is dominated by a member of s2
      if ((s & ~cover_down[s2]) == 0 && !B.sq(B.ex(s), B.ex(s2)))
        rep.add(6, "exists not monotone between " + detail::mask_str(s, n) + " and " +
                       detail::mask_str(s2, n));
      if (rep.violations.size() > 64) return rep;  // truncate pathological input
    }
  return rep;
}

struct CompletenessReport {
  std::vector<AlgebraViolation> violations;
  std::vector<int> glb;  // per subset mask, -1 when missing
  std::vector<int> lub;
  bool ok() const { return violations.empty(); }
};

// Every subset must have a greatest lower bound and a least upper bound for
// the refinement order.
inline CompletenessReport check_complete(const FinitePHA& B) {
  CompletenessReport rep;
  const int n = B.n;
  uint32_t full = B.full_mask();
  rep.glb.assign(full + 1, -1);
  rep.lub.assign(full + 1, -1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    for (int g = 0; g < n && rep.glb[mask] < 0; ++g) {
      bool lower = true;
      for (int x = 0; x < n && lower; ++x)
        if (mask & (1u << x)) lower = B.sq(g, x);
      if (!lower) continue;
      bool greatest = true;
      for (int b = 0; b < n && greatest; ++b) {
        bool b_lower = true;
        for (int x = 0; x < n && b_lower; ++x)
          if (mask & (1u << x)) b_lower = B.sq(b, x);
        if (b_lower) greatest = B.sq(b, g);
      }
      if (greatest) rep.glb[mask] = g;
    }
    for (int l = 0; l < n && rep.lub[mask] < 0; ++l) {
      bool upper = true;
      for (int x = 0; x < n && upper; ++x)
        if (mask & (1u << x)) upper = B.sq(x, l);
      if (!upper) continue;
      bool least = true;
      for (int b = 0; b < n && least; ++b) {
        bool b_upper = true;
        for (int x = 0; x < n && b_upper; ++x)
          if (mask & (1u << x)) b_upper = B.sq(x, b);
        if (b_upper) least = B.sq(l, b);
      }
      if (least) rep.lub[mask] = l;
    }
    if (rep.glb[mask] < 0)
      rep.violations.push_back({1, "no glb for " + detail::mask_str(mask, n)});
    if (rep.lub[mask] < 0)
      rep.violations.push_back({2, "no lub for " + detail::mask_str(mask, n)});
  }
  return rep;
}

// Implication facts that hold in any of these algebras; all quantified
// elements range over the whole carrier, with b <= c assumed where stated.
//   1: b <= a imp b
//   2: (a imp b) meet a <= b
//   3: b <= (b imp a) imp a
//   4: b <= c implies a imp b <= a imp c
//   5: b <= c implies c imp a <= b imp a
//   6: b <= c implies (b imp a) imp a <= (c imp a) imp a
//   7: ((b imp a) imp a) imp a <= b imp a
inline AlgebraReport check_implication_laws(const FinitePHA& B) {
  AlgebraReport rep;
  const int n = B.n;
  auto at = [&](int a, int b, int c) {
    return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" +
           std::to_string(c) + ")";
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!B.le(b, B.imp_(a, b))) rep.add(1, at(a, b, -1));
      if (!B.le(B.and_(B.imp_(a, b), a), b)) rep.add(2, at(a, b, -1));
      int dn = B.imp_(B.imp_(b, a), a);
      if (!B.le(b, dn)) rep.add(3, at(a, b, -1));
      if (!B.le(B.imp_(dn, a), B.imp_(b, a))) rep.add(7, at(a, b, -1));
      for (int c = 0; c < n; ++c) {
        if (!B.le(b, c)) continue;
        if (!B.le(B.imp_(a, b), B.imp_(a, c))) rep.add(4, at(a, b, c));
        if (!B.le(B.imp_(c, a), B.imp_(b, a))) rep.add(5, at(a, b, c));
        if (!B.le(B.imp_(B.imp_(b, a), a), B.imp_(B.imp_(c, a), a))) rep.add(6, at(a, b, c));
      }
    }
  return rep;
}

// --- element translation ----------------------------------------------------

// The translation of the algebra at element a: compose every operation with
// d(x) = (x imp a) imp a, compare via d, keep the carrier, bounds and the
// refinement order.
inline FinitePHA a_translate(const FinitePHA& B, int a) {
  if (a < 0 || a >= B.n) throw std::runtime_error("translation element out of range");
  const int n = B.n;
  std::vector<int> d(n);
  for (int x = 0; x < n; ++x) d[x] = B.imp_(B.imp_(x, a), a);

  FinitePHA out;
  out.n = n;
  out.name = B.name + "@" + std::to_string(a);
  out.top = B.top;
  out.bot = B.bot;
  out.sqle = B.sqle;
  out.leq.assign(size_t(n) * n, 0);
  out.imp.resize(size_t(n) * n);
  out.meet.resize(size_t(n) * n);
  out.join.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      out.leq[x * n + y] = B.le(d[x], d[y]) ? 1 : 0;
      out.imp[x * n + y] = B.imp_(d[x], d[y]);
      out.meet[x * n + y] = B.and_(d[x], d[y]);
      out.join[x * n + y] = B.or_(d[x], d[y]);
    }
  uint32_t full = B.full_mask();
  out.forall.resize(full + 1);
  out.exists.resize(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    uint32_t image = 0;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) image |= 1u << d[x];
    out.forall[mask] = B.fa(image);
    out.exists[mask] = B.ex(image);
  }
  return out;
}

// --- builders ---------------------------------------------------------------

inline FinitePHA boolean_2() {
  FinitePHA B;
  B.n = 2;
  B.name = "boolean_2";
  B.bot = 0;
  B.top = 1;
  B.leq = {1, 1, 0, 1};
  B.sqle = B.leq;
  B.imp = {1, 1, 0, 1};
  B.meet = {0, 0, 0, 1};
  B.join = {0, 1, 1, 1};
  B.forall = {1, 0, 1, 0};   // min over the subset, empty set maps to top
  B.exists = {0, 0, 1, 1};   // max over the subset, empty set maps to bot
  return B;
}

// Linear Heyting algebra on 0 < 1 < ... < k-1.
inline FinitePHA chain_n(int k) {
  if (k < 2) throw std::runtime_error("chain needs at least two elements");
  FinitePHA B;
  B.n = k;
  B.name = "chain_" + std::to_string(k);
  B.bot = 0;
  B.top = k - 1;
  B.leq.assign(size_t(k) * k, 0);
  B.imp.resize(size_t(k) * k);
  B.meet.resize(size_t(k) * k);
  B.join.resize(size_t(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      B.leq[a * k + b] = a <= b;
      B.imp[a * k + b] = a <= b ? k - 1 : b;
      B.meet[a * k + b] = std::min(a, b);
      B.join[a * k + b] = std::max(a, b);
    }
  B.sqle = B.leq;
  uint32_t full = B.full_mask();
  B.forall.resize(full + 1);
  B.exists.resize(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    int mn = k - 1, mx = 0;
    if (mask == 0) {
      B.forall[mask] = k - 1;
      B.exists[mask] = 0;
      continue;
    }
    for (int x = 0; x < k; ++x)
      if (mask & (1u << x)) {
        mn = std::min(mn, x);
        mx = std::max(mx, x);
      }
    B.forall[mask] = mn;
    B.exists[mask] = mx;
  }
  return B;
}

inline FinitePHA product(const FinitePHA& B1, const FinitePHA& B2) {
  FinitePHA B;
  const int n1 = B1.n, n2 = B2.n;
  B.n = n1 * n2;
  B.name = "product(" + B1.name + "," + B2.name + ")";
  if (B.n > 16) throw std::runtime_error("product carrier too large for subset tables");
  auto pair = [&](int i, int j) { return i * n2 + j; };
  B.top = pair(B1.top, B2.top);
  B.bot = pair(B1.bot, B2.bot);
  const int n = B.n;
  B.leq.assign(size_t(n) * n, 0);
  B.sqle.assign(size_t(n) * n, 0);
  B.imp.resize(size_t(n) * n);
  B.meet.resize(size_t(n) * n);
  B.join.resize(size_t(n) * n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2) {
          int x = pair(i, j), y = pair(i2, j2);
          B.leq[x * n + y] = B1.le(i, i2) && B2.le(j, j2);
          B.sqle[x * n + y] = B1.sq(i, i2) && B2.sq(j, j2);
          B.imp[x * n + y] = pair(B1.imp_(i, i2), B2.imp_(j, j2));
          B.meet[x * n + y] = pair(B1.and_(i, i2), B2.and_(j, j2));
          B.join[x * n + y] = pair(B1.or_(i, i2), B2.or_(j, j2));
        }
  uint32_t full = B.full_mask();
  B.forall.resize(full + 1);
  B.exists.resize(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    uint32_t m1 = 0, m2 = 0;
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        if (mask & (1u << pair(i, j))) {
          m1 |= 1u << i;
          m2 |= 1u << j;
        }
    B.forall[mask] = pair(B1.fa(m1), B2.fa(m2));
    B.exists[mask] = pair(B1.ex(m1), B2.ex(m2));
  }
  return B;
}

// Three-element carrier {0, 1, 1'} where 1 and 1' sit in the same <=
// equivalence class (both directions) but are distinct elements, making <=
// a genuine pre-order. Operations are computed on the two-point collapse
// c(0)=0, c(1)=c(1')=1 and re-embedded via r(0)=0, r(1)=1. Indices: 1' = 2.
// The refinement order is the total order 0, 1, 1' and top is 1'.
inline FinitePHA pre3() {
  FinitePHA B;
  B.n = 3;
  B.name = "pre3";
  B.bot = 0;
  B.top = 2;
  auto c = [](int x) { return x == 0 ? 0 : 1; };
  auto r = [](int v) { return v == 0 ? 0 : 1; };
  const int n = 3;
  B.leq.assign(9, 0);
  B.sqle.assign(9, 0);
  B.imp.resize(9);
  B.meet.resize(9);
  B.join.resize(9);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      B.leq[a * n + b] = c(a) <= c(b);
      B.sqle[a * n + b] = a <= b;
      B.imp[a * n + b] = r(c(a) <= c(b) ? 1 : 0);
      B.meet[a * n + b] = r(c(a) & c(b));
      B.join[a * n + b] = r(c(a) | c(b));
    }
  B.forall.resize(8);
  B.exists.resize(8);
  for (uint32_t mask = 0; mask < 8; ++mask) {
    if (mask == 0) {
      B.forall[mask] = B.top;
      B.exists[mask] = B.bot;
      continue;
    }
    int mn = 1, mx = 0;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        mn = std::min(mn, c(x));
        mx = std::max(mx, c(x));
      }
    B.forall[mask] = r(mn);
    B.exists[mask] = r(mx);
  }
  return B;
}

// The algebras every exhaustive suite runs over.
inline std::vector<FinitePHA> bundled_algebras() {
  std::vector<FinitePHA> out;
  out.push_back(boolean_2());
  for (int k = 2; k <= 5; ++k) out.push_back(chain_n(k));
  out.push_back(product(boolean_2(), boolean_2()));
  out.push_back(pre3());
  return out;
}

inline const FinitePHA* find_builtin(const std::vector<FinitePHA>& all, const std::string& name) {
  for (const FinitePHA& b : all)
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace modulo
