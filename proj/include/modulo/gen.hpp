#pragma once

// Seeded random formula generation, used by the sampled semantic checks and
// by property tests. Deterministic for a fixed seed.

#include <random>

#include "modulo/syntax.hpp"

namespace modulo {

struct SymbolPool {
  std::vector<std::pair<std::string, int>> preds;
  std::vector<std::pair<std::string, int>> funs;
  std::vector<std::string> vars = {"x", "y", "z"};
};

class PropGen {
 public:
  PropGen(SymbolPool pool, uint64_t seed) : pool_(std::move(pool)), rng_(seed) {}

  Term term(int depth) {
    bool allow_app = !pool_.funs.empty() && depth > 0;
    if (!allow_app || pick(3) == 0 || pool_.funs.empty()) {
      if (pool_.vars.empty()) throw std::runtime_error("generator has no variables");
      return Term::var(pool_.vars[pick(pool_.vars.size())]);
    }
    auto& [f, arity] = pool_.funs[pick(pool_.funs.size())];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(term(depth - 1));
    return Term::app(f, std::move(args));
  }

  Prop atom() {
    if (pool_.preds.empty()) return pick(2) ? Prop::top() : Prop::bot();
    auto& [p, arity] = pool_.preds[pick(pool_.preds.size())];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(term(1));
    return Prop::atom(p, std::move(args));
  }

  Prop prop(int depth) {
    if (depth <= 0) {
      switch (pick(4)) {
        case 0: return Prop::top();
        case 1: return Prop::bot();
        default: return atom();
      }
    }
    switch (pick(8)) {
      case 0: return Prop::top();
      case 1: return Prop::bot();
      case 2: return atom();
      case 3: return Prop::imp(prop(depth - 1), prop(depth - 1));
      case 4: return Prop::and_(prop(depth - 1), prop(depth - 1));
      case 5: return Prop::or_(prop(depth - 1), prop(depth - 1));
      case 6: return Prop::forall(pool_.vars[pick(pool_.vars.size())], prop(depth - 1));
      default: return Prop::exists(pool_.vars[pick(pool_.vars.size())], prop(depth - 1));
    }
  }

  size_t pick(size_t bound) {
    return std::uniform_int_distribution<size_t>(0, bound - 1)(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  SymbolPool pool_;
  std::mt19937_64 rng_;
};

}  // namespace modulo
