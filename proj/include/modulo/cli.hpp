#pragma once

// Command-line front end. Every subcommand resolves its inputs up front,
// runs one operation and reports either human-readable lines or, with
// --json, a single machine-readable object. Exit codes: 0 verified/found,
// 1 refuted, 2 unknown or out of budget, 3 usage error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "modulo/json_io.hpp"
#include "modulo/scenarios.hpp"

namespace modulo::cli {

namespace detail {

inline int default_fuel() {
  if (const char* env = std::getenv("MODULO_WORKBENCH_FUEL")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10000;
}

struct Report {
  io::json data = io::json::object();
  std::vector<std::string> lines;
  int exit_code = 0;

  void line(const std::string& s) { lines.push_back(s); }
  void emit(bool as_json) const {
    if (as_json) {
      std::cout << data.dump(2) << "\n";
    } else {
      for (const std::string& s : lines) std::cout << s << "\n";
    }
  }
};

inline const char* status_name(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Found: return "found";
    case SearchResult::Status::None: return "none";
    case SearchResult::Status::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

inline const char* verdict_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::Accepted: return "accepted";
    case ProofStatus::Rejected: return "rejected";
    case ProofStatus::Unknown: return "unknown";
  }
  return "?";
}

inline int verdict_exit(ProofStatus s) {
  return s == ProofStatus::Accepted ? 0 : s == ProofStatus::Rejected ? 1 : 2;
}

inline Report report_proof_verdict(const ProofVerdict& v) {
  Report rep;
  rep.exit_code = verdict_exit(v.status);
  rep.data["verdict"] = verdict_name(v.status);
  if (!v.ok()) {
    rep.data["at"] = v.path.empty() ? "root" : v.path;
    rep.data["message"] = v.message;
    rep.line(std::string(verdict_name(v.status)) + " at " +
             (v.path.empty() ? "root" : v.path) + ": " + v.message);
  } else {
    rep.line("accepted");
  }
  return rep;
}

// --- demos -----------------------------------------------------------------

inline Report demo_cut_proof_q(int fuel) {
  Report rep;
  auto s = scenarios::cut_proof_q();
  ProofVerdict v = check_classical(s.proof, s.system, fuel);
  rep.line("system: " + print_rule(s.system.rules()[0]));
  rep.line("conclusion: |- Q");
  rep.line(std::string("classical check: ") + verdict_name(v.status));
  rep.line(std::string("cut-free: ") + (is_cut_free(s.proof) ? "yes" : "no"));
  rep.data["verdict"] = verdict_name(v.status);
  rep.data["cut_free"] = is_cut_free(s.proof);
  rep.data["proof"] = io::to_json(s.proof);
  rep.exit_code = verdict_exit(v.status);
  return rep;
}

inline Report demo_two_step_p(int fuel) {
  Report rep;
  auto s = scenarios::two_step_proof_p();
  ProofVerdict v = check_classical(s.proof, s.system, fuel);
  rep.line("system: " + print_rule(s.system.rules()[0]));
  rep.line("conclusion: |- P");
  rep.line(std::string("classical check: ") + verdict_name(v.status));
  rep.line(std::string("cut-free: ") + (is_cut_free(s.proof) ? "yes" : "no"));
  rep.data["verdict"] = verdict_name(v.status);
  rep.data["cut_free"] = is_cut_free(s.proof);
  rep.data["proof"] = io::to_json(s.proof);
  rep.exit_code = verdict_exit(v.status);
  return rep;
}

inline Report demo_omega(int fuel) {
  Report rep;
  auto s = scenarios::omega();
  TypeVerdict tv = type_check(s.term, {}, s.goal, s.system, fuel);
  ReduceResult rr = reduce(s.term, 100, Strategy::LeftmostOutermost);
  rep.line("term: " + print_proof_term(s.term));
  rep.line("system: " + print_rule(s.system.rules()[0]));
  rep.line("goal: " + print_prop(s.goal));
  rep.line(std::string("type check: ") + (tv.ok() ? "accepted" : tv.message));
  rep.line("reduction: " + std::string(rr.status == ReduceResult::Status::Cycle
                                           ? "cycle of period " + std::to_string(rr.cycle.size())
                                           : "did not cycle"));
  rep.data["type_check"] = tv.ok();
  rep.data["cycle_period"] =
      rr.status == ReduceResult::Status::Cycle ? static_cast<int>(rr.cycle.size()) : 0;
  rep.data["term"] = io::to_json(s.term);
  rep.exit_code = tv.ok() && rr.status == ReduceResult::Status::Cycle ? 0 : 1;
  return rep;
}

inline Report demo_loop(int fuel) {
  Report rep;
  LoopExample ex = build_loop_example();
  TypeVerdict v1 = type_check(ex.t1, {}, ex.type_t1, ex.system, fuel);
  TypeVerdict v2 = type_check(ex.t2, {}, ex.type_t2, ex.system, fuel);
  ReduceResult rr = reduce(ex.redex, 100, Strategy::FullDevelopment);
  rep.line("system: " + print_rule(ex.system.rules()[0]));
  rep.line("t1 = " + print_proof_term(ex.t1) + " : " + print_prop(ex.type_t1) + " ... " +
           (v1.ok() ? "accepted" : v1.message));
  rep.line("t2 = " + print_proof_term(ex.t2) + " : " + print_prop(ex.type_t2) + " ... " +
           (v2.ok() ? "accepted" : v2.message));
  if (rr.status == ReduceResult::Status::Cycle) {
    rep.line("full development of t1 t2 loops with period " +
             std::to_string(rr.cycle.size()) + ":");
    for (size_t i = 0; i < rr.cycle.size(); ++i)
      rep.line("  " + std::to_string(i) + ": " + print_proof_term(rr.cycle[i]));
    rep.line("  " + std::to_string(rr.cycle.size()) + ": back to step 0");
  } else {
    rep.line("reduction did not cycle");
  }
  rep.data["t1_check"] = v1.ok();
  rep.data["t2_check"] = v2.ok();
  rep.data["cycle_period"] =
      rr.status == ReduceResult::Status::Cycle ? static_cast<int>(rr.cycle.size()) : 0;
  io::json cyc = io::json::array();
  for (const ProofTerm& t : rr.cycle) cyc.push_back(print_proof_term(t));
  rep.data["cycle"] = std::move(cyc);
  rep.data["redex"] = io::to_json(ex.redex);
  rep.exit_code =
      v1.ok() && v2.ok() && rr.status == ReduceResult::Status::Cycle ? 0 : 1;
  return rep;
}

inline Report demo_stability(long long budget) {
  Report rep;
  Prop P = Prop::atom("P"), Q = Prop::atom("Q");
  std::vector<RewriteSystem> systems;
  systems.push_back(make_system({{"P", {}, Prop::and_(Prop::top(), Prop::top())}}));
  systems.push_back(make_system({{"P", {}, Prop::imp(P, P)}}));
  io::json rows = io::json::array();
  bool all = true;
  for (const RewriteSystem& sys : systems)
    for (const FinitePHA& B : bundled_algebras()) {
      WitnessResult w = stability_witness(sys, Q, std::make_shared<FinitePHA>(B), 1, budget);
      bool ok = w.status == SearchResult::Status::Found &&
                is_model(*w.structure, atrans_system(sys, Q)).ok;
      all = all && ok;
      rep.line("system {" + print_rule(sys.rules()[0]) + "} over " + B.name + ": " +
               (ok ? "witness models the translated system" : "failed"));
      rows.push_back(io::json{{"system", print_rule(sys.rules()[0])},
                              {"algebra", B.name},
                              {"ok", ok}});
    }
  rep.data["rows"] = std::move(rows);
  rep.exit_code = all ? 0 : 1;
  return rep;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
  CLI::App app{"workbench for sequent calculus and rewriting modulo a congruence"};
  app.require_subcommand(0, 1);

  int fuel = detail::default_fuel();
  long long budget = 1000000;
  uint64_t seed = 1;
  bool as_json = false;
  app.add_option("--fuel", fuel, "step budget for normalization and congruence checks");
  app.add_option("--budget", budget, "candidate budget for model search");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  std::function<detail::Report()> action;

  // parse
  {
    auto* c = app.add_subcommand("parse", "parse a proposition and print it back");
    auto text = std::make_shared<std::string>();
    c->add_option("prop", *text, "proposition text")->required();
    c->callback([&action, text] {
      action = [text] {
        detail::Report rep;
        Prop p = parse_prop(*text);
        rep.line(print_prop(p));
        rep.data["prop"] = io::to_json(p);
        rep.data["printed"] = print_prop(p);
        return rep;
      };
    });
  }

  // normalize
  {
    auto* c = app.add_subcommand("normalize", "normalize a proposition under a system");
    auto sysfile = std::make_shared<std::string>();
    auto text = std::make_shared<std::string>();
    c->add_option("--system", *sysfile, "rewrite system file")->required();
    c->add_option("prop", *text, "proposition text")->required();
    c->callback([&action, sysfile, text, &fuel] {
      action = [sysfile, text, &fuel] {
        detail::Report rep;
        RewriteSystem sys = io::load_system(*sysfile);
        NormalizeResult n = normalize(parse_prop(*text), sys, fuel);
        rep.line((n.normal ? "normal form: " : "fuel exhausted at: ") + print_prop(n.value));
        rep.data["normal"] = n.normal;
        rep.data["steps"] = n.steps;
        rep.data["value"] = io::to_json(n.value);
        rep.exit_code = n.normal ? 0 : 2;
        return rep;
      };
    });
  }

  // congruent
  {
    auto* c = app.add_subcommand("congruent", "decide congruence of two propositions");
    auto sysfile = std::make_shared<std::string>();
    auto ta = std::make_shared<std::string>(), tb = std::make_shared<std::string>();
    c->add_option("--system", *sysfile, "rewrite system file")->required();
    c->add_option("first", *ta)->required();
    c->add_option("second", *tb)->required();
    c->callback([&action, sysfile, ta, tb, &fuel] {
      action = [sysfile, ta, tb, &fuel] {
        detail::Report rep;
        RewriteSystem sys = io::load_system(*sysfile);
        Congruence res = congruent(parse_prop(*ta), parse_prop(*tb), sys, fuel);
        const char* name = res == Congruence::Yes ? "yes"
                           : res == Congruence::No ? "no"
                                                   : "unknown";
        rep.line(name);
        rep.data["congruent"] = name;
        rep.exit_code = res == Congruence::Yes ? 0 : res == Congruence::No ? 1 : 2;
        return rep;
      };
    });
  }

  // atrans-prop
  {
    auto* c = app.add_subcommand("atrans-prop", "translate a proposition at a parameter");
    auto atext = std::make_shared<std::string>(), text = std::make_shared<std::string>();
    auto allow_open = std::make_shared<bool>(false);
    c->add_option("--a", *atext, "parameter proposition")->required();
    c->add_option("prop", *text)->required();
    c->add_flag("--allow-open", *allow_open,
                "accept a non-closed parameter, checking capture per use");
    c->callback([&action, atext, text, allow_open] {
      action = [atext, text, allow_open] {
        detail::Report rep;
        TranslationContext ctx = TranslationContext::make(parse_prop(*atext), !*allow_open);
        Prop out = atrans_prop(parse_prop(*text), ctx);
        rep.line(print_prop(out));
        rep.data["prop"] = io::to_json(out);
        rep.data["printed"] = print_prop(out);
        return rep;
      };
    });
  }

  // atrans-system
  {
    auto* c = app.add_subcommand("atrans-system", "translate a rewrite system at a parameter");
    auto atext = std::make_shared<std::string>(), sysfile = std::make_shared<std::string>();
    c->add_option("--a", *atext, "parameter proposition")->required();
    c->add_option("--system", *sysfile, "rewrite system file")->required();
    c->callback([&action, atext, sysfile] {
      action = [atext, sysfile] {
        detail::Report rep;
        RewriteSystem out = atrans_system(io::load_system(*sysfile), parse_prop(*atext));
        for (const RewriteRule& r : out.rules()) rep.line(print_rule(r));
        rep.data["system"] = io::to_json(out);
        return rep;
      };
    });
  }

  // kolmogorov
  {
    auto* c = app.add_subcommand("kolmogorov", "double-negation translation of a proposition");
    auto text = std::make_shared<std::string>();
    c->add_option("prop", *text)->required();
    c->callback([&action, text] {
      action = [text] {
        detail::Report rep;
        Prop out = kolmogorov(parse_prop(*text));
        rep.line(print_prop(out));
        rep.data["prop"] = io::to_json(out);
        return rep;
      };
    });
  }

  // pha-check
  {
    auto* c = app.add_subcommand("pha-check", "run every algebra checker");
    auto name = std::make_shared<std::string>();
    c->add_option("algebra", *name, "builtin name or JSON file")->required();
    c->callback([&action, name] {
      action = [name] {
        detail::Report rep;
        auto B = io::resolve_algebra(*name);
        AlgebraReport ax = check_pha(*B);
        AlgebraReport ord = check_ordered(*B);
        CompletenessReport comp = check_complete(*B);
        AlgebraReport ineq = check_implication_laws(*B);
        auto show = [&rep](const char* what, bool ok,
                           const std::vector<AlgebraViolation>& vs) {
          rep.line(std::string(what) + ": " + (ok ? "pass" : "fail"));
          for (const AlgebraViolation& v : vs)
            rep.line("  clause " + std::to_string(v.clause) + ": " + v.detail);
        };
        show("axioms", ax.ok(), ax.violations);
        show("order", ord.ok(), ord.violations);
        show("completeness", comp.ok(), comp.violations);
        show("implication inequalities", ineq.ok(), ineq.violations);
        bool ok = ax.ok() && ord.ok() && comp.ok() && ineq.ok();
        rep.data["axioms"] = ax.ok();
        rep.data["order"] = ord.ok();
        rep.data["completeness"] = comp.ok();
        rep.data["inequalities"] = ineq.ok();
        rep.exit_code = ok ? 0 : 1;
        return rep;
      };
    });
  }

  // pha-atrans
  {
    auto* c = app.add_subcommand("pha-atrans", "translate an algebra at an element");
    auto name = std::make_shared<std::string>();
    auto elem = std::make_shared<int>(0);
    c->add_option("algebra", *name, "builtin name or JSON file")->required();
    c->add_option("--a", *elem, "element index")->required();
    c->callback([&action, name, elem] {
      action = [name, elem] {
        detail::Report rep;
        FinitePHA out = a_translate(*io::resolve_algebra(*name), *elem);
        rep.data = io::to_json(out);
        rep.line(rep.data.dump(2));
        return rep;
      };
    });
  }

  // pha-builtin
  {
    auto* c = app.add_subcommand("pha-builtin", "print a bundled algebra");
    auto name = std::make_shared<std::string>();
    c->add_option("name", *name)->required();
    c->callback([&action, name] {
      action = [name] {
        detail::Report rep;
        static const std::vector<FinitePHA> builtins = bundled_algebras();
        const FinitePHA* b = find_builtin(builtins, *name);
        if (!b) {
          std::string known;
          for (const FinitePHA& x : builtins) known += " " + x.name;
          throw io::IoError("unknown builtin '" + *name + "'; available:" + known);
        }
        rep.data = io::to_json(*b);
        rep.line(rep.data.dump(2));
        return rep;
      };
    });
  }

  // model-check
  {
    auto* c = app.add_subcommand("model-check", "check a structure against a system");
    auto sfile = std::make_shared<std::string>(), sysfile = std::make_shared<std::string>();
    c->add_option("--structure", *sfile)->required();
    c->add_option("--system", *sysfile)->required();
    c->callback([&action, sfile, sysfile] {
      action = [sfile, sysfile] {
        detail::Report rep;
        ModelReport r = is_model(io::load_structure(*sfile), io::load_system(*sysfile));
        rep.line(r.ok ? "model" : "not a model: " + r.failure);
        rep.data["model"] = r.ok;
        if (!r.ok) rep.data["failure"] = r.failure;
        rep.exit_code = r.ok ? 0 : 1;
        return rep;
      };
    });
  }

  // model-search
  {
    auto* c = app.add_subcommand("model-search", "search interpretation tables for a model");
    auto sysfile = std::make_shared<std::string>(), alg = std::make_shared<std::string>();
    auto m = std::make_shared<int>(1);
    c->add_option("--system", *sysfile)->required();
    c->add_option("--algebra", *alg, "builtin name or JSON file")->required();
    c->add_option("--m", *m, "domain size");
    c->callback([&action, sysfile, alg, m, &budget] {
      action = [sysfile, alg, m, &budget] {
        detail::Report rep;
        auto algebra = io::resolve_algebra(*alg);
        SearchResult r = model_search(io::load_system(*sysfile), algebra, *m, budget);
        rep.line(std::string("search: ") + detail::status_name(r.status) + " after " +
                 std::to_string(r.examined) + " candidate(s)");
        rep.data["status"] = detail::status_name(r.status);
        rep.data["examined"] = r.examined;
        if (r.structure) {
          rep.data["structure"] = io::to_json(*r.structure, *alg);
          rep.line(io::to_json(*r.structure, *alg).dump(2));
        }
        rep.exit_code = r.status == SearchResult::Status::Found ? 0
                        : r.status == SearchResult::Status::None ? 1
                                                                 : 2;
        return rep;
      };
    });
  }

  // probe
  {
    auto* c = app.add_subcommand("probe",
                                 "probe the bundled algebras for models of a system");
    auto sysfile = std::make_shared<std::string>();
    auto ms = std::make_shared<std::vector<int>>();
    c->add_option("--system", *sysfile)->required();
    c->add_option("--m", *ms, "domain sizes (default 1 2)");
    c->callback([&action, sysfile, ms, &budget] {
      action = [sysfile, ms, &budget] {
        detail::Report rep;
        std::vector<int> sizes = ms->empty() ? std::vector<int>{1, 2} : *ms;
        ProbeReport r =
            superconsistency_probe(io::load_system(*sysfile), bundled_algebras(), sizes, budget);
        io::json rows = io::json::array();
        for (const ProbeRow& row : r.rows) {
          rep.line(row.algebra + " m=" + std::to_string(row.m) + ": " +
                   detail::status_name(row.status));
          rows.push_back(io::json{{"algebra", row.algebra},
                                  {"m", row.m},
                                  {"status", detail::status_name(row.status)},
                                  {"examined", row.examined}});
        }
        if (r.refuted()) {
          rep.line("refuted: some bundled algebra has no model of this system");
        } else if (r.all_found()) {
          rep.line("all bundled algebras carry a model; this is evidence only, the "
                   "universal property ranges over algebras the probe cannot visit");
        }
        rep.data["rows"] = std::move(rows);
        rep.data["refuted"] = r.refuted();
        rep.data["all_found"] = r.all_found();
        rep.exit_code = r.refuted() ? 1 : r.all_found() ? 0 : 2;
        return rep;
      };
    });
  }

  // graft
  {
    auto* c = app.add_subcommand("graft", "graft two structures along a proposition");
    auto m0 = std::make_shared<std::string>(), m1 = std::make_shared<std::string>();
    auto atext = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(200);
    c->add_option("--m0", *m0, "structure file providing the parameter's symbols")->required();
    c->add_option("--m1", *m1, "structure file providing the rest")->required();
    c->add_option("--a", *atext, "grafting proposition")->required();
    c->add_option("--samples", *samples, "sampled equality checks per class");
    c->callback([&action, m0, m1, atext, samples, &seed] {
      action = [m0, m1, atext, samples, &seed] {
        detail::Report rep;
        Structure s0 = io::load_structure(*m0), s1 = io::load_structure(*m1);
        Prop a = parse_prop(*atext);
        Structure g = graft(s0, s1, a);
        SampledReport r = check_grafting(s0, s1, a, *samples, seed);
        rep.line(r.ok ? "grafting equalities hold on " + std::to_string(r.samples) + " samples"
                      : "grafting failed: " + r.failure);
        rep.data["ok"] = r.ok;
        rep.data["samples"] = r.samples;
        rep.data["structure"] = io::to_json(g, "grafted");
        rep.exit_code = r.ok ? 0 : 1;
        return rep;
      };
    });
  }

  // propag1-check
  {
    auto* c = app.add_subcommand("propag1-check",
                                 "compare the two evaluation routes of the translation");
    auto sfile = std::make_shared<std::string>(), atext = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(500);
    auto depth = std::make_shared<int>(4);
    c->add_option("--structure", *sfile)->required();
    c->add_option("--a", *atext, "closed parameter proposition")->required();
    c->add_option("--samples", *samples);
    c->add_option("--depth", *depth);
    c->callback([&action, sfile, atext, samples, depth, &seed] {
      action = [sfile, atext, samples, depth, &seed] {
        detail::Report rep;
        SampledReport r =
            check_translation_agreement(io::load_structure(*sfile), parse_prop(*atext), *samples, seed, *depth);
        rep.line(r.ok ? "both routes agree on " + std::to_string(r.samples) + " samples"
                      : "routes disagree: " + r.failure);
        rep.data["ok"] = r.ok;
        rep.data["samples"] = r.samples;
        rep.exit_code = r.ok ? 0 : 1;
        return rep;
      };
    });
  }

  // stability-witness
  {
    auto* c = app.add_subcommand("stability-witness",
                                 "build a model of the translated system by grafting");
    auto sysfile = std::make_shared<std::string>(), atext = std::make_shared<std::string>();
    auto alg = std::make_shared<std::string>();
    auto m = std::make_shared<int>(1);
    c->add_option("--system", *sysfile)->required();
    c->add_option("--a", *atext, "closed compatible proposition")->required();
    c->add_option("--algebra", *alg)->required();
    c->add_option("--m", *m);
    c->callback([&action, sysfile, atext, alg, m, &budget] {
      action = [sysfile, atext, alg, m, &budget] {
        detail::Report rep;
        WitnessResult w = stability_witness(io::load_system(*sysfile), parse_prop(*atext),
                                            io::resolve_algebra(*alg), *m, budget);
        rep.line(std::string("witness: ") + detail::status_name(w.status) +
                 (w.note.empty() ? "" : " (" + w.note + ")"));
        rep.data["status"] = detail::status_name(w.status);
        if (w.structure) rep.data["structure"] = io::to_json(*w.structure, *alg);
        rep.exit_code = w.status == SearchResult::Status::Found ? 0
                        : w.status == SearchResult::Status::None ? 1
                                                                 : 2;
        return rep;
      };
    });
  }

  // proof-check
  {
    auto* c = app.add_subcommand("proof-check", "check a sequent proof");
    auto calc = std::make_shared<std::string>("classical");
    auto sysfile = std::make_shared<std::string>(), pfile = std::make_shared<std::string>();
    c->add_option("--calc", *calc, "classical or intuitionistic")
        ->check(CLI::IsMember({"classical", "intuitionistic"}));
    c->add_option("--system", *sysfile, "rewrite system file (omit for the empty system)");
    c->add_option("proof", *pfile, "proof JSON file")->required();
    c->callback([&action, calc, sysfile, pfile, &fuel] {
      action = [calc, sysfile, pfile, &fuel] {
        RewriteSystem sys;
        if (!sysfile->empty()) sys = io::load_system(*sysfile);
        SequentProof p = io::load_proof(*pfile);
        ProofVerdict v = *calc == "classical" ? check_classical(p, sys, fuel)
                                              : check_intuitionistic(p, sys, fuel);
        return detail::report_proof_verdict(v);
      };
    });
  }

  // translate-ci
  {
    auto* c = app.add_subcommand("translate-ci",
                                 "translate a classical proof into the intuitionistic calculus");
    auto atext = std::make_shared<std::string>();
    auto sysfile = std::make_shared<std::string>(), pfile = std::make_shared<std::string>();
    c->add_option("--a", *atext, "closed compatible parameter")->required();
    c->add_option("--system", *sysfile, "rewrite system file (omit for the empty system)");
    c->add_option("proof", *pfile, "classical proof JSON file")->required();
    c->callback([&action, atext, sysfile, pfile, &fuel] {
      action = [atext, sysfile, pfile, &fuel] {
        detail::Report rep;
        RewriteSystem sys;
        if (!sysfile->empty()) sys = io::load_system(*sysfile);
        ClasToIntResult res =
            translate_clas_to_int(io::load_proof(*pfile), parse_prop(*atext), sys, fuel);
        ProofVerdict v = check_intuitionistic(res.proof, res.system, fuel);
        rep.data["proof"] = io::to_json(res.proof);
        rep.data["system"] = io::to_json(res.system);
        rep.data["representation"] = io::to_json(res.induced);
        rep.data["checks"] = v.ok();
        rep.line(std::string("translated proof ") + (v.ok() ? "checks" : "does not check") +
                 " under the translated system");
        rep.exit_code = v.ok() ? 0 : 1;
        return rep;
      };
    });
  }

  // translate-ic
  {
    auto* c = app.add_subcommand("translate-ic",
                                 "translate a cut-free intuitionistic proof back");
    auto atext = std::make_shared<std::string>();
    auto sysfile = std::make_shared<std::string>(), pfile = std::make_shared<std::string>();
    auto repfile = std::make_shared<std::string>();
    c->add_option("--a", *atext, "parameter proposition")->required();
    c->add_option("--system", *sysfile, "rewrite system file (omit for the empty system)");
    c->add_option("--rep", *repfile, "representation JSON file")->required();
    c->add_option("proof", *pfile, "intuitionistic proof JSON file")->required();
    c->callback([&action, atext, sysfile, pfile, repfile, &fuel] {
      action = [atext, sysfile, pfile, repfile, &fuel] {
        detail::Report rep;
        RewriteSystem sys;
        if (!sysfile->empty()) sys = io::load_system(*sysfile);
        Representation xi =
            io::representation_from_json(io::json::parse(io::read_file(*repfile)));
        SequentProof back = translate_int_to_clas(io::load_proof(*pfile), xi,
                                                  parse_prop(*atext), sys, fuel);
        ProofVerdict v = check_classical(back, sys, fuel);
        rep.data["proof"] = io::to_json(back);
        rep.data["cut_free"] = is_cut_free(back);
        rep.data["checks"] = v.ok();
        rep.line(std::string("classical proof ") + (v.ok() ? "checks" : "does not check") +
                 (is_cut_free(back) ? ", cut-free" : ""));
        rep.exit_code = v.ok() ? 0 : 1;
        return rep;
      };
    });
  }

  // natded-check
  {
    auto* c = app.add_subcommand("natded-check", "type-check a proof term");
    auto sysfile = std::make_shared<std::string>(), tfile = std::make_shared<std::string>();
    auto goal = std::make_shared<std::string>();
    c->add_option("--system", *sysfile, "rewrite system file (omit for the empty system)");
    c->add_option("--goal", *goal, "goal proposition")->required();
    c->add_option("term", *tfile, "proof term JSON file")->required();
    c->callback([&action, sysfile, tfile, goal, &fuel] {
      action = [sysfile, tfile, goal, &fuel] {
        detail::Report rep;
        RewriteSystem sys;
        if (!sysfile->empty()) sys = io::load_system(*sysfile);
        TypeVerdict v =
            type_check(io::load_proof_term(*tfile), {}, parse_prop(*goal), sys, fuel);
        const char* name = v.status == TypeStatus::Accepted ? "accepted"
                           : v.status == TypeStatus::Rejected ? "rejected"
                                                              : "unknown";
        rep.line(v.ok() ? "accepted" : std::string(name) + ": " + v.message);
        rep.data["verdict"] = name;
        if (!v.ok()) rep.data["message"] = v.message;
        rep.exit_code = v.status == TypeStatus::Accepted ? 0
                        : v.status == TypeStatus::Rejected ? 1
                                                           : 2;
        return rep;
      };
    });
  }

  // natded-reduce
  {
    auto* c = app.add_subcommand("natded-reduce", "reduce a proof term");
    auto tfile = std::make_shared<std::string>();
    auto strategy = std::make_shared<std::string>("full");
    c->add_option("term", *tfile, "proof term JSON file")->required();
    c->add_option("--strategy", *strategy, "lo (leftmost-outermost) or full (development)")
        ->check(CLI::IsMember({"lo", "full"}));
    c->callback([&action, tfile, strategy, &fuel] {
      action = [tfile, strategy, &fuel] {
        detail::Report rep;
        Strategy s = *strategy == "lo" ? Strategy::LeftmostOutermost
                                       : Strategy::FullDevelopment;
        ReduceResult r = reduce(io::load_proof_term(*tfile), fuel, s);
        switch (r.status) {
          case ReduceResult::Status::Normal:
            rep.line("normal form after " + std::to_string(r.steps) +
                     " step(s): " + print_proof_term(r.term));
            rep.data["status"] = "normal";
            rep.exit_code = 0;
            break;
          case ReduceResult::Status::Cycle: {
            rep.line("cycle of period " + std::to_string(r.cycle.size()) + ":");
            for (const ProofTerm& t : r.cycle) rep.line("  " + print_proof_term(t));
            rep.data["status"] = "cycle";
            rep.data["period"] = r.cycle.size();
            rep.exit_code = 0;
            break;
          }
          case ReduceResult::Status::FuelExhausted:
            rep.line("fuel exhausted at: " + print_proof_term(r.term));
            rep.data["status"] = "fuel-exhausted";
            rep.exit_code = 2;
            break;
        }
        rep.data["steps"] = r.steps;
        rep.data["term"] = io::to_json(r.term);
        return rep;
      };
    });
  }

  // demo
  {
    auto* c = app.add_subcommand("demo", "run a bundled scenario");
    auto name = std::make_shared<std::string>();
    c->add_option("name", *name,
                  "one of: cut-proof-q, two-step-p, omega, loop, stability")
        ->required();
    c->callback([&action, name, &fuel, &budget] {
      action = [name, &fuel, &budget]() -> detail::Report {
        if (*name == "cut-proof-q") return detail::demo_cut_proof_q(fuel);
        if (*name == "two-step-p") return detail::demo_two_step_p(fuel);
        if (*name == "omega") return detail::demo_omega(fuel);
        if (*name == "loop") return detail::demo_loop(fuel);
        if (*name == "stability") return detail::demo_stability(budget);
        throw io::IoError("unknown demo '" + *name +
                          "'; available: cut-proof-q, two-step-p, omega, loop, stability");
      };
    });
  }

  std::vector<const char*> argv;
  argv.push_back("modulo");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (!action) {
    std::cout << app.help() << "\n";
    return 3;
  }

  try {
    detail::Report rep = action();
    rep.emit(as_json);
    return rep.exit_code;
  } catch (const TranslationError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace modulo::cli
