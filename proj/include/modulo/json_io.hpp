#pragma once

// JSON forms of every artifact the tools read and write: syntax trees,
// rewrite systems, algebras, structures, sequent proofs, representations
// and proof terms. Tagged unions carry a "kind" discriminator.

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "modulo/natded.hpp"
#include "modulo/pha.hpp"
#include "modulo/semantics.hpp"
#include "modulo/sequent.hpp"

namespace modulo::io {

using json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- terms and propositions ---------------------------------------------------

inline json to_json(const Term& t) {
  if (t.kind == Term::Kind::Var) return json{{"kind", "var"}, {"name", t.name}};
  json args = json::array();
  for (const Term& a : t.args) args.push_back(to_json(a));
  return json{{"kind", "app"}, {"fn", t.name}, {"args", std::move(args)}};
}

inline Term term_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "var") return Term::var(j.at("name").get<std::string>());
  if (kind == "app") {
    std::vector<Term> args;
    for (const json& a : j.at("args")) args.push_back(term_from_json(a));
    return Term::app(j.at("fn").get<std::string>(), std::move(args));
  }
  throw IoError("unknown term kind '" + kind + "'");
}

inline json to_json(const Prop& p) {
  switch (p.kind) {
    case Prop::Kind::Atom: {
      json args = json::array();
      for (const Term& a : p.args) args.push_back(to_json(a));
      return json{{"kind", "atom"}, {"pred", p.name}, {"args", std::move(args)}};
    }
    case Prop::Kind::Top: return json{{"kind", "top"}};
    case Prop::Kind::Bot: return json{{"kind", "bot"}};
    case Prop::Kind::Imp:
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      const char* k = p.kind == Prop::Kind::Imp ? "imp" : p.kind == Prop::Kind::And ? "and" : "or";
      return json{{"kind", k}, {"lhs", to_json(p.lhs())}, {"rhs", to_json(p.rhs())}};
    }
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      return json{{"kind", p.kind == Prop::Kind::Forall ? "forall" : "exists"},
                  {"var", p.name},
                  {"body", to_json(p.body())}};
  }
  throw IoError("unreachable");
}

inline Prop prop_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "atom") {
    std::vector<Term> args;
    for (const json& a : j.at("args")) args.push_back(term_from_json(a));
    return Prop::atom(j.at("pred").get<std::string>(), std::move(args));
  }
  if (kind == "top") return Prop::top();
  if (kind == "bot") return Prop::bot();
  if (kind == "imp" || kind == "and" || kind == "or") {
    Prop::Kind k = kind == "imp" ? Prop::Kind::Imp
                   : kind == "and" ? Prop::Kind::And
                                   : Prop::Kind::Or;
    return Prop::binary(k, prop_from_json(j.at("lhs")), prop_from_json(j.at("rhs")));
  }
  if (kind == "forall" || kind == "exists")
    return Prop::quant(kind == "forall" ? Prop::Kind::Forall : Prop::Kind::Exists,
                       j.at("var").get<std::string>(), prop_from_json(j.at("body")));
  throw IoError("unknown proposition kind '" + kind + "'");
}

// --- rewrite systems ------------------------------------------------------------

inline json to_json(const RewriteSystem& sys) {
  json rules = json::array();
  for (const RewriteRule& r : sys.rules())
    rules.push_back(json{{"head", r.head}, {"params", r.params}, {"rhs", to_json(r.rhs)}});
  return json{{"rules", std::move(rules)}};
}

inline RewriteSystem system_from_json(const json& j) {
  std::vector<RewriteRule> rules;
  for (const json& r : j.at("rules")) {
    RewriteRule rule;
    rule.head = r.at("head").get<std::string>();
    for (const json& p : r.at("params")) rule.params.push_back(p.get<std::string>());
    rule.rhs = prop_from_json(r.at("rhs"));
    rules.push_back(std::move(rule));
  }
  return validate_orthogonal(std::move(rules));
}

// Accepts either the JSON mirror or the one-rule-per-line text format.
inline RewriteSystem system_from_text(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return system_from_json(json::parse(text));
  return parse_system(text);
}

// --- algebras --------------------------------------------------------------------

inline json to_json(const FinitePHA& B) {
  auto bit_rows = [&](const std::vector<uint8_t>& t) {
    json rows = json::array();
    for (int i = 0; i < B.n; ++i) {
      std::string row;
      for (int j = 0; j < B.n; ++j) row += t[i * B.n + j] ? '1' : '0';
      rows.push_back(row);
    }
    return rows;
  };
  auto table = [&](const std::vector<int>& t) {
    json rows = json::array();
    for (int i = 0; i < B.n; ++i)
      rows.push_back(std::vector<int>(t.begin() + i * B.n, t.begin() + (i + 1) * B.n));
    return rows;
  };
  return json{{"name", B.name}, {"n", B.n},     {"leq", bit_rows(B.leq)},
              {"sqle", bit_rows(B.sqle)},       {"top", B.top},
              {"bot", B.bot},                   {"imp", table(B.imp)},
              {"and", table(B.meet)},           {"or", table(B.join)},
              {"forall", B.forall},             {"exists", B.exists}};
}

inline FinitePHA algebra_from_json(const json& j) {
  FinitePHA B;
  B.n = j.at("n").get<int>();
  B.name = j.value("name", std::string("algebra"));
  auto bits = [&](const json& rows) {
    std::vector<uint8_t> out;
    for (const json& r : rows) {
      std::string s = r.get<std::string>();
      if (static_cast<int>(s.size()) != B.n) throw IoError("bit row has wrong width");
      for (char c : s) out.push_back(c == '1' ? 1 : 0);
    }
    return out;
  };
  auto table = [&](const json& rows) {
    std::vector<int> out;
    for (const json& r : rows)
      for (const json& v : r) out.push_back(v.get<int>());
    return out;
  };
  B.leq = bits(j.at("leq"));
  B.sqle = bits(j.at("sqle"));
  B.top = j.at("top").get<int>();
  B.bot = j.at("bot").get<int>();
  B.imp = table(j.at("imp"));
  B.meet = table(j.at("and"));
  B.join = table(j.at("or"));
  B.forall = j.at("forall").get<std::vector<int>>();
  B.exists = j.at("exists").get<std::vector<int>>();
  B.validate();
  return B;
}

// --- structures ------------------------------------------------------------------

inline json to_json(const Structure& s, const std::string& algebra_label) {
  auto tables = [](const std::map<std::string, SymbolTable>& m) {
    json out = json::object();
    for (auto& [name, t] : m) out[name] = json{{"arity", t.arity}, {"table", t.values}};
    return out;
  };
  return json{{"algebra", algebra_label},
              {"m", s.m},
              {"fhat", tables(s.fhat)},
              {"phat", tables(s.phat)}};
}

using AlgebraResolver = std::function<std::shared_ptr<const FinitePHA>(const std::string&)>;

inline Structure structure_from_json(const json& j, const AlgebraResolver& resolve) {
  Structure s;
  s.algebra = resolve(j.at("algebra").get<std::string>());
  s.m = j.at("m").get<int>();
  auto tables = [&](const json& src, std::map<std::string, SymbolTable>& dst) {
    for (auto it = src.begin(); it != src.end(); ++it) {
      SymbolTable t;
      t.arity = it.value().at("arity").get<int>();
      t.values = it.value().at("table").get<std::vector<int>>();
      size_t expect = 1;
      for (int i = 0; i < t.arity; ++i) expect *= static_cast<size_t>(s.m);
      if (t.values.size() != expect)
        throw IoError("table for '" + it.key() + "' has wrong size");
      dst[it.key()] = std::move(t);
    }
  };
  tables(j.at("fhat"), s.fhat);
  tables(j.at("phat"), s.phat);
  return s;
}

// --- sequent proofs -----------------------------------------------------------------

inline json to_json(const Sequent& s) {
  json left = json::array(), right = json::array();
  for (const Prop& p : s.left) left.push_back(to_json(p));
  for (const Prop& p : s.right) right.push_back(to_json(p));
  return json{{"left", std::move(left)}, {"right", std::move(right)}};
}

inline Sequent sequent_from_json(const json& j) {
  Sequent s;
  for (const json& p : j.at("left")) s.left.push_back(prop_from_json(p));
  for (const json& p : j.at("right")) s.right.push_back(prop_from_json(p));
  return s;
}

inline json to_json(const ProofNode& n) {
  json out{{"rule", rule_name(n.rule)}, {"conclusion", to_json(n.conclusion)}};
  if (n.principal >= 0) out["principal"] = n.principal;
  if (!n.inst.empty()) {
    json inst = json::array();
    for (const Prop& p : n.inst) inst.push_back(to_json(p));
    out["instances"] = std::move(inst);
  }
  if (!n.bound_var.empty()) out["var"] = n.bound_var;
  if (n.witness) out["witness"] = to_json(*n.witness);
  if (!n.premises.empty()) {
    json prem = json::array();
    for (const ProofNode& p : n.premises) prem.push_back(to_json(p));
    out["premises"] = std::move(prem);
  }
  return out;
}

inline ProofNode proof_node_from_json(const json& j) {
  ProofNode n;
  std::string rname = j.at("rule").get<std::string>();
  auto r = rule_from_name(rname);
  if (!r) throw IoError("unknown rule '" + rname + "'");
  n.rule = *r;
  n.conclusion = sequent_from_json(j.at("conclusion"));
  n.principal = j.value("principal", -1);
  if (j.contains("instances"))
    for (const json& p : j.at("instances")) n.inst.push_back(prop_from_json(p));
  n.bound_var = j.value("var", std::string());
  if (j.contains("witness")) n.witness = term_from_json(j.at("witness"));
  if (j.contains("premises"))
    for (const json& p : j.at("premises")) n.premises.push_back(proof_node_from_json(p));
  return n;
}

inline json to_json(const SequentProof& p) {
  return json{{"flavor", p.flavor == Flavor::Classical ? "classical" : "intuitionistic"},
              {"root", to_json(p.root)}};
}

inline SequentProof proof_from_json(const json& j) {
  SequentProof p;
  std::string f = j.at("flavor").get<std::string>();
  if (f == "classical")
    p.flavor = Flavor::Classical;
  else if (f == "intuitionistic")
    p.flavor = Flavor::Intuitionistic;
  else
    throw IoError("unknown flavor '" + f + "'");
  p.root = proof_node_from_json(j.at("root"));
  return p;
}

// --- representations ------------------------------------------------------------------

inline json to_json(const RepEntry& e) {
  return json{{"side", e.side == RepEntry::Side::Left ? "left" : "right"},
              {"wraps", e.wraps},
              {"classical", to_json(e.classical)}};
}

inline RepEntry rep_entry_from_json(const json& j) {
  RepEntry e;
  std::string side = j.at("side").get<std::string>();
  if (side == "left")
    e.side = RepEntry::Side::Left;
  else if (side == "right")
    e.side = RepEntry::Side::Right;
  else
    throw IoError("unknown representation side '" + side + "'");
  e.wraps = j.at("wraps").get<int>();
  if (e.wraps < 0 || e.wraps > 2) throw IoError("wrap count out of range");
  e.classical = prop_from_json(j.at("classical"));
  return e;
}

inline json to_json(const Representation& r) {
  json left = json::array();
  for (const RepEntry& e : r.left) left.push_back(to_json(e));
  json out{{"left", std::move(left)}};
  out["right"] = r.right ? to_json(*r.right) : json(nullptr);
  return out;
}

inline Representation representation_from_json(const json& j) {
  Representation r;
  for (const json& e : j.at("left")) r.left.push_back(rep_entry_from_json(e));
  if (j.contains("right") && !j.at("right").is_null())
    r.right = rep_entry_from_json(j.at("right"));
  return r;
}

// --- proof terms ----------------------------------------------------------------------

inline json to_json(const ProofTerm& t) {
  switch (t.kind) {
    case ProofTerm::Kind::Var: return json{{"kind", "var"}, {"name", t.var}};
    case ProofTerm::Kind::Unit: return json{{"kind", "unit"}};
    case ProofTerm::Kind::Lam: {
      json out{{"kind", "lam"}, {"var", t.var}};
      if (t.ann) out["ann"] = to_json(*t.ann);
      out["body"] = to_json(t.kids[0]);
      return out;
    }
    case ProofTerm::Kind::App:
      return json{{"kind", "app"}, {"fn", to_json(t.kids[0])}, {"arg", to_json(t.kids[1])}};
    case ProofTerm::Kind::Pair:
      return json{{"kind", "pair"},
                  {"first", to_json(t.kids[0])},
                  {"second", to_json(t.kids[1])}};
    case ProofTerm::Kind::Fst: return json{{"kind", "fst"}, {"of", to_json(t.kids[0])}};
    case ProofTerm::Kind::Snd: return json{{"kind", "snd"}, {"of", to_json(t.kids[0])}};
  }
  throw IoError("unreachable");
}

inline ProofTerm proof_term_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "var") return ProofTerm::mkvar(j.at("name").get<std::string>());
  if (kind == "unit") return ProofTerm::unit();
  if (kind == "lam") {
    std::optional<Prop> ann;
    if (j.contains("ann")) ann = prop_from_json(j.at("ann"));
    return ProofTerm::lam(j.at("var").get<std::string>(),
                          proof_term_from_json(j.at("body")), std::move(ann));
  }
  if (kind == "app")
    return ProofTerm::app(proof_term_from_json(j.at("fn")),
                          proof_term_from_json(j.at("arg")));
  if (kind == "pair")
    return ProofTerm::pair(proof_term_from_json(j.at("first")),
                           proof_term_from_json(j.at("second")));
  if (kind == "fst") return ProofTerm::fst(proof_term_from_json(j.at("of")));
  if (kind == "snd") return ProofTerm::snd(proof_term_from_json(j.at("of")));
  throw IoError("unknown proof term kind '" + kind + "'");
}

// --- files ------------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
}

inline RewriteSystem load_system(const std::string& path) {
  return system_from_text(read_file(path));
}

// A builtin name or a JSON file path.
inline std::shared_ptr<const FinitePHA> resolve_algebra(const std::string& name_or_path) {
  static const std::vector<FinitePHA> builtins = bundled_algebras();
  if (const FinitePHA* b = find_builtin(builtins, name_or_path))
    return std::make_shared<FinitePHA>(*b);
  return std::make_shared<FinitePHA>(algebra_from_json(json::parse(read_file(name_or_path))));
}

inline Structure load_structure(const std::string& path) {
  return structure_from_json(json::parse(read_file(path)), resolve_algebra);
}

inline SequentProof load_proof(const std::string& path) {
  return proof_from_json(json::parse(read_file(path)));
}

inline ProofTerm load_proof_term(const std::string& path) {
  return proof_term_from_json(json::parse(read_file(path)));
}

}  // namespace modulo::io
