#pragma once

// ASCII concrete syntax.
//
//   prop  := or ('=>' or)*            => is LEFT associative: A => B => B
//                                      reads (A => B) => B
//   or    := and ('\/' and)*
//   and   := prim ('/\' prim)*
//   prim  := 'top' | 'bot'
//          | 'forall' IDENT '.' prop
//          | 'exists' IDENT '.' prop
//          | IDENT ['(' term (',' term)* ')']
//          | '(' prop ')'
//   term  := IDENT ['(' term (',' term)* ')']
//
// Quantifier bodies extend as far right as possible; a quantifier that is
// an operand of a binary connective must be parenthesized.
//
// With an explicit signature, identifiers are classified against it and
// unknown or misused symbols are errors. Without one, the classification
// is inferred: heads of atoms are predicates, applied identifiers inside
// terms are functions, and bare identifiers inside terms are variables.

#include <cctype>
#include <optional>
#include <sstream>

#include "modulo/syntax.hpp"

namespace modulo {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

namespace detail {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Dot, Imp, And, Or, Arrow, End };
  Kind kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", start};
      return;
    }
    char c = src_[i_];
    auto two = [&](char a, char b) {
      return c == a && i_ + 1 < src_.size() && src_[i_ + 1] == b;
    };
    if (two('=', '>')) { i_ += 2; tok_ = {Token::Kind::Imp, "=>", start}; return; }
    if (two('/', '\\')) { i_ += 2; tok_ = {Token::Kind::And, "/\\", start}; return; }
    if (two('\\', '/')) { i_ += 2; tok_ = {Token::Kind::Or, "\\/", start}; return; }
    if (two('-', '>')) { i_ += 2; tok_ = {Token::Kind::Arrow, "->", start}; return; }
    if (c == '(') { ++i_; tok_ = {Token::Kind::LParen, "(", start}; return; }
    if (c == ')') { ++i_; tok_ = {Token::Kind::RParen, ")", start}; return; }
    if (c == ',') { ++i_; tok_ = {Token::Kind::Comma, ",", start}; return; }
    if (c == '.') { ++i_; tok_ = {Token::Kind::Dot, ".", start}; return; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' ||
              src_[j] == '\''))
        ++j;
      tok_ = {Token::Kind::Ident, std::string(src_.substr(i_, j - i_)), start};
      i_ = j;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view src_;
  size_t i_ = 0;
  Token tok_{Token::Kind::End, "", 0};
};

class PropParser {
 public:
  // sig == nullptr: inference mode; inferred symbols accumulate into *inferred.
  PropParser(std::string_view src, const Signature* sig, Signature* inferred)
      : lex_(src), sig_(sig), inferred_(inferred) {}

  Prop parse_prop_all(const std::set<std::string>& known_vars) {
    known_vars_ = known_vars;
    Prop p = prop();
    expect_end();
    return p;
  }

  Term parse_term_all(const std::set<std::string>& known_vars) {
    known_vars_ = known_vars;
    Term t = term();
    expect_end();
    return t;
  }

 private:
  using TK = Token::Kind;

  void expect_end() {
    if (lex_.peek().kind != TK::End)
      throw ParseError("trailing input after expression", lex_.peek().pos);
  }

  Prop prop() {
    Prop acc = disj();
    while (lex_.peek().kind == TK::Imp) {
      lex_.next();
      acc = Prop::imp(std::move(acc), disj());
    }
    return acc;
  }

  Prop disj() {
    Prop acc = conj();
    while (lex_.peek().kind == TK::Or) {
      lex_.next();
      acc = Prop::or_(std::move(acc), conj());
    }
    return acc;
  }

  Prop conj() {
    Prop acc = prim();
    while (lex_.peek().kind == TK::And) {
      lex_.next();
      acc = Prop::and_(std::move(acc), prim());
    }
    return acc;
  }

  Prop prim() {
    Token t = lex_.peek();
    switch (t.kind) {
      case TK::LParen: {
        lex_.next();
        Prop p = prop();
        if (lex_.peek().kind != TK::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.next();
        return p;
      }
      case TK::Ident: {
        if (t.text == "top") { lex_.next(); return Prop::top(); }
        if (t.text == "bot") { lex_.next(); return Prop::bot(); }
        if (t.text == "forall" || t.text == "exists") {
          lex_.next();
          Token v = lex_.next();
          if (v.kind != TK::Ident)
            throw ParseError("expected bound variable after quantifier", v.pos);
          Token dot = lex_.next();
          if (dot.kind != TK::Dot) throw ParseError("expected '.' after bound variable", dot.pos);
          bool was_known = known_vars_.count(v.text) > 0;
          known_vars_.insert(v.text);
          Prop body = prop();
          if (!was_known) known_vars_.erase(v.text);
          return Prop::quant(
              t.text == "forall" ? Prop::Kind::Forall : Prop::Kind::Exists, v.text,
              std::move(body));
        }
        return atom();
      }
      default:
        throw ParseError("expected proposition", t.pos);
    }
  }

  Prop atom() {
    Token head = lex_.next();
    std::vector<Term> args;
    if (lex_.peek().kind == TK::LParen) args = arg_list();
    if (sig_) {
      auto it = sig_->predicates.find(head.text);
      if (it == sig_->predicates.end())
        throw ParseError("unknown predicate '" + head.text + "'", head.pos);
      if (static_cast<size_t>(it->second) != args.size())
        throw ParseError("predicate '" + head.text + "' expects " +
                             std::to_string(it->second) + " argument(s), got " +
                             std::to_string(args.size()),
                         head.pos);
    } else if (inferred_) {
      auto it = inferred_->predicates.find(head.text);
      if (it != inferred_->predicates.end() &&
          static_cast<size_t>(it->second) != args.size())
        throw ParseError("predicate '" + head.text + "' used with inconsistent arity",
                         head.pos);
      inferred_->add_predicate(head.text, static_cast<int>(args.size()));
    }
    return Prop::atom(head.text, std::move(args));
  }

  std::vector<Term> arg_list() {
    lex_.next();  // '('
    std::vector<Term> args;
    if (lex_.peek().kind == TK::RParen) {
      lex_.next();
      return args;
    }
    args.push_back(term());
    while (lex_.peek().kind == TK::Comma) {
      lex_.next();
      args.push_back(term());
    }
    if (lex_.peek().kind != TK::RParen) throw ParseError("expected ')'", lex_.peek().pos);
    lex_.next();
    return args;
  }

  Term term() {
    Token head = lex_.next();
    if (head.kind != TK::Ident) throw ParseError("expected term", head.pos);
    if (lex_.peek().kind == TK::LParen) {
      std::vector<Term> args = arg_list();
      if (sig_) {
        auto it = sig_->functions.find(head.text);
        if (it == sig_->functions.end())
          throw ParseError("unknown function '" + head.text + "'", head.pos);
        if (static_cast<size_t>(it->second) != args.size())
          throw ParseError("function '" + head.text + "' expects " +
                               std::to_string(it->second) + " argument(s), got " +
                               std::to_string(args.size()),
                           head.pos);
      } else if (inferred_) {
        inferred_->add_function(head.text, static_cast<int>(args.size()));
      }
      return Term::app(head.text, std::move(args));
    }
    // Bare identifier: a declared 0-ary function is a constant, anything
    // else is a variable.
    if (sig_) {
      auto it = sig_->functions.find(head.text);
      if (it != sig_->functions.end()) {
        if (it->second != 0)
          throw ParseError("function '" + head.text + "' expects arguments", head.pos);
        return Term::app(head.text);
      }
      return Term::var(head.text);
    }
    if (inferred_) {
      auto it = inferred_->functions.find(head.text);
      if (it != inferred_->functions.end() && it->second == 0 && !known_vars_.count(head.text))
        return Term::app(head.text);
    }
    return Term::var(head.text);
  }

  Lexer lex_;
  const Signature* sig_;
  Signature* inferred_;
  std::set<std::string> known_vars_;
};

}  // namespace detail

inline Prop parse_prop(std::string_view text, const Signature& sig) {
  return detail::PropParser(text, &sig, nullptr).parse_prop_all({});
}

inline Prop parse_prop(std::string_view text, Signature* inferred = nullptr) {
  Signature scratch;
  return detail::PropParser(text, nullptr, inferred ? inferred : &scratch).parse_prop_all({});
}

inline Term parse_term(std::string_view text, const Signature& sig) {
  return detail::PropParser(text, &sig, nullptr).parse_term_all({});
}

inline Term parse_term(std::string_view text) {
  Signature scratch;
  return detail::PropParser(text, nullptr, &scratch).parse_term_all({});
}

// --- printing ---------------------------------------------------------------

inline std::string print_term(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.name;
  std::string out = t.name;
  if (!t.args.empty()) {
    out += '(';
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ", ";
      out += print_term(t.args[i]);
    }
    out += ')';
  } else {
    out += "()";  // keeps 0-ary constants distinguishable without a signature
  }
  return out;
}

namespace detail {

// min_level: 0 = imp, 1 = or, 2 = and, 3 = primary.
// Quantifiers print bare only in tail position, where their unbounded
// rightward scope cannot swallow a following operator.
inline void print_prop_rec(const Prop& p, int min_level, bool tail, std::string& out) {
  auto wrap = [&](auto emit) {
    out += '(';
    emit();
    out += ')';
  };
  switch (p.kind) {
    case Prop::Kind::Atom:
      out += p.name;
      if (!p.args.empty()) {
        out += '(';
        for (size_t i = 0; i < p.args.size(); ++i) {
          if (i) out += ", ";
          out += print_term(p.args[i]);
        }
        out += ')';
      }
      return;
    case Prop::Kind::Top: out += "top"; return;
    case Prop::Kind::Bot: out += "bot"; return;
    case Prop::Kind::Imp: {
      bool wrapped = min_level > 0;
      auto emit = [&] {
        print_prop_rec(p.lhs(), 0, false, out);
        out += " => ";
        print_prop_rec(p.rhs(), 1, wrapped ? true : tail, out);
      };
      if (wrapped) { wrap(emit); } else { emit(); }
      return;
    }
    case Prop::Kind::Or: {
      bool wrapped = min_level > 1;
      auto emit = [&] {
        print_prop_rec(p.lhs(), 1, false, out);
        out += " \\/ ";
        print_prop_rec(p.rhs(), 2, wrapped ? true : tail, out);
      };
      if (wrapped) { wrap(emit); } else { emit(); }
      return;
    }
    case Prop::Kind::And: {
      bool wrapped = min_level > 2;
      auto emit = [&] {
        print_prop_rec(p.lhs(), 2, false, out);
        out += " /\\ ";
        print_prop_rec(p.rhs(), 3, wrapped ? true : tail, out);
      };
      if (wrapped) { wrap(emit); } else { emit(); }
      return;
    }
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      auto emit = [&] {
        out += p.kind == Prop::Kind::Forall ? "forall " : "exists ";
        out += p.name;
        out += ". ";
        print_prop_rec(p.body(), 0, true, out);
      };
      if (tail) { emit(); } else { wrap(emit); }
      return;
    }
  }
}

}  // namespace detail

inline std::string print_prop(const Prop& p) {
  std::string out;
  detail::print_prop_rec(p, 0, true, out);
  return out;
}

}  // namespace modulo
