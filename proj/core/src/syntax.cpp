#include "cutsim/syntax.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"

namespace cutsim {

ParseError::ParseError(Category category, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         category_name(category) + " error: " + message),
      category_(category),
      line_(line),
      column_(column) {}

const char* ParseError::category_name(Category c) {
  switch (c) {
    case Category::Lexical:
      return "lexical";
    case Category::Syntactic:
      return "syntactic";
    case Category::Typing:
      return "typing";
    case Category::Scoping:
      return "scoping";
  }
  return "?";
}

const NamedSequent* Problem::find_sequent(const std::string& name) const {
  for (const auto& s : sequents) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

using Cat = ParseError::Category;

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident,
  Int,
  Arrow,
  Backslash,
  Tilde,
  Bar,
  Amp,
  Imp,
  Iff,
  Bang,
  Quest,
  Eq3,
  Eq2,
  At,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBrack,
  RBrack,
  Comma,
  Dot,
  Colon,
  Assign,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  static const std::vector<std::pair<std::string_view, Tok>> kSymbols = {
      {"<=>", Tok::Iff}, {"===", Tok::Eq3}, {"==", Tok::Eq2},   {"=>", Tok::Imp},
      {"->", Tok::Arrow}, {"\\", Tok::Backslash}, {"~", Tok::Tilde}, {"|", Tok::Bar},
      {"&", Tok::Amp},   {"!", Tok::Bang},   {"?", Tok::Quest},  {"@", Tok::At},
      {"(", Tok::LParen}, {")", Tok::RParen}, {"{", Tok::LBrace}, {"}", Tok::RBrace},
      {"[", Tok::LBrack}, {"]", Tok::RBrack}, {",", Tok::Comma},  {".", Tok::Dot},
      {":", Tok::Colon}, {"=", Tok::Assign},
  };
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      advance(1);
      continue;
    }
    if (ch == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                              s[j] == '\'')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& [text, kind] : kSymbols) {
      if (starts(text)) {
        out.push_back({kind, std::string(text), line, col});
        advance(text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(Cat::Lexical, line, col,
                       "unexpected character '" + std::string(1, s[i]) + "'");
    }
  }
  out.push_back({Tok::End, "<end of input>", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Raw syntax trees

enum class AK {
  Ident,
  App,
  Lam,
  Forall,
  Exists,
  Not,
  Or,
  And,
  Imp,
  Iff,
  Leib,
  Andrews,
  PiConst,
  NotConst,
  OrConst,
};

struct Ast;
using AstP = std::shared_ptr<const Ast>;

struct Ast {
  AK kind;
  std::string name;
  Type type;
  AstP a, b;
  int line = 0, col = 0;
};

struct RawNode {
  std::string rule;
  int line = 0, col = 0;
  AstP term;  // :w or :f
  std::string eigen;
  int eigen_line = 0, eigen_col = 0;
  std::optional<unsigned> n;
  std::optional<Type> ta, tb;
  std::vector<AstP> concl;
  std::vector<RawNode> kids;
};

struct RawCalculus {
  std::string id;
  int line = 0, col = 0;
  AstP realizer;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_ident(const char* word) const { return at(Tok::Ident) && peek().text == word; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(Cat::Syntactic, t.line, t.col, msg + ", found '" + t.text + "'");
  }
  Token expect(Tok t, const char* what) {
    if (!at(t)) fail(peek(), std::string("expected ") + what);
    return next();
  }
  void expect_end() {
    if (!at(Tok::End)) fail(peek(), "expected end of input");
  }

  Type type() {
    Type dom = type_atom();
    if (at(Tok::Arrow)) {
      next();
      return Type::fun(dom, type());
    }
    return dom;
  }

  AstP term() {
    if (at_binder()) return binder();
    AstP l = iff();
    if (at(Tok::Eq2) || at(Tok::Eq3)) {
      Token op = next();
      AstP r = iff();
      expect(Tok::At, "'@' and the type of the equation");
      Type t = type();
      return mk(op.kind == Tok::Eq2 ? AK::Leib : AK::Andrews, op, "", t, l, r);
    }
    return l;
  }

  // `{ F1, ..., Fn }`
  std::vector<AstP> formula_set() {
    std::vector<AstP> out;
    expect(Tok::LBrace, "'{'");
    if (at(Tok::RBrace)) {
      next();
      return out;
    }
    while (true) {
      out.push_back(term());
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      expect(Tok::RBrace, "',' or '}'");
      return out;
    }
  }

  RawNode node() {
    expect(Tok::LParen, "'(' starting a derivation node");
    Token r = expect(Tok::Ident, "rule name");
    RawNode n;
    n.rule = r.text;
    n.line = r.line;
    n.col = r.col;
    if (!rule_from_name(r.text)) {
      throw ParseError(Cat::Syntactic, r.line, r.col, "unknown rule '" + r.text + "'");
    }
    bool have_concl = false;
    while (at(Tok::Colon)) {
      next();
      Token key = expect(Tok::Ident, "parameter keyword");
      if (key.text == "concl") {
        n.concl = formula_set();
        have_concl = true;
        break;
      } else if (key.text == "w" || key.text == "f") {
        n.term = term();
      } else if (key.text == "c") {
        Token c = expect(Tok::Ident, "eigen-parameter name");
        n.eigen = c.text;
        n.eigen_line = c.line;
        n.eigen_col = c.col;
      } else if (key.text == "n") {
        Token c = expect(Tok::Int, "argument count");
        n.n = static_cast<unsigned>(std::stoul(c.text));
      } else if (key.text == "a") {
        n.ta = type();
      } else if (key.text == "b") {
        n.tb = type();
      } else {
        fail(key, "unknown parameter keyword");
      }
    }
    if (!have_concl) fail(peek(), "expected ':concl'");
    while (at(Tok::LParen)) n.kids.push_back(node());
    expect(Tok::RParen, "')' closing the node");
    check_params(n);
    return n;
  }

  RawCalculus calculus() {
    Token id = expect(Tok::Ident, "calculus name");
    RawCalculus c{id.text, id.line, id.col, nullptr};
    if (id.text == "GbCutA") {
      expect(Tok::LParen, "'(' and the realizer");
      c.realizer = term();
      expect(Tok::RParen, "')'");
    }
    return c;
  }

 private:
  static AstP mk(AK k, const Token& at, std::string name = "", Type t = Type(), AstP a = nullptr,
                 AstP b = nullptr) {
    auto n = std::make_shared<Ast>();
    n->kind = k;
    n->name = std::move(name);
    n->type = t;
    n->a = std::move(a);
    n->b = std::move(b);
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  Type type_atom() {
    if (at(Tok::LParen)) {
      next();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token t = expect(Tok::Ident, "a type");
    if (t.text == "o") return Type::o();
    if (t.text == "i") return Type::i();
    fail(t, "expected a type ('o', 'i', or a function type)");
  }

  bool at_binder() const { return at(Tok::Backslash) || at(Tok::Bang) || at(Tok::Quest); }

  AstP binder() {
    Token b = next();
    Token x = expect(Tok::Ident, "bound variable name");
    expect(Tok::Colon, "':' and the type of the bound variable");
    Type t = type();
    expect(Tok::Dot, "'.'");
    AstP body = term();
    AK k = b.kind == Tok::Backslash ? AK::Lam : b.kind == Tok::Bang ? AK::Forall : AK::Exists;
    return mk(k, b, x.text, t, body);
  }

  AstP iff() {
    AstP l = imp();
    if (at(Tok::Iff)) {
      Token op = next();
      return mk(AK::Iff, op, "", Type(), l, iff());
    }
    return l;
  }

  AstP imp() {
    AstP l = disj();
    if (at(Tok::Imp)) {
      Token op = next();
      return mk(AK::Imp, op, "", Type(), l, imp());
    }
    return l;
  }

  AstP disj() {
    AstP l = conj();
    while (at(Tok::Bar)) {
      Token op = next();
      l = mk(AK::Or, op, "", Type(), l, conj());
    }
    return l;
  }

  AstP conj() {
    AstP l = unary();
    while (at(Tok::Amp)) {
      Token op = next();
      l = mk(AK::And, op, "", Type(), l, unary());
    }
    return l;
  }

  AstP unary() {
    if (at(Tok::Tilde)) {
      Token op = next();
      return mk(AK::Not, op, "", Type(), unary());
    }
    return app();
  }

  bool at_atom() const {
    return at(Tok::Ident) || at(Tok::LParen) || at_binder();
  }

  AstP app() {
    Token start = peek();
    AstP f = atom();
    while (at_atom()) {
      if (at_binder()) return mk(AK::App, start, "", Type(), f, binder());
      f = mk(AK::App, start, "", Type(), f, atom());
    }
    return f;
  }

  AstP atom() {
    if (at_binder()) return binder();
    if (at(Tok::LParen)) {
      Token lp = next();
      if (at(Tok::Tilde) && peek(1).kind == Tok::RParen) {
        next();
        next();
        return mk(AK::NotConst, lp);
      }
      if (at(Tok::Bar) && peek(1).kind == Tok::RParen) {
        next();
        next();
        return mk(AK::OrConst, lp);
      }
      AstP t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token id = peek();
    if (!at(Tok::Ident)) fail(id, "expected a term");
    next();
    if (id.text == Term::kPi && at(Tok::LBrack)) {
      next();
      Type t = type();
      expect(Tok::RBrack, "']'");
      return mk(AK::PiConst, id, "", t);
    }
    return mk(AK::Ident, id, id.text);
  }

  void check_params(const RawNode& n) const {
    Rule r = *rule_from_name(n.rule);
    auto need = [&](bool ok, const char* what) {
      if (!ok) {
        throw ParseError(Cat::Syntactic, n.line, n.col,
                         "rule " + n.rule + " requires parameter " + what);
      }
    };
    switch (r) {
      case Rule::PiL:
        need(n.term != nullptr, ":w");
        break;
      case Rule::PiR:
        need(!n.eigen.empty(), ":c");
        break;
      case Rule::Cut:
      case Rule::CutA:
        need(n.term != nullptr, ":f");
        break;
      case Rule::Dec:
        need(n.n.has_value(), ":n");
        break;
      case Rule::ExtFAx:
        need(n.ta.has_value() && n.tb.has_value(), ":a and :b");
        break;
      default:
        break;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Type inference over raw trees

struct IT;
using ITp = std::shared_ptr<IT>;
struct IT {
  enum K { O, I, Fun, Var } k;
  ITp dom, cod, link;
};

ITp it_o() { return std::make_shared<IT>(IT{IT::O, nullptr, nullptr, nullptr}); }
ITp it_i() { return std::make_shared<IT>(IT{IT::I, nullptr, nullptr, nullptr}); }
ITp it_fun(ITp a, ITp b) { return std::make_shared<IT>(IT{IT::Fun, a, b, nullptr}); }
ITp it_var() { return std::make_shared<IT>(IT{IT::Var, nullptr, nullptr, nullptr}); }

ITp it_of(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::O:
      return it_o();
    case Type::Kind::I:
      return it_i();
    case Type::Kind::Fun:
      return it_fun(it_of(t.domain()), it_of(t.codomain()));
  }
  return it_o();
}

ITp find(ITp t) {
  while (t->k == IT::Var && t->link) t = t->link;
  return t;
}

bool occurs(const ITp& v, ITp t) {
  t = find(t);
  if (t == v) return true;
  if (t->k == IT::Fun) return occurs(v, t->dom) || occurs(v, t->cod);
  return false;
}

bool unify(ITp a, ITp b) {
  a = find(a);
  b = find(b);
  if (a == b) return true;
  if (a->k == IT::Var) {
    if (occurs(a, b)) return false;
    a->link = b;
    return true;
  }
  if (b->k == IT::Var) return unify(b, a);
  if (a->k != b->k) return false;
  if (a->k == IT::Fun) return unify(a->dom, b->dom) && unify(a->cod, b->cod);
  return true;
}

// Unconstrained variables default to i.
Type to_type(ITp t) {
  t = find(t);
  switch (t->k) {
    case IT::O:
      return Type::o();
    case IT::I:
      return Type::i();
    case IT::Fun:
      return Type::fun(to_type(t->dom), to_type(t->cod));
    case IT::Var:
      t->link = it_i();
      return Type::i();
  }
  return Type::i();
}

std::string it_str(ITp t) {
  t = find(t);
  switch (t->k) {
    case IT::O:
      return "o";
    case IT::I:
      return "i";
    case IT::Var:
      return "_";
    case IT::Fun: {
      ITp d = find(t->dom);
      std::string ds = it_str(d);
      if (d->k == IT::Fun) ds = "(" + ds + ")";
      return ds + " -> " + it_str(t->cod);
    }
  }
  return "?";
}

class Elaborator {
 public:
  Elaborator(Signature& sig, Undeclared mode) : sig_(sig), mode_(mode) {}

  // Phase 1: collect constraints. `expected` may be null.
  void constrain(const AstP& t, const ITp& expected) {
    std::vector<std::pair<std::string, ITp>> env;
    ITp got = infer(*t, env);
    if (expected) expect(*t, got, expected);
  }

  ITp constrain_eigen(const std::string& name, int line, int col) {
    return lookup_free(name, line, col);
  }

  // Phase 2: declare inferred names, then build terms.
  void commit() {
    for (auto& [name, it] : pending_) sig_.declare(name, to_type(it));
    pending_.clear();
  }

  Term build(const AstP& t) {
    std::vector<std::pair<std::string, Type>> env;
    return build(*t, env);
  }

  Term eigen(const std::string& name, int line, int col) {
    auto ty = sig_.lookup(name);
    if (!ty) throw ParseError(Cat::Scoping, line, col, "undeclared parameter '" + name + "'");
    return Term::constant(name, *ty);
  }

 private:
  void expect(const Ast& at, const ITp& got, const ITp& want) {
    if (!unify(got, want)) {
      throw ParseError(Cat::Typing, at.line, at.col,
                       "expected type " + it_str(want) + " but found " + it_str(got));
    }
  }

  ITp lookup_free(const std::string& name, int line, int col) {
    if (auto ty = sig_.lookup(name)) return it_of(*ty);
    auto it = pending_.find(name);
    if (it != pending_.end()) return it->second;
    if (mode_ == Undeclared::Reject || Signature::is_logical_name(name)) {
      throw ParseError(Cat::Scoping, line, col, "undeclared identifier '" + name + "'");
    }
    ITp v = it_var();
    pending_.emplace(name, v);
    return v;
  }

  ITp infer(const Ast& t, std::vector<std::pair<std::string, ITp>>& env) {
    switch (t.kind) {
      case AK::Ident: {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        return lookup_free(t.name, t.line, t.col);
      }
      case AK::App: {
        ITp f = infer(*t.a, env);
        ITp a = infer(*t.b, env);
        ITp r = it_var();
        if (!unify(f, it_fun(a, r))) {
          throw ParseError(Cat::Typing, t.line, t.col,
                           "cannot apply term of type " + it_str(f) + " to argument of type " +
                               it_str(a));
        }
        return r;
      }
      case AK::Lam:
      case AK::Forall:
      case AK::Exists: {
        env.emplace_back(t.name, it_of(t.type));
        ITp body = infer(*t.a, env);
        env.pop_back();
        if (t.kind == AK::Lam) return it_fun(it_of(t.type), body);
        expect(*t.a, body, it_o());
        return it_o();
      }
      case AK::Not:
        expect(*t.a, infer(*t.a, env), it_o());
        return it_o();
      case AK::Or:
      case AK::And:
      case AK::Imp:
      case AK::Iff:
        expect(*t.a, infer(*t.a, env), it_o());
        expect(*t.b, infer(*t.b, env), it_o());
        return it_o();
      case AK::Leib:
      case AK::Andrews:
        expect(*t.a, infer(*t.a, env), it_of(t.type));
        expect(*t.b, infer(*t.b, env), it_of(t.type));
        return it_o();
      case AK::PiConst:
        return it_of(pi_const(t.type).type());
      case AK::NotConst:
        return it_of(not_const().type());
      case AK::OrConst:
        return it_of(or_const().type());
    }
    return it_var();
  }

  Term build(const Ast& t, std::vector<std::pair<std::string, Type>>& env) {
    try {
      switch (t.kind) {
        case AK::Ident: {
          for (std::size_t k = 0; k < env.size(); ++k) {
            const auto& [name, ty] = env[env.size() - 1 - k];
            if (name == t.name) return Term::bound(static_cast<std::uint32_t>(k), ty);
          }
          auto ty = sig_.lookup(t.name);
          if (!ty) {
            throw ParseError(Cat::Scoping, t.line, t.col, "undeclared identifier '" + t.name + "'");
          }
          return Term::constant(t.name, *ty);
        }
        case AK::App:
          return Term::app(build(*t.a, env), build(*t.b, env));
        case AK::Lam:
        case AK::Forall:
        case AK::Exists: {
          env.emplace_back(t.name, t.type);
          Term body = build(*t.a, env);
          env.pop_back();
          if (t.kind == AK::Lam) return Term::lam_raw(t.name, t.type, body);
          if (t.kind == AK::Forall) return mk_pi(Term::lam_raw(t.name, t.type, body));
          return mk_not(mk_pi(Term::lam_raw(t.name, t.type, mk_not(body))));
        }
        case AK::Not:
          return mk_not(build(*t.a, env));
        case AK::Or:
          return mk_or(build(*t.a, env), build(*t.b, env));
        case AK::And:
          return mk_and(build(*t.a, env), build(*t.b, env));
        case AK::Imp:
          return mk_implies(build(*t.a, env), build(*t.b, env));
        case AK::Iff:
          return mk_iff(build(*t.a, env), build(*t.b, env));
        case AK::Leib:
          return leibniz_eq(build(*t.a, env), build(*t.b, env), t.type);
        case AK::Andrews:
          return andrews_eq(build(*t.a, env), build(*t.b, env), t.type);
        case AK::PiConst:
          return pi_const(t.type);
        case AK::NotConst:
          return not_const();
        case AK::OrConst:
          return or_const();
      }
    } catch (const TypeError& e) {
      throw ParseError(Cat::Typing, t.line, t.col, e.what());
    }
    throw ParseError(Cat::Syntactic, t.line, t.col, "unsupported term");
  }

  Signature& sig_;
  Undeclared mode_;
  std::map<std::string, ITp> pending_;
};

void constrain_node(Elaborator& el, const RawNode& n) {
  for (const AstP& f : n.concl) el.constrain(f, it_o());
  if (n.term) {
    Rule r = *rule_from_name(n.rule);
    el.constrain(n.term, r == Rule::PiL ? nullptr : it_o());
  }
  if (!n.eigen.empty()) el.constrain_eigen(n.eigen, n.eigen_line, n.eigen_col);
  for (const RawNode& k : n.kids) constrain_node(el, k);
}

Derivation build_node(Elaborator& el, const RawNode& n) {
  RuleParams p;
  if (n.term) p.term = el.build(n.term);
  if (!n.eigen.empty()) p.eigen = el.eigen(n.eigen, n.eigen_line, n.eigen_col);
  if (n.n) p.n = *n.n;
  if (n.ta) p.a = *n.ta;
  if (n.tb) p.b = *n.tb;
  std::vector<Term> fs;
  for (const AstP& f : n.concl) fs.push_back(el.build(f));
  std::vector<Derivation> kids;
  for (const RawNode& k : n.kids) kids.push_back(build_node(el, k));
  return Derivation(*rule_from_name(n.rule), p, Sequent(std::move(fs)), std::move(kids));
}

Calculus build_calculus(Elaborator& el, const RawCalculus& rc) {
  static const std::map<std::string, Calculus> kNamed = {
      {"Gb", Calculus::gb()},
      {"GbCut", Calculus::gb_cut()},
      {"GbE", Calculus::gb_e()},
      {"GbECut", Calculus::gb_e_cut()},
      {"GbfbMinus", Calculus::gbfb_minus()},
      {"GbfbMinusCut", {BaseCalculus::GbfbMinus, true, std::nullopt, false}},
      {"Gbfb", Calculus::gbfb()},
      {"GbfbCut", {BaseCalculus::Gbfb, true, std::nullopt, false}},
  };
  if (rc.id == "GbCutA") return Calculus::gb_cut_a(beta_normalize(el.build(rc.realizer)));
  auto it = kNamed.find(rc.id);
  if (it == kNamed.end()) {
    throw ParseError(Cat::Syntactic, rc.line, rc.col, "unknown calculus '" + rc.id + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Printer

bool valid_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return s != Term::kPi;
}

class Printer {
 public:
  explicit Printer(const Term& t) {
    for (const auto& kv : params_of(t)) taken_.insert(kv.first);
  }

  // Precedence levels: 0 equation, 3 disjunction, 4 operand of disjunction,
  // 5 negation, 6 application, 7 atom.
  std::string print(const Term& t, int level, bool tail) {
    if (auto l = match_leibniz(t)) return equation(*l, "==", level);
    if (auto a = match_andrews(t)) return equation(*a, "===", level);
    if (auto pred = match_pi(t); pred && pred->is_lam()) {
      return binder("!", *pred, tail);
    }
    if (auto d = match_or(t)) {
      std::string s = print(d->first, 3, false) + " | " + print(d->second, 4, tail);
      return wrap(s, level > 3);
    }
    if (auto n = match_not(t)) return wrap("~" + print(*n, 5, tail), level > 5);
    switch (t.kind()) {
      case Term::Kind::Bound:
        return scope_[scope_.size() - 1 - t.index()];
      case Term::Kind::Free:
        return t.name();
      case Term::Kind::Const:
        if (t.name() == Term::kNot) return "(~)";
        if (t.name() == Term::kOr) return "(|)";
        if (t.name() == Term::kPi) return "Pi[" + print_type(t.type().domain().domain()) + "]";
        return t.name();
      case Term::Kind::Lam:
        return binder("\\", t, tail);
      case Term::Kind::App: {
        std::string s = print(t.fn(), 6, false) + " " + print(t.arg(), 7, tail);
        return wrap(s, level > 6);
      }
    }
    return "?";
  }

 private:
  static std::string wrap(const std::string& s, bool parens) {
    return parens ? "(" + s + ")" : s;
  }

  std::string equation(const LeibnizParts& e, const char* op, int level) {
    std::string s = print(e.lhs, 1, false) + " " + op + " " + print(e.rhs, 1, false) + " @ " +
                    print_type(e.type);
    return wrap(s, level > 0);
  }

  std::string binder(const char* sym, const Term& lam, bool tail) {
    std::string base = valid_ident(lam.name()) ? lam.name() : "x";
    std::string name = base;
    for (int k = 1; taken_.count(name) || in_scope(name); ++k) name = base + std::to_string(k);
    scope_.push_back(name);
    std::string s = std::string(sym) + name + ":" + print_type(lam.binder_type()) + ". " +
                    print(lam.body(), 0, true);
    scope_.pop_back();
    return wrap(s, !tail);
  }

  bool in_scope(const std::string& n) const {
    for (const auto& s : scope_) {
      if (s == n) return true;
    }
    return false;
  }

  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

void print_node(const Derivation& d, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << "(" << rule_name(d.rule());
  const RuleParams& p = d.params();
  switch (d.rule()) {
    case Rule::PiL:
      out << " :w " << print_term(p.term);
      break;
    case Rule::PiR:
      out << " :c " << p.eigen.name();
      break;
    case Rule::Cut:
    case Rule::CutA:
      out << " :f " << print_term(p.term);
      break;
    case Rule::Dec:
      out << " :n " << p.n;
      break;
    case Rule::ExtFAx:
      out << " :a " << print_type(p.a) << " :b " << print_type(p.b);
      break;
    default:
      break;
  }
  out << " :concl " << print_sequent(d.conclusion());
  for (const Derivation& k : d.premises()) {
    out << "\n";
    print_node(k, depth + 1, out);
  }
  out << ")";
}

void collect_derivation_params(const Derivation& d, std::map<std::string, Type>& out) {
  for (const Term& f : d.conclusion()) collect_params(f, out);
  const RuleParams& p = d.params();
  if (p.term.valid()) collect_params(p.term, out);
  if (p.eigen.valid()) collect_params(p.eigen, out);
  for (const Derivation& k : d.premises()) collect_derivation_params(k, out);
}

std::string print_decls(const std::map<std::string, Type>& params) {
  std::string out;
  for (const auto& [name, ty] : params) out += "const " + name + " : " + print_type(ty) + ".\n";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

Type parse_type(std::string_view text) {
  Parser p(text);
  Type t = p.type();
  p.expect_end();
  return t;
}

Term parse_term(std::string_view text, Signature& sig, Undeclared mode) {
  Parser p(text);
  AstP ast = p.term();
  p.expect_end();
  Elaborator el(sig, mode);
  el.constrain(ast, nullptr);
  el.commit();
  return el.build(ast);
}

Term parse_term(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_term(text, copy, Undeclared::Reject);
}

Sequent parse_sequent(std::string_view text, Signature& sig, Undeclared mode) {
  Parser p(text);
  std::vector<AstP> fs = p.formula_set();
  p.expect_end();
  Elaborator el(sig, mode);
  for (const AstP& f : fs) el.constrain(f, it_o());
  el.commit();
  std::vector<Term> terms;
  for (const AstP& f : fs) terms.push_back(el.build(f));
  return Sequent::normalized(terms);
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_sequent(text, copy, Undeclared::Reject);
}

Derivation parse_derivation(std::string_view text, Signature& sig, Undeclared mode) {
  Parser p(text);
  RawNode root = p.node();
  p.expect_end();
  Elaborator el(sig, mode);
  constrain_node(el, root);
  el.commit();
  return build_node(el, root);
}

Derivation parse_derivation(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  return parse_derivation(text, copy, Undeclared::Reject);
}

Calculus parse_calculus(std::string_view text, Signature& sig, Undeclared mode) {
  Parser p(text);
  RawCalculus rc = p.calculus();
  p.expect_end();
  Elaborator el(sig, mode);
  if (rc.realizer) el.constrain(rc.realizer, it_o());
  el.commit();
  return build_calculus(el, rc);
}

Problem parse_problem(std::string_view text) {
  Parser p(text);
  Problem prob;
  if (p.at(Tok::End)) throw ParseError(Cat::Syntactic, 1, 1, "empty problem file");
  std::set<std::string> names;
  auto fresh_name_token = [&](const Token& t) {
    if (!names.insert(t.text).second) {
      throw ParseError(Cat::Scoping, t.line, t.col, "duplicate name '" + t.text + "'");
    }
  };
  while (!p.at(Tok::End)) {
    Token kw = p.expect(Tok::Ident, "'const', 'seq' or 'deriv'");
    if (kw.text == "const") {
      std::vector<Token> ids{p.expect(Tok::Ident, "parameter name")};
      while (p.at(Tok::Comma)) {
        p.next();
        ids.push_back(p.expect(Tok::Ident, "parameter name"));
      }
      p.expect(Tok::Colon, "':'");
      Type t = p.type();
      p.expect(Tok::Dot, "'.' ending the declaration");
      for (const Token& id : ids) {
        try {
          prob.signature.declare(id.text, t);
        } catch (const std::invalid_argument& e) {
          throw ParseError(Cat::Scoping, id.line, id.col, e.what());
        }
      }
    } else if (kw.text == "seq") {
      Token name = p.expect(Tok::Ident, "sequent name");
      fresh_name_token(name);
      std::vector<AstP> fs = p.formula_set();
      Elaborator el(prob.signature, Undeclared::Reject);
      for (const AstP& f : fs) el.constrain(f, it_o());
      std::vector<Term> terms;
      for (const AstP& f : fs) terms.push_back(el.build(f));
      prob.sequents.push_back({name.text, Sequent::normalized(terms)});
    } else if (kw.text == "deriv") {
      Token name = p.expect(Tok::Ident, "derivation name");
      fresh_name_token(name);
      std::optional<RawCalculus> rc;
      if (p.at(Tok::Colon)) {
        p.next();
        rc = p.calculus();
      }
      p.expect(Tok::Assign, "'='");
      RawNode root = p.node();
      Elaborator el(prob.signature, Undeclared::Reject);
      if (rc && rc->realizer) el.constrain(rc->realizer, it_o());
      constrain_node(el, root);
      std::optional<Calculus> calc;
      if (rc) calc = build_calculus(el, *rc);
      prob.derivations.push_back({name.text, calc, build_node(el, root)});
    } else {
      p.fail(kw, "expected 'const', 'seq' or 'deriv'");
    }
  }
  return prob;
}

std::string print_type(const Type& t) { return t.str(); }

std::string print_term(const Term& t) {
  Printer p(t);
  return p.print(t, 0, true);
}

std::string print_sequent(const Sequent& s) {
  std::string out = "{";
  bool first = true;
  for (const Term& f : s) {
    out += first ? "" : ", ";
    out += print_term(f);
    first = false;
  }
  return out + "}";
}

std::string print_calculus(const Calculus& c) {
  std::string out = base_name(c.base);
  if (c.cut_a_realizer) {
    if (c.base == BaseCalculus::Gb && !c.cut) return "GbCutA(" + print_term(*c.cut_a_realizer) + ")";
  }
  if (c.cut) out += "Cut";
  return out;
}

std::string print_derivation(const Derivation& d) {
  std::ostringstream out;
  print_node(d, 0, out);
  return out.str();
}

std::string print_derivation_problem(const std::string& name, const Derivation& d,
                                     const std::optional<Calculus>& calculus) {
  std::map<std::string, Type> params;
  collect_derivation_params(d, params);
  if (calculus && calculus->cut_a_realizer) collect_params(*calculus->cut_a_realizer, params);
  std::string out = print_decls(params);
  out += "deriv " + name;
  if (calculus) out += " : " + print_calculus(*calculus);
  out += " =\n" + print_derivation(d) + "\n";
  return out;
}

std::string print_problem(const Problem& p) {
  std::string out = print_decls(p.signature.params());
  for (const auto& s : p.sequents) out += "seq " + s.name + " " + print_sequent(s.sequent) + "\n";
  for (const auto& d : p.derivations) {
    out += "deriv " + d.name;
    if (d.calculus) out += " : " + print_calculus(*d.calculus);
    out += " =\n" + print_derivation(d.derivation) + "\n";
  }
  return out;
}

}  // namespace cutsim
