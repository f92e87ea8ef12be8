#include "cutsim/logic.hpp"

#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"

namespace cutsim {

namespace {

bool is_const_named(const Term& t, const char* name) {
  return t.is_const() && t.name() == name;
}

std::optional<Term> strip_loose0(const Term& t) {
  // t lives under one binder; succeeds when the binder is unused.
  if (t.loose_bound() == 0) return t;
  bool uses = false;
  for_each_subterm(t, [&](const Term& s, std::uint32_t depth) {
    if (s.is_bound() && s.index() == depth) uses = true;
  });
  if (uses) return std::nullopt;
  return shift(t, -1);
}

}  // namespace

Term not_const() {
  static const Term c = Term::constant(Term::kNot, Type::fun(Type::o(), Type::o()));
  return c;
}

Term or_const() {
  static const Term c =
      Term::constant(Term::kOr, Type::fun(Type::o(), Type::fun(Type::o(), Type::o())));
  return c;
}

Term pi_const(const Type& alpha) {
  return Term::constant(Term::kPi, Type::fun(Type::fun(alpha, Type::o()), Type::o()));
}

Term mk_not(const Term& a) { return Term::app(not_const(), a); }

Term mk_or(const Term& a, const Term& b) { return Term::app(or_const(), {a, b}); }

Term mk_pi(const Term& pred) {
  const Type& t = pred.type();
  if (!t.is_fun() || !t.codomain().is_o()) {
    throw TypeError("Pi expects a predicate, got type " + t.str());
  }
  return Term::app(pi_const(t.domain()), pred);
}

Term mk_forall(const std::string& name, const Type& type, const Term& body) {
  return mk_pi(Term::lam(name, type, body));
}

Term mk_and(const Term& a, const Term& b) { return mk_not(mk_or(mk_not(a), mk_not(b))); }

Term mk_implies(const Term& a, const Term& b) { return mk_or(mk_not(a), b); }

Term mk_iff(const Term& a, const Term& b) {
  return mk_not(mk_or(mk_not(mk_implies(a, b)), mk_not(mk_implies(b, a))));
}

Term mk_exists(const std::string& name, const Type& type, const Term& body) {
  return mk_not(mk_forall(name, type, mk_not(body)));
}

Term leibniz_eq(const Term& a, const Term& b, const Type& alpha) {
  if (a.type() != alpha || b.type() != alpha) {
    throw TypeError("Leibniz equation at " + alpha.str() + " applied to " + a.type().str() +
                    " and " + b.type().str());
  }
  Type pt = Type::fun(alpha, Type::o());
  Term p = Term::bound(0, pt);
  Term body = mk_or(mk_not(Term::app(p, shift(a, 1))), Term::app(p, shift(b, 1)));
  return mk_pi(Term::lam_raw("P", pt, body));
}

Term andrews_eq(const Term& a, const Term& b, const Type& alpha) {
  if (a.type() != alpha || b.type() != alpha) {
    throw TypeError("Andrews equation at " + alpha.str() + " applied to " + a.type().str() +
                    " and " + b.type().str());
  }
  Type qt = Type::arrows({alpha, alpha}, Type::o());
  // under lam Q: Q = 0; under lam Q lam Z: Q = 1, Z = 0
  Term zz = Term::app(Term::bound(1, qt), {Term::bound(0, alpha), Term::bound(0, alpha)});
  Term refl = mk_pi(Term::lam_raw("Z", alpha, zz));
  Term qab = Term::app(Term::bound(0, qt), {shift(a, 1), shift(b, 1)});
  return mk_pi(Term::lam_raw("Q", qt, mk_or(mk_not(refl), qab)));
}

Term func_ext_axiom(const Type& alpha, const Type& beta) {
  Type ft = Type::fun(alpha, beta);
  Term f = Term::var("F", ft);
  Term g = Term::var("G", ft);
  Term x = Term::var("X", alpha);
  Term pointwise =
      mk_forall("X", alpha, leibniz_eq(Term::app(f, x), Term::app(g, x), beta));
  Term body = mk_implies(pointwise, leibniz_eq(f, g, ft));
  return mk_forall("F", ft, mk_forall("G", ft, body));
}

Term bool_ext_axiom() {
  Term a = Term::var("A", Type::o());
  Term b = Term::var("B", Type::o());
  Term body = mk_implies(mk_iff(a, b), leibniz_eq(a, b, Type::o()));
  return mk_forall("A", Type::o(), mk_forall("B", Type::o(), body));
}

std::optional<Term> match_not(const Term& t) {
  if (t.is_app() && is_const_named(t.fn(), Term::kNot)) return t.arg();
  return std::nullopt;
}

std::optional<std::pair<Term, Term>> match_or(const Term& t) {
  if (t.is_app() && t.fn().is_app() && is_const_named(t.fn().fn(), Term::kOr)) {
    return std::make_pair(t.fn().arg(), t.arg());
  }
  return std::nullopt;
}

std::optional<Term> match_pi(const Term& t) {
  if (t.is_app() && is_const_named(t.fn(), Term::kPi)) return t.arg();
  return std::nullopt;
}

std::optional<LeibnizParts> match_leibniz(const Term& t) {
  auto pred = match_pi(t);
  if (!pred || !pred->is_lam()) return std::nullopt;
  const Type& pt = pred->binder_type();
  if (!pt.is_fun() || !pt.codomain().is_o()) return std::nullopt;
  auto parts = match_or(pred->body());
  if (!parts) return std::nullopt;
  auto neg = match_not(parts->first);
  if (!neg) return std::nullopt;
  const Term& pa = *neg;
  const Term& pb = parts->second;
  auto is_p = [](const Term& s) { return s.is_bound() && s.index() == 0; };
  if (!pa.is_app() || !is_p(pa.fn()) || !pb.is_app() || !is_p(pb.fn())) return std::nullopt;
  auto a = strip_loose0(pa.arg());
  auto b = strip_loose0(pb.arg());
  if (!a || !b) return std::nullopt;
  return LeibnizParts{*a, *b, pt.domain()};
}

std::optional<LeibnizParts> match_andrews(const Term& t) {
  auto pred = match_pi(t);
  if (!pred || !pred->is_lam()) return std::nullopt;
  const Type& qt = pred->binder_type();
  if (!qt.is_fun() || !qt.codomain().is_fun()) return std::nullopt;
  const Type& alpha = qt.domain();
  if (qt != Type::arrows({alpha, alpha}, Type::o())) return std::nullopt;
  auto parts = match_or(pred->body());
  if (!parts) return std::nullopt;
  auto qab = parts->second;
  if (!qab.is_app() || !qab.fn().is_app()) return std::nullopt;
  const Term& q = qab.fn().fn();
  if (!q.is_bound() || q.index() != 0) return std::nullopt;
  auto a = strip_loose0(qab.fn().arg());
  auto b = strip_loose0(qab.arg());
  if (!a || !b) return std::nullopt;
  LeibnizParts out{*a, *b, alpha};
  if (andrews_eq(out.lhs, out.rhs, alpha) != t) return std::nullopt;
  return out;
}

bool is_atomic(const Term& f) {
  Term h = head_of(f);
  if (h.is_lam()) h = head_of(beta_normalize(f));
  return !h.is_logical();
}

}  // namespace cutsim
