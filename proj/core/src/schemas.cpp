#include "cutsim/schemas.hpp"

#include <algorithm>

#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"
#include "cutsim/transform.hpp"

namespace cutsim {

namespace {

const Type kO = Type::o();
const Type kI = Type::i();

Term var(const char* n, const Type& t) { return Term::var(n, t); }

CutStrongSchema make(SchemaKind kind, std::string name, Term a, unsigned k) {
  CutStrongSchema s{kind, std::move(name), std::move(a), k, Term(), Term(), Type(), Type()};
  return s;
}

// beta-normal form of the body of Pi(pred) at w.
Term body_at(const Term& pi, const Term& w) {
  auto pred = match_pi(pi);
  if (!pred) throw TransformError("ShapeMismatch", "expected a Pi formula");
  return beta_normalize(Term::app(*pred, w));
}

Term strip_not(const Term& t) {
  auto a = match_not(t);
  if (!a) throw TransformError("ShapeMismatch", "expected a negation");
  return *a;
}

std::pair<Term, Term> split_or(const Term& t) {
  auto p = match_or(t);
  if (!p) throw TransformError("ShapeMismatch", "expected a disjunction");
  return *p;
}

struct FreshParams {
  std::set<std::string> used;

  void avoid(const Term& t) {
    for (const auto& kv : params_of(t)) used.insert(kv.first);
  }
  Term next(const Type& t) {
    std::string n = fresh_name(t, used);
    used.insert(n);
    return Term::constant(n, t);
  }
};

// delta * ~(~C | C) from D_C and D_notC.
Derivation excluded_middle(const Sequent& delta, const Term& c, const Derivation& d_c,
                           const Derivation& d_nc) {
  Term em = mk_not(mk_or(mk_not(c), c));
  return Derivation::or_l(delta.with(em), Derivation::neg(delta.with(mk_not(mk_not(c))), d_c),
                          d_nc);
}

}  // namespace

Term induction_zero() { return Term::constant("zero", kI); }
Term induction_succ() { return Term::constant("succ", Type::fun(kI, kI)); }

CutStrongSchema trivial_schema() {
  return make(SchemaKind::Trivial, "trivial", mk_forall("P", kO, var("P", kO)), 3);
}

CutStrongSchema tautology_schema() {
  Term p = var("P", kO);
  return make(SchemaKind::Tautology, "tautology", mk_forall("P", kO, mk_implies(p, p)), 3);
}

CutStrongSchema leibniz_schema(const Term& m, const Term& n, const Type& alpha) {
  CutStrongSchema s = make(SchemaKind::Leibniz, "leibniz", leibniz_eq(m, n, alpha), 3);
  s.lhs = m;
  s.rhs = n;
  s.alpha = alpha;
  return s;
}

CutStrongSchema comprehension_schema() {
  Type pt = Type::fun(kI, kO);
  Term p = var("P", pt), x = var("X", kI);
  Term body = mk_forall("X", kI, mk_iff(Term::app(p, x), leibniz_eq(x, x, kI)));
  CutStrongSchema s = make(SchemaKind::ComprehensionI, "comprehensionI", mk_exists("P", pt, body), 16);
  s.alpha = kI;
  return s;
}

CutStrongSchema bool_ext_schema() {
  CutStrongSchema s = make(SchemaKind::BoolExt, "boolExt", bool_ext_axiom(), 14);
  s.alpha = kO;
  return s;
}

CutStrongSchema func_ext_schema(const Type& alpha, const Type& beta) {
  CutStrongSchema s = make(SchemaKind::FuncExt, "funcExt", func_ext_axiom(alpha, beta), 11);
  s.alpha = alpha;
  s.beta = beta;
  return s;
}

CutStrongSchema andrews_schema(const Term& m, const Term& n, const Type& alpha) {
  CutStrongSchema s = make(SchemaKind::Andrews, "andrews", andrews_eq(m, n, alpha), 4);
  s.lhs = m;
  s.rhs = n;
  s.alpha = alpha;
  return s;
}

CutStrongSchema induction_schema() {
  Type pt = Type::fun(kI, kO);
  Term p = var("P", pt), x = var("X", kI);
  Term px = Term::app(p, x);
  Term step = mk_forall("X", kI, mk_implies(px, Term::app(p, Term::app(induction_succ(), x))));
  Term hyp = mk_and(Term::app(p, induction_zero()), step);
  Term a = mk_forall("P", pt, mk_implies(hyp, mk_forall("X", kI, px)));
  CutStrongSchema s = make(SchemaKind::Induction, "induction", a, 18);
  s.alpha = kI;
  return s;
}

CutStrongSchema choice_schema(const Type& alpha) {
  Type qt = Type::fun(alpha, kO);
  Type it = Type::fun(qt, alpha);
  Term q = var("Q", qt), x = var("X", alpha), i = var("I", it);
  Term body = mk_implies(mk_exists("X", alpha, Term::app(q, x)), Term::app(q, Term::app(i, q)));
  Term a = mk_exists("I", it, mk_forall("Q", qt, body));
  CutStrongSchema s = make(SchemaKind::Choice, "choice", a, 7);
  s.alpha = alpha;
  return s;
}

CutStrongSchema description_schema(const Type& alpha) {
  Type qt = Type::fun(alpha, kO);
  Type it = Type::fun(qt, alpha);
  Term q = var("Q", qt), i = var("I", it);
  Term y = var("Y", alpha), z = var("Z", alpha);
  Term unique = mk_forall("Z", alpha, mk_implies(Term::app(q, z), leibniz_eq(y, z, alpha)));
  Term exists1 = mk_exists("Y", alpha, mk_and(Term::app(q, y), unique));
  Term body = mk_implies(exists1, Term::app(q, Term::app(i, q)));
  Term a = mk_exists("I", it, mk_forall("Q", qt, body));
  CutStrongSchema s = make(SchemaKind::Description, "description", a, 25);
  s.alpha = alpha;
  return s;
}

std::vector<CutStrongSchema> builtin_schemas() {
  Term m = Term::constant("m", kI), n = Term::constant("n", kI);
  return {trivial_schema(),      tautology_schema(),         leibniz_schema(m, n, kI),
          comprehension_schema(), bool_ext_schema(),          func_ext_schema(kI, kI),
          andrews_schema(m, n, kI), induction_schema(),       choice_schema(kI),
          description_schema(kI)};
}

std::vector<CutStrongSchema> find_realizers(const Sequent& delta) {
  std::vector<CutStrongSchema> out;
  const std::vector<CutStrongSchema> fixed = {trivial_schema(), tautology_schema(),
                                              comprehension_schema(), bool_ext_schema(),
                                              induction_schema()};
  for (const Term& f : delta) {
    auto a = match_not(f);
    if (!a) continue;
    for (const auto& s : fixed) {
      if (s.realizer == *a) out.push_back(s);
    }
    if (auto l = match_leibniz(*a)) out.push_back(leibniz_schema(l->lhs, l->rhs, l->type));
    if (auto l = match_andrews(*a)) out.push_back(andrews_schema(l->lhs, l->rhs, l->type));
    if (auto pred = match_pi(*a); pred && pred->type().domain().is_fun()) {
      const Type& ft = pred->type().domain();
      if (*a == func_ext_axiom(ft.domain(), ft.codomain())) {
        out.push_back(func_ext_schema(ft.domain(), ft.codomain()));
      }
    }
    if (auto inner = match_not(*a)) {
      auto pred = match_pi(*inner);
      if (pred && pred->type().domain().is_fun()) {
        const Type& alpha = pred->type().domain().codomain();
        for (auto s : {choice_schema(alpha), description_schema(alpha)}) {
          if (s.realizer == *a) out.push_back(s);
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CutStrongSchema& x, const CutStrongSchema& y) { return x.k < y.k; });
  return out;
}

Derivation build_leib_refl(const Sequent& delta, const Term& b, const Type& alpha) {
  if (b.type() != alpha) throw TypeError("build_leib_refl: term is not of the given type");
  Term bn = beta_normalize(b);
  FreshParams fresh;
  fresh.used = delta.param_names();
  fresh.avoid(bn);
  Term p = fresh.next(Type::fun(alpha, kO));
  Term eq = leibniz_eq(bn, bn, alpha);
  Term body = body_at(eq, p);
  auto [l, r] = split_or(body);
  return Derivation::pi_r(delta.with(eq), p,
                          Derivation::or_r(delta.with(body), Derivation::init(delta.with(l).with(r))));
}

Derivation build_iff_refl(const Sequent& delta, const Term& a) {
  if (a.type() != kO || !a.is_closed()) throw TypeError("build_iff_refl: not a sentence");
  Term an = beta_normalize(a);
  if (!is_atomic(an)) throw TransformError("NotAtomic", "build_iff_refl needs an atomic formula");
  Term em = mk_or(mk_not(an), an);
  Derivation branch = Derivation::neg(
      delta.with(mk_not(mk_not(em))),
      Derivation::or_r(delta.with(em), Derivation::init(delta.with(mk_not(an)).with(an))));
  return Derivation::or_l(delta.with(mk_iff(an, an)), branch, branch);
}

Derivation realize(const CutStrongSchema& s, const Sequent& delta, const Term& c,
                   const Derivation& d_c, const Derivation& d_nc) {
  if (!Sequent{c}.well_formed()) {
    throw TransformError("ShapeMismatch", "C must be closed, beta-normal and of type o");
  }
  if (!delta.well_formed()) throw TransformError("ShapeMismatch", "context is not well-formed");
  if (d_c.conclusion() != delta.with(c)) {
    throw TransformError("ShapeMismatch", "D_C must conclude exactly the context with C");
  }
  if (d_nc.conclusion() != delta.with(mk_not(c))) {
    throw TransformError("ShapeMismatch", "D_notC must conclude exactly the context with ~C");
  }

  const Term& a = s.realizer;
  const Term na = mk_not(a);
  auto S = [&](const Term& f) { return delta.with(f); };
  FreshParams fresh;
  fresh.used = delta.param_names();
  fresh.avoid(c);
  fresh.avoid(a);
  auto leib_on = [&](const Term& eq) {
    auto parts = match_leibniz(eq);
    if (!parts) throw TransformError("ShapeMismatch", "expected a Leibniz equation");
    return realize(leibniz_schema(parts->lhs, parts->rhs, parts->type), delta, c, d_c, d_nc);
  };

  switch (s.kind) {
    case SchemaKind::Trivial:
    case SchemaKind::Tautology:
    case SchemaKind::Leibniz: {
      Term w = s.kind == SchemaKind::Leibniz   ? Term::lam_raw("X", s.alpha, c)
               : s.kind == SchemaKind::Trivial ? mk_or(mk_not(c), c)
                                               : c;
      return Derivation::pi_l(S(na), w, excluded_middle(delta, c, d_c, d_nc));
    }

    case SchemaKind::Andrews: {
      Term w = Term::lam_raw("X", s.alpha, Term::lam_raw("Y", s.alpha, c));
      Term f = mk_not(body_at(a, w));  // ~(~Pi(lam Z. C) | C)
      Term pz = strip_not(split_or(strip_not(f)).first);
      Term z = fresh.next(s.alpha);
      Derivation left = Derivation::neg(S(mk_not(mk_not(pz))), Derivation::pi_r(S(pz), z, d_c));
      return Derivation::pi_l(S(na), w, Derivation::or_l(S(f), left, d_nc));
    }

    case SchemaKind::Choice: {
      Term p0 = strip_not(a);
      Term i = fresh.next(Type::fun(Type::fun(s.alpha, kO), s.alpha));
      Term f1 = body_at(p0, i);
      Term q = Term::lam_raw("X", s.alpha, c);
      Term f2 = mk_not(body_at(strip_not(f1), q));  // ~(~~Pi(lam X. ~C) | C)
      Term l = split_or(strip_not(f2)).first;
      Term g = strip_not(l);  // ~Pi(lam X. ~C)
      Term w = Term::app(i, q);
      Term nnc = mk_not(body_at(strip_not(g), w));
      Derivation left = Derivation::neg(
          S(mk_not(l)), Derivation::pi_l(S(g), w, Derivation::neg(S(nnc), d_c)));
      return Derivation::neg(
          S(na), Derivation::pi_r(S(p0), i,
                                  Derivation::pi_l(S(f1), q, Derivation::or_l(S(f2), left, d_nc))));
    }

    case SchemaKind::Description: {
      Term p0 = strip_not(a);
      Term i = fresh.next(Type::fun(Type::fun(s.alpha, kO), s.alpha));
      Term wa = fresh.next(s.alpha);
      Term f1 = body_at(p0, i);
      Term q = Term::lam("X", s.alpha, leibniz_eq(wa, Term::var("X", s.alpha), s.alpha));
      Term f2 = mk_not(body_at(strip_not(f1), q));
      auto [l, r] = split_or(strip_not(f2));
      Derivation right = leib_on(r);

      // ~l = ~~~Pi(lam Y. ...): pick Y := a.
      Term g = strip_not(l);
      Term h = mk_not(body_at(strip_not(g), wa));
      Term m = strip_not(strip_not(h));  // ~(~(a == a) | ~R a)
      auto [l2, r2] = split_or(strip_not(m));
      Derivation ll =
          Derivation::neg(S(mk_not(l2)), build_leib_refl(delta, wa, s.alpha));

      // R a = Pi(lam Z. ~(a == Z) | a == Z)
      Term ra = strip_not(r2);
      Term z = fresh.next(s.alpha);
      Term e = body_at(ra, z);
      auto [el, er] = split_or(e);
      Term p = fresh.next(Type::fun(s.alpha, kO));
      Term pe = body_at(er, p);  // ~p a | p z
      auto [npa, pz] = split_or(pe);
      Term pa = strip_not(npa);
      Sequent base = delta.with(npa).with(pz);
      Term inst = mk_not(body_at(strip_not(el), p));
      Derivation orl = Derivation::or_l(
          base.with(inst),
          Derivation::neg(base.with(mk_not(npa)), Derivation::init(base.with(pa))),
          Derivation::init(base.with(mk_not(pz))));
      Derivation lr = Derivation::neg(
          S(mk_not(r2)),
          Derivation::pi_r(
              S(ra), z,
              Derivation::or_r(
                  S(e), Derivation::pi_r(
                            S(el).with(er), p,
                            Derivation::or_r(S(el).with(pe),
                                             Derivation::pi_l(base.with(el), p, orl))))));

      Derivation left = Derivation::neg(
          S(mk_not(l)),
          Derivation::pi_l(S(g), wa,
                           Derivation::neg(S(h), Derivation::or_l(S(m), ll, lr))));
      return Derivation::neg(
          S(na), Derivation::pi_r(S(p0), i,
                                  Derivation::pi_l(S(f1), q, Derivation::or_l(S(f2), left, right))));
    }

    case SchemaKind::Induction: {
      Term wa = fresh.next(kO);
      Term k = leibniz_eq(wa, wa, kO);
      Term w = Term::lam_raw("X", kI, k);
      Term f1 = mk_not(body_at(a, w));
      auto [l, r] = split_or(strip_not(f1));
      // right: ~Pi(lam X. K), instantiate with zero
      Term nk = mk_not(body_at(r, induction_zero()));
      Derivation right = Derivation::pi_l(S(mk_not(r)), induction_zero(), leib_on(strip_not(nk)));

      Term x = strip_not(strip_not(l));  // ~K | ~Pi(lam X. ~K | K)
      auto [l2, r2] = split_or(x);
      Derivation ll = Derivation::neg(S(mk_not(l2)), build_leib_refl(delta, wa, kO));
      Term pr = strip_not(r2);
      Term xv = fresh.next(kI);
      Term e = body_at(pr, xv);
      Derivation lr = Derivation::neg(
          S(mk_not(r2)),
          Derivation::pi_r(S(pr), xv,
                           Derivation::or_r(S(e), build_leib_refl(delta.with(mk_not(k)), wa, kO))));
      Derivation left = Derivation::neg(S(mk_not(l)), Derivation::or_l(S(mk_not(x)), ll, lr));
      return Derivation::pi_l(S(na), w, Derivation::or_l(S(f1), left, right));
    }

    case SchemaKind::BoolExt: {
      Term wa = fresh.next(kO);
      Term f1 = mk_not(body_at(a, wa));
      Term f2 = mk_not(body_at(strip_not(f1), wa));  // ~(~(a <=> a) | a == a)
      auto [l, r] = split_or(strip_not(f2));
      Derivation left = Derivation::neg(S(mk_not(l)), build_iff_refl(delta, wa));
      return Derivation::pi_l(
          S(na), wa,
          Derivation::pi_l(S(f1), wa, Derivation::or_l(S(f2), left, leib_on(r))));
    }

    case SchemaKind::FuncExt: {
      Term f = fresh.next(Type::fun(s.alpha, s.beta));
      Term f1 = mk_not(body_at(a, f));
      Term f2 = mk_not(body_at(strip_not(f1), f));
      auto [l, r] = split_or(strip_not(f2));
      Term pl = strip_not(l);  // Pi(lam X. f X == f X)
      Term xv = fresh.next(s.alpha);
      Derivation left = Derivation::neg(
          S(mk_not(l)),
          Derivation::pi_r(S(pl), xv, build_leib_refl(delta, Term::app(f, xv), s.beta)));
      return Derivation::pi_l(
          S(na), f,
          Derivation::pi_l(S(f1), f, Derivation::or_l(S(f2), left, leib_on(r))));
    }

    case SchemaKind::ComprehensionI: {
      Term p0 = strip_not(a);
      Term p = fresh.next(Type::fun(kI, kO));
      Term wa = fresh.next(kI);
      Term f1 = body_at(p0, p);
      Term f2 = mk_not(body_at(strip_not(f1), wa));  // ~(pa <=> a == a)
      Term y = strip_not(strip_not(f2));
      auto [u, v] = split_or(y);
      auto [v1, v2] = split_or(strip_not(v));  // ~(a == a), p a
      auto [u1, u2] = split_or(strip_not(u));  // ~p a, a == a
      Sequent su = delta.with(u);
      Derivation ll = Derivation::neg(su.with(mk_not(v1)), build_leib_refl(su, wa, kI));
      Sequent sn = delta.with(mk_not(v2));
      Derivation m1 = Derivation::neg(sn.with(mk_not(u1)), Derivation::init(sn.with(v2)));
      Derivation m2 = weaken(leib_on(u2), Sequent{mk_not(v2)});
      Derivation lr = Derivation::or_l(sn.with(u), m1, m2);
      Derivation orr = Derivation::or_r(S(y), Derivation::or_l(su.with(v), ll, lr));
      return Derivation::neg(
          S(na), Derivation::pi_r(S(p0), p,
                                  Derivation::pi_l(S(f1), wa, Derivation::neg(S(f2), orr))));
    }
  }
  throw TransformError("ShapeMismatch", "unknown schema");
}

}  // namespace cutsim
