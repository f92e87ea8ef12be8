#pragma once

// Random checking derivations, built from the leaves down without using the
// library's transformers. Contexts are aligned by naive weakening (adding the
// same formulas to every node), which is sound here because eigen-parameters
// get globally unique names that never leave their subtree.

#include <random>
#include <string>
#include <vector>

#include "cutsim/derivation.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"

namespace cutsim::testing {

struct DerivGenOptions {
  bool cuts = false;
  bool ext_axioms = false;
};

class DerivGen {
 public:
  explicit DerivGen(unsigned seed, DerivGenOptions opts = {}) : rng_(seed), opts_(opts) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  static Term a() { return Term::constant("a", Type::o()); }
  static Term b() { return Term::constant("b", Type::o()); }
  static Term c() { return Term::constant("c", Type::o()); }
  static Term m() { return Term::constant("m", Type::i()); }
  static Term n() { return Term::constant("n", Type::i()); }
  static Term p() { return Term::constant("p", Type::fun(Type::i(), Type::o())); }
  static Term q() { return Term::constant("q", Type::fun(Type::o(), Type::o())); }

  Term atom() {
    switch (uniform(0, 6)) {
      case 0: return a();
      case 1: return b();
      case 2: return c();
      case 3: return Term::app(p(), m());
      case 4: return Term::app(p(), n());
      case 5: return Term::app(q(), a());
      default: return Term::app(q(), b());
    }
  }

  // Closed beta-normal formula over the fixed signature.
  Term formula(int depth) {
    if (depth <= 0 || coin(0.3)) return atom();
    switch (uniform(0, 4)) {
      case 0: return mk_not(formula(depth - 1));
      case 1: return mk_or(formula(depth - 1), formula(depth - 1));
      case 2: return quantify(formula(depth - 1));
      case 3: return leibniz_eq(m(), n(), Type::i());
      default: return mk_not(mk_or(formula(depth - 1), atom()));
    }
  }

  // A derivation whose conclusion contains delta.
  Derivation gen(const Sequent& delta, int depth) {
    if (depth <= 0) return leaf(delta);
    int r = uniform(0, opts_.cuts ? 9 : 8);
    if (opts_.ext_axioms && coin(0.08)) return ext_axiom(delta, depth);
    switch (r) {
      case 0: return leaf(delta);
      case 1: return neg(delta, depth);
      case 2:
      case 3: return or_r(delta, depth);
      case 4:
      case 5: return or_l(delta, depth);
      case 6: return pi_l(delta, depth);
      case 7:
      case 8: return pi_r(delta, depth);
      default: return cut(delta, depth);
    }
  }

  static Derivation naive_weaken(const Derivation& d, const Sequent& extra) {
    std::vector<Derivation> kids;
    for (const Derivation& k : d.premises()) kids.push_back(naive_weaken(k, extra));
    return Derivation(d.rule(), d.params(), d.conclusion().with(extra), std::move(kids));
  }

  static Derivation naive_rename(const Derivation& d, const std::map<std::string, std::string>& th) {
    std::vector<Derivation> kids;
    for (const Derivation& k : d.premises()) kids.push_back(naive_rename(k, th));
    RuleParams ps = d.params();
    if (ps.term.valid()) ps.term = rename_params(ps.term, th);
    if (ps.eigen.valid()) ps.eigen = rename_params(ps.eigen, th);
    std::vector<Term> fs;
    for (const Term& f : d.conclusion()) fs.push_back(rename_params(f, th));
    return Derivation(d.rule(), ps, Sequent(std::move(fs)), std::move(kids));
  }

 private:
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[uniform(0, static_cast<int>(v.size()) - 1)];
  }

  Term quantify(const Term& f) {
    if (auto abs = abstract_subterm(f, m()); abs && coin(0.8)) {
      return mk_pi(Term::lam_raw("x", Type::i(), *abs));
    }
    return mk_pi(Term::lam_raw("x", Type::i(), f));
  }

  // A member of d's conclusion, preferring ones outside delta. `keep` is set
  // when the chosen formula belongs to delta and so must stay.
  Term choose(const Derivation& d, const Sequent& delta, bool& keep) {
    std::vector<Term> fresh;
    for (const Term& f : d.conclusion()) {
      if (!delta.contains(f)) fresh.push_back(f);
    }
    if (!fresh.empty()) {
      keep = coin(0.2);
      return pick(fresh);
    }
    keep = true;
    return pick(d.conclusion().formulas());
  }

  Sequent replace(const Sequent& s, const Term& old, bool keep, const Term& nw) {
    return (keep ? s : s.without(old)).with(nw);
  }

  Derivation leaf(const Sequent& delta) {
    Term at = atom();
    return Derivation::init(delta.with(at).with(mk_not(at)));
  }

  Derivation neg(const Sequent& delta, int depth) {
    Derivation d = gen(delta, depth - 1);
    bool keep;
    Term f = choose(d, delta, keep);
    return Derivation::neg(replace(d.conclusion(), f, keep, mk_not(mk_not(f))), d);
  }

  // ensures the chosen formula is a negation, adding a neg node if needed
  Derivation negated(const Sequent& delta, int depth, Term& out) {
    Derivation d = gen(delta, depth - 1);
    bool keep;
    Term f = choose(d, delta, keep);
    if (!match_not(f)) {
      Term nn = mk_not(mk_not(f));
      d = Derivation::neg(replace(d.conclusion(), f, keep, nn), d);
      f = nn;
    }
    out = f;
    return d;
  }

  Derivation or_r(const Sequent& delta, int depth) {
    Term extra = formula(2);
    Derivation d = gen(delta.with(extra), depth - 1);
    bool keep_b;
    Term b = choose(d, delta, keep_b);
    bool keep_a = delta.contains(extra) || coin(0.2);
    Sequent s = d.conclusion();
    if (!keep_a) s = s.without(extra);
    if (!keep_b) s = s.without(b);
    return Derivation::or_r(s.with(mk_or(extra, b)), d);
  }

  Derivation or_l(const Sequent& delta, int depth) {
    Term f1, f2;
    Derivation d1 = negated(delta, depth, f1);
    Derivation d2 = negated(delta, depth, f2);
    Sequent k = d1.conclusion().without(f1).with(d2.conclusion().without(f2)).with(delta);
    Derivation w1 = naive_weaken(d1, k);
    Derivation w2 = naive_weaken(d2, k);
    Term principal = mk_not(mk_or(*match_not(f1), *match_not(f2)));
    return Derivation::or_l(k.with(principal), w1, w2);
  }

  Derivation pi_l(const Sequent& delta, int depth) {
    Term f;
    Derivation d = negated(delta, depth, f);
    bool keep = delta.contains(f) || coin(0.2);
    Term x = *match_not(f);
    Term pred, w;
    auto ps = params_of(x);
    if (!ps.empty() && coin(0.8)) {
      auto it = ps.begin();
      std::advance(it, uniform(0, static_cast<int>(ps.size()) - 1));
      w = Term::constant(it->first, it->second);
      pred = Term::lam_raw("x", w.type(), *abstract_subterm(x, w));
    } else {
      w = coin() ? m() : p();
      pred = Term::lam_raw("x", w.type(), x);
    }
    Sequent s = (keep ? d.conclusion() : d.conclusion().without(f)).with(mk_not(mk_pi(pred)));
    return Derivation::pi_l(s, w, d);
  }

  Derivation pi_r(const Sequent& delta, int depth) {
    Derivation d = gen(delta, depth - 1);
    std::vector<Term> outside;
    for (const Term& f : d.conclusion()) {
      if (!delta.contains(f)) outside.push_back(f);
    }
    std::string u = "u" + std::to_string(next_eigen_++);
    if (outside.empty()) {
      Term f = pick(d.conclusion().formulas());
      Term e = Term::constant(u, Type::i());
      return Derivation::pi_r(d.conclusion().with(mk_pi(Term::lam_raw("x", Type::i(), f))), e, d);
    }
    Term f = pick(outside);
    Sequent rest = d.conclusion().without(f);
    std::vector<std::pair<std::string, Type>> candidates;
    for (const auto& [name, ty] : params_of(f)) {
      if (!rest.param_names().count(name)) candidates.emplace_back(name, ty);
    }
    if (candidates.empty() || coin(0.15)) {
      Term e = Term::constant(u, Type::i());
      return Derivation::pi_r(rest.with(mk_pi(Term::lam_raw("x", Type::i(), f))), e, d);
    }
    auto [name, ty] = pick(candidates);
    Derivation dr = naive_rename(d, {{name, u}});
    Term fr = rename_params(f, {{name, u}});
    Term body = abstract_const(fr, u, ty);
    return Derivation::pi_r(rest.with(mk_pi(Term::lam_raw("x", ty, body))), Term::constant(u, ty), dr);
  }

  Derivation cut(const Sequent& delta, int depth) {
    Term cf = formula(2);
    Derivation d1 = gen(delta.with(cf), depth - 1);
    Derivation d2 = gen(delta.with(mk_not(cf)), depth - 1);
    Sequent k = d1.conclusion().without(cf).with(d2.conclusion().without(mk_not(cf))).with(delta);
    return Derivation::cut(k, cf, naive_weaken(d1, k), naive_weaken(d2, k));
  }

  Derivation ext_axiom(const Sequent& delta, int depth) {
    bool func = coin();
    Term ax = func ? func_ext_axiom(Type::i(), Type::i()) : bool_ext_axiom();
    Term nax = mk_not(ax);
    Derivation d = gen(delta.with(nax), depth - 1);
    Sequent s = delta.contains(nax) ? d.conclusion() : d.conclusion().without(nax);
    RuleParams ps;
    if (func) {
      ps.a = Type::i();
      ps.b = Type::i();
    }
    return Derivation(func ? Rule::ExtFAx : Rule::ExtBAx, ps, s, {d});
  }

  std::mt19937 rng_;
  DerivGenOptions opts_;
  unsigned next_eigen_ = 0;
};

struct CutPremises {
  Sequent delta;
  Term c;
  Derivation d_c, d_nc;
};

// Random checking derivations of delta * C and delta * ~C for a shared delta
// that contains not_a.
inline CutPremises random_cut_premises(DerivGen& gen, const Term& not_a) {
  Sequent base{not_a};
  Derivation d1 = gen.gen(base, gen.uniform(0, 4));
  std::vector<Term> outside;
  for (const Term& f : d1.conclusion()) {
    if (f != not_a) outside.push_back(f);
  }
  Term c = outside[gen.uniform(0, static_cast<int>(outside.size()) - 1)];
  Derivation d2 = gen.gen(d1.conclusion().without(c).with(mk_not(c)), gen.uniform(0, 4));
  Sequent delta = d1.conclusion().without(c).with(d2.conclusion().without(mk_not(c)));
  return {delta, c, DerivGen::naive_weaken(d1, delta), DerivGen::naive_weaken(d2, delta)};
}

}  // namespace cutsim::testing
