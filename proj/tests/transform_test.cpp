#include "doctest.h"

#include "cutsim/checker.hpp"
#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"
#include "cutsim/schemas.hpp"
#include "cutsim/syntax.hpp"
#include "cutsim/transform.hpp"
#include "support/gen_derivations.hpp"

using namespace cutsim;

namespace {

const Type o = Type::o();
const Type i = Type::i();

Signature sig() {
  Signature s;
  for (const char* n : {"a", "b", "c", "d", "e"}) s.declare(n, o);
  s.declare("m", i);
  s.declare("p", Type::fun(i, o));
  return s;
}

Term T(const char* text) { return parse_term(text, sig()); }
Sequent S(const char* text) { return parse_sequent(text, sig()); }

bool checks(const Derivation& d, const Calculus& c) {
  auto e = check_derivation(d, c);
  if (e) MESSAGE(e->str() << " " << e->detail << "\n" << print_derivation(d));
  return !e;
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TransformError& e) {
    return e.kind();
  }
  return "";
}

// {forall X:o. ~X | X} with eigen e, used for renaming collisions
Derivation excluded_middle_pi(const Sequent& ctx) {
  Term e = T("e");
  Sequent top = ctx.with(mk_not(e)).with(e);
  return Derivation::pi_r(ctx.with(T("!X:o. ~X | X")), e,
                          Derivation::or_r(ctx.with(T("~e | e")), Derivation::init(top)));
}

}  // namespace

TEST_CASE("renaming parameters") {
  Derivation d = excluded_middle_pi(S("{a}"));
  REQUIRE(checks(d, Calculus::gb()));
  CHECK(rename_params(d, {}) == d);

  Derivation init = Derivation::init(S("{p m, ~(p m)}"));
  Signature s2 = sig();
  s2.declare("n", i);
  Derivation r = rename_params(init, {{"m", "n"}});
  CHECK(r.conclusion() == parse_sequent("{p n, ~(p n)}", s2));
  CHECK(r.step_count() == 1);
  CHECK(checks(r, Calculus::gb()));

  // a -> e collides with the eigen-parameter e
  Derivation two = Derivation::pi_r(S("{!X:o. X, a, ~a}"), T("e"), Derivation::init(S("{e, a, ~a}")));
  REQUIRE(checks(two, Calculus::gb()));
  Derivation moved = rename_params(two, {{"a", "e"}});
  CHECK(moved.conclusion() == S("{!X:o. X, e, ~e}"));
  CHECK(moved.params().eigen.name() != "e");
  CHECK(moved.step_count() == 2);
  CHECK(checks(moved, Calculus::gb()));
}

TEST_CASE("weakening") {
  Derivation init = Derivation::init(S("{a, ~a}"));
  Derivation w = weaken(init, S("{b}"));
  CHECK(w.rule() == Rule::Init);
  CHECK(w.conclusion() == S("{a, ~a, b}"));
  CHECK(w.step_count() == 1);

  Derivation iff = build_iff_refl(Sequent{}, T("a"));
  Derivation wi = weaken(iff, S("{b, c | d}"));
  CHECK(wi.step_count() == 7);
  CHECK(checks(wi, Calculus::gb()));

  // the extra formula mentions the eigen-parameter e
  Derivation d = excluded_middle_pi(Sequent{});
  Derivation we = weaken(d, S("{e}"));
  CHECK(we.params().eigen.name() != "e");
  CHECK(we.conclusion() == S("{!X:o. ~X | X, e}"));
  CHECK(checks(we, Calculus::gb()));

  Sequent open(std::vector<Term>{Term::var("x", o)});
  CHECK(kind_of([&] { weaken(init, open); }) == "InvalidExtra");
  Sequent redex(std::vector<Term>{Term::app(Term::lam_raw("x", o, Term::bound(0, o)), T("a"))});
  CHECK(kind_of([&] { weaken(init, redex); }) == "InvalidExtra");
}

TEST_CASE("negation inversion") {
  Term a = T("a");
  // neg with ~~a principal
  Derivation n = Derivation::neg(S("{~~a, ~a}"), Derivation::init(S("{a, ~a}")));
  Derivation inv = neg_invert(n, a);
  CHECK(inv.conclusion() == S("{a, ~a}"));
  CHECK(inv.step_count() + 1 <= n.step_count());

  // ~~a parked through an orL
  Derivation left = Derivation::neg(S("{~~a, ~a, c, ~b}"), Derivation::init(S("{a, ~a, c, ~b}")));
  Derivation right = Derivation::init(S("{~~a, ~a, c, ~c}"));
  Derivation orl = Derivation::or_l(S("{~~a, ~a, c, ~(b | c)}"), left, right);
  REQUIRE(checks(orl, Calculus::gb()));
  REQUIRE(orl.step_count() == 4);
  Derivation inv2 = neg_invert(orl, a);
  CHECK(inv2.rule() == Rule::OrL);
  CHECK(inv2.conclusion() == S("{a, ~a, c, ~(b | c)}"));
  CHECK(inv2.step_count() <= 4);
  CHECK(checks(inv2, Calculus::gb()));

  // init with ~~b as a bystander
  Derivation init = Derivation::init(S("{~~b, a, ~a}"));
  Derivation inv3 = neg_invert(init, T("b"));
  CHECK(inv3.rule() == Rule::Init);
  CHECK(inv3.conclusion() == S("{b, a, ~a}"));

  CHECK(kind_of([&] { neg_invert(init, T("c")); }) == "NotPresent");
}

TEST_CASE("admissibility transformers on generated derivations") {
  testing::DerivGen gen(2024);
  Sequent extra = S("{c | d, ~(p m), !X:o. X}");
  int inverted = 0;
  for (int k = 0; k < 1000; ++k) {
    Derivation d = gen.gen(Sequent{}, gen.uniform(1, 5));
    REQUIRE(checks(d, Calculus::gb()));

    Derivation w = weaken(d, extra);
    CHECK(w.step_count() == d.step_count());
    CHECK(w.conclusion() == d.conclusion().with(extra));
    REQUIRE(checks(w, Calculus::gb()));

    Derivation r = rename_params(d, {{"a", "b"}, {"m", "u0"}});
    CHECK(r.step_count() == d.step_count());
    REQUIRE(checks(r, Calculus::gb()));

    for (const Term& f : d.conclusion()) {
      auto x = match_not(f);
      if (!x) continue;
      auto y = match_not(*x);
      if (!y) continue;
      Derivation inv = neg_invert(d, *y);
      CHECK(inv.step_count() <= d.step_count());
      CHECK(inv.conclusion() == d.conclusion().without(f).with(*y));
      REQUIRE(checks(inv, Calculus::gb()));
      ++inverted;
      break;
    }
  }
  CHECK(inverted > 100);
}

TEST_CASE("cut simulation with the Leibniz realizer") {
  CutStrongSchema leib = leibniz_schema(T("a"), T("b"), o);
  Sequent gamma = S("{~(a == b @ o), c, ~c}");

  Derivation plain = Derivation::init(gamma);
  CHECK(simulate_cut_rule(plain, leib) == plain);
  CHECK(eliminate_cut_a(plain, leib) == plain);

  // 5 nodes, one cut on ~~d
  Derivation pos = Derivation::neg(gamma.with(T("~~d")), Derivation::init(gamma.with(T("d"))));
  Derivation negd = Derivation::neg(gamma.with(T("~~~d")), Derivation::init(gamma.with(T("~d"))));
  Derivation d = Derivation::cut(gamma, T("~~d"), pos, negd);
  REQUIRE(d.step_count() == 5);
  REQUIRE(checks(d, Calculus::gb_cut()));

  Derivation sim = simulate_cut_rule(d, leib);
  CHECK(sim.count_rule(Rule::CutA) == 1);
  CHECK(sim.count_rule(Rule::Cut) == 0);
  CHECK(sim.step_count() == 5);
  CHECK(checks(sim, Calculus::gb_cut_a(leib.realizer)));

  Derivation out = eliminate_cut_a(sim, leib);
  CHECK(out.count_rule(Rule::CutA) == 0);
  CHECK(out.step_count() <= 5 + 3);
  CHECK(out.conclusion() == gamma);
  CHECK(checks(out, Calculus::gb()));

  CHECK(kind_of([&] { simulate_cut_rule(d, leibniz_schema(T("a"), T("c"), o)); }) == "NotCutStrong");
  CHECK(kind_of([&] { eliminate_cut_a(sim, leibniz_schema(T("a"), T("c"), o)); }) == "SchemaMismatch");
}

TEST_CASE("cut simulation renames eigen-parameters that meet the realizer") {
  // ~(a == e) is consumed by piL below two piR nodes with eigen e.
  Term pi = T("!X:o. ~X | X");
  Derivation cut_top = Derivation::cut(S("{c, ~e, e}"), T("b"), Derivation::init(S("{c, ~e, e, b}")),
                                       Derivation::init(S("{c, ~e, e, ~b}")));
  Sequent c_pi{T("c"), pi};
  Derivation left = Derivation::neg(
      S("{~~c}").with(pi),
      Derivation::pi_r(c_pi, T("e"), Derivation::or_r(S("{c, ~e | e}"), cut_top)));
  Derivation right = Derivation::pi_r(
      Sequent{T("~c"), pi}, T("e"),
      Derivation::or_r(S("{~c, ~e | e}"), Derivation::init(S("{~c, ~e, e}"))));
  Derivation orl = Derivation::or_l(Sequent{T("~(~c | c)"), pi}, left, right);
  Sequent root{T("~(a == e @ o)"), pi};
  Derivation d = Derivation::pi_l(root, T("\\z:o. c"), orl);
  REQUIRE(checks(d, Calculus::gb_cut()));
  REQUIRE(d.count_rule(Rule::Cut) == 1);

  CutStrongSchema leib = leibniz_schema(T("a"), T("e"), o);
  Derivation sim = simulate_cut_rule(d, leib);
  CHECK(sim.step_count() == d.step_count());
  CHECK(checks(sim, Calculus::gb_cut_a(leib.realizer)));
  for (const Derivation* n : {&sim.premise(0).premise(0).premise(0), &sim.premise(0).premise(1)}) {
    REQUIRE(n->rule() == Rule::PiR);
    CHECK(n->params().eigen.name() != "e");
  }
  Derivation out = eliminate_cut_a(sim, leib);
  CHECK(out.step_count() <= d.step_count() + 3);
  CHECK(checks(out, Calculus::gb()));
}

TEST_CASE("eliminating cutA with the Boolean extensionality realizer") {
  CutStrongSchema be = bool_ext_schema();
  Sequent gamma = Sequent{mk_not(be.realizer)}.with(S("{c, ~c}"));
  auto cut_on = [&](const Sequent& ctx, const Term& f) {
    return Derivation::cut_a(ctx, f, Derivation::init(ctx.with(f)),
                             Derivation::init(ctx.with(mk_not(f))));
  };
  Derivation two = Derivation::cut_a(gamma, T("a"), cut_on(gamma.with(T("a")), T("b")),
                                     Derivation::init(gamma.with(T("~a"))));
  REQUIRE(checks(two, Calculus::gb_cut_a(be.realizer)));
  REQUIRE(two.count_rule(Rule::CutA) == 2);
  Derivation out = eliminate_cut_a(two, be);
  CHECK(out.count_rule(Rule::CutA) == 0);
  CHECK(out.step_count() <= two.step_count() + 28);
  CHECK(checks(out, Calculus::gb()));
}

TEST_CASE("cut elimination in GbE") {
  testing::DerivGen gen(77, {true, true});
  int seen[4] = {0, 0, 0, 0};
  for (int k = 0; k < 400; ++k) {
    Derivation d = gen.gen(Sequent{}, gen.uniform(1, 5));
    REQUIRE(checks(d, Calculus::gb_e_cut()));
    std::size_t n = d.count_rule(Rule::Cut);
    Derivation out = eliminate_cut_in_ge(d);
    CHECK(out.count_rule(Rule::Cut) == 0);
    CHECK(out.step_count() <= d.step_count() + 12 * n);
    if (n == 0) CHECK(out.step_count() == d.step_count());
    CHECK(out.conclusion() == d.conclusion());
    REQUIRE(checks(out, Calculus::gb_e()));
    ++seen[std::min<std::size_t>(n, 3)];
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[3] > 0);
}
