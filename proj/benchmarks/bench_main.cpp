#include <benchmark/benchmark.h>

#include "cutsim/checker.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"
#include "cutsim/prover.hpp"
#include "cutsim/schemas.hpp"
#include "cutsim/transform.hpp"

using namespace cutsim;

namespace {

// (lam X. q^n X) applied n times to a, normalized.
Term nested_redex(int n) {
  const Type o = Type::o();
  Term q = Term::constant("q", Type::fun(o, o));
  Term body = Term::bound(0, o);
  for (int k = 0; k < n; ++k) body = Term::app(q, body);
  Term f = Term::lam_raw("X", o, body);
  Term t = Term::constant("a", o);
  for (int k = 0; k < n; ++k) t = Term::app(f, t);
  return t;
}

Derivation bool_ext_realized() {
  Term d = Term::constant("d", Type::o());
  Sequent delta{mk_not(bool_ext_axiom()), d, mk_not(d)};
  return realize(bool_ext_schema(), delta, d, Derivation::init(delta.with(d)),
                 Derivation::init(delta.with(mk_not(d))));
}

// n nested cuts on fresh atoms over a context holding ~(m == n @ i).
Derivation cut_chain(int n) {
  Term m = Term::constant("m", Type::i()), nn = Term::constant("n", Type::i());
  Sequent ctx{mk_not(leibniz_eq(m, nn, Type::i())), Term::constant("z", Type::o()),
              mk_not(Term::constant("z", Type::o()))};
  Derivation d = Derivation::init(ctx);
  for (int k = 0; k < n; ++k) {
    Term c = Term::constant("c" + std::to_string(k), Type::o());
    d = Derivation::cut(ctx, c, Derivation::init(ctx.with(c)), Derivation::init(ctx.with(mk_not(c))));
    ctx = ctx.with(Term::constant("w" + std::to_string(k), Type::o()));
    d = weaken(d, ctx);
  }
  return d;
}

}  // namespace

static void BM_BetaNormalize(benchmark::State& state) {
  Term t = nested_redex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(beta_normalize(t));
}
BENCHMARK(BM_BetaNormalize)->Arg(4)->Arg(16)->Arg(64);

static void BM_RealizeBoolExt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bool_ext_realized());
}
BENCHMARK(BM_RealizeBoolExt);

static void BM_CheckDerivation(benchmark::State& state) {
  Derivation d = bool_ext_realized();
  for (auto _ : state) benchmark::DoNotOptimize(check_derivation(d, Calculus::gb()));
}
BENCHMARK(BM_CheckDerivation);

static void BM_SimulateCuts(benchmark::State& state) {
  Derivation d = cut_chain(static_cast<int>(state.range(0)));
  CutStrongSchema s = leibniz_schema(Term::constant("m", Type::i()), Term::constant("n", Type::i()),
                                     Type::i());
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_cut_a(simulate_cut_rule(d, s), s));
}
BENCHMARK(BM_SimulateCuts)->Arg(1)->Arg(8)->Arg(32);

// Minimal-size search on the iterated-definition family, instance n = range(0).
static void BM_ProveIterated(benchmark::State& state) {
  const bool with_cut = state.range(1) != 0;
  auto family = bench_family("iterated-definition");
  std::vector<BenchInstance> one{family.at(static_cast<std::size_t>(state.range(0) - 1))};
  std::size_t size = 0;
  for (auto _ : state) {
    auto rows = run_bench(one, Calculus::gbfb(), with_cut, 12);
    size = rows[0].size.value_or(0);
  }
  state.counters["size"] = static_cast<double>(size);
}
BENCHMARK(BM_ProveIterated)
    ->ArgsProduct({{1, 2, 3, 4, 5}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
