// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cutsim/checker.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"
#include "cutsim/prover.hpp"
#include "cutsim/schemas.hpp"
#include "cutsim/signature.hpp"
#include "cutsim/syntax.hpp"
#include "cutsim/transform.hpp"
#include "support/gen_derivations.hpp"
#include "support/gen_terms.hpp"
#include "support/naive_prover.hpp"
#include "support/ref_reducer.hpp"
#include "support/regression_goals.hpp"

using namespace cutsim;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool checks(const Derivation& d, const Calculus& c) { return !check_derivation(d, c); }

// ---- 1 ----
void step_counts(Outcome& out) {
  Term a = Term::constant("a", Type::o());
  Term b = Term::constant("b", Type::i());
  Derivation iff = build_iff_refl(Sequent{}, a);
  Derivation leib = build_leib_refl(Sequent{}, b, Type::i());
  out.require(iff.step_count() == 7, "iff_refl size");
  out.require(leib.step_count() == 3, "leib_refl size");
  out.require(checks(iff, Calculus::gb()) && checks(leib, Calculus::gb()), "reflexivity derivations check");
  out.note << "iff_refl=" << iff.step_count() << " leib_refl=" << leib.step_count();
}

// ---- 2 ----
void cut_strength(Outcome& out) {
  const std::map<SchemaKind, unsigned> expected = {
      {SchemaKind::Trivial, 3},  {SchemaKind::Tautology, 3},       {SchemaKind::Leibniz, 3},
      {SchemaKind::Andrews, 4},  {SchemaKind::Choice, 7},          {SchemaKind::FuncExt, 11},
      {SchemaKind::BoolExt, 14}, {SchemaKind::ComprehensionI, 16}, {SchemaKind::Induction, 18},
      {SchemaKind::Description, 25}};
  testing::DerivGen gen(4242);
  std::size_t pairs = 0;
  for (const CutStrongSchema& s : builtin_schemas()) {
    const unsigned want = expected.at(s.kind);
    out.require(s.k == want, s.name + " declared k");
    Term na = mk_not(s.realizer);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (int k = 0; k < 200; ++k, ++pairs) {
      testing::CutPremises p = testing::random_cut_premises(gen, na);
      Derivation r = realize(s, p.delta, p.c, p.d_c, p.d_nc);
      std::size_t extra = r.step_count() - p.d_c.step_count() - p.d_nc.step_count();
      lo = std::min(lo, extra);
      hi = std::max(hi, extra);
      out.require(extra == want, s.name + " extra");
      out.require(r.conclusion() == p.delta.with(na), s.name + " conclusion");
      out.require(checks(r, Calculus::gb()), s.name + " checks");
    }
    out.note << s.name << "=" << (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi))
             << " ";
  }
  out.note << "pairs=" << pairs;
}

// ---- 3 ----
void simulation_bound(Outcome& out) {
  CutStrongSchema leib = leibniz_schema(testing::DerivGen::m(), testing::DerivGen::n(), Type::i());
  Sequent delta{mk_not(leib.realizer)};
  testing::DerivGen gen(31337, {true, false});
  int with_cuts = 0, total = 0;
  std::size_t cuts_seen = 0;
  while (with_cuts < 100) {
    Derivation d = gen.gen(delta, gen.uniform(2, 6));
    out.require(checks(d, Calculus::gb_cut()), "generated input checks in GbCut");
    const std::size_t n = d.count_rule(Rule::Cut);
    Derivation res = eliminate_cut_a(simulate_cut_rule(d, leib), leib);
    out.require(res.count_rule(Rule::Cut) == 0 && res.count_rule(Rule::CutA) == 0, "output cut-free");
    out.require(res.step_count() <= d.step_count() + 3 * n, "d + 3n bound");
    out.require(res.conclusion() == d.conclusion(), "same conclusion");
    out.require(checks(res, Calculus::gb()), "output checks in Gb");
    ++total;
    if (n > 0) ++with_cuts;
    cuts_seen += n;
  }
  out.note << "derivations=" << total << " with-cut=" << with_cuts << " cuts=" << cuts_seen;
}

// ---- 4 ----
void zero_admissibility(Outcome& out) {
  testing::DerivGen gen(8080);
  Signature sig = testing::sig();
  Sequent extra = parse_sequent("{a | b, ~(p m), !X:o. X}", sig);
  int inverted = 0, total = 0;
  for (; total < 1000; ++total) {
    Derivation d = gen.gen(Sequent{}, gen.uniform(1, 6));
    Derivation w = weaken(d, extra);
    out.require(w.step_count() == d.step_count(), "weaken keeps size");
    out.require(checks(w, Calculus::gb()), "weakened derivation checks");
    for (const Term& f : d.conclusion()) {
      auto x = match_not(f);
      auto y = x ? match_not(*x) : std::nullopt;
      if (!y) continue;
      Derivation inv = neg_invert(d, *y);
      out.require(inv.step_count() <= d.step_count(), "negInvert does not grow");
      out.require(checks(inv, Calculus::gb()), "inverted derivation checks");
      ++inverted;
    }
  }
  out.note << "derivations=" << total << " inversions=" << inverted;
}

// ---- 5 ----
void ge_admissibility(Outcome& out) {
  testing::DerivGen gen(1212, {true, true});
  int total = 0, with_cuts = 0;
  for (; total < 500; ++total) {
    Derivation d = gen.gen(Sequent{}, gen.uniform(1, 6));
    out.require(checks(d, Calculus::gb_e_cut()), "generated input checks in GbECut");
    const std::size_t n = d.count_rule(Rule::Cut);
    Derivation res = eliminate_cut_in_ge(d);
    out.require(res.count_rule(Rule::Cut) == 0, "output cut-free");
    out.require(res.step_count() <= d.step_count() + 12 * n, "d + 12n bound");
    out.require(checks(res, Calculus::gb_e()), "output checks in GbE");
    if (n > 0) ++with_cuts;
  }
  out.require(with_cuts > 0, "suite contains cuts");
  out.note << "derivations=" << total << " with-cut=" << with_cuts;
}

// ---- 6 ----
void fb_dichotomy(Outcome& out) {
  Sequent g = testing::seq(testing::kFbGoal);
  ApplicabilityReport rep = refute_applicability(g, Calculus::gbfb_minus());
  out.require(rep.empty(), "emptiness certificate in GbfbMinus");
  ProveResult r = prove(g, Calculus::gbfb(), SearchBudget{});
  out.require(r.found() && r.derivation->step_count() == 5, "5-node Gbfb derivation");
  out.require(r.found() && checks(*r.derivation, Calculus::gbfb()), "found derivation checks");
  testing::NaiveProver naive(Calculus::gbfb(), witness_pool(g, SearchBudget{}));
  auto oracle = naive.minimal_size(g, 5);
  out.require(oracle == 5u, "naive enumeration finds 5");
  out.require(naive.rejected == 0, "naive generator consistent with checker");
  out.note << "certificate=" << (rep.empty() ? "empty" : "non-empty")
           << " gbfb=" << (r.found() ? std::to_string(r.derivation->step_count()) : "none")
           << " oracle=" << (oracle ? std::to_string(*oracle) : "none");
}

// ---- 7 ----
void minimality(Outcome& out) {
  int goals = 0, provable = 0;
  for (const testing::RegressionCase& c : testing::regression_suite()) {
    Sequent g = testing::seq(c.goal);
    SearchBudget b;
    b.max_nodes = 6;
    testing::NaiveProver naive(c.calc, witness_pool(g, b));
    auto want = naive.minimal_size(g, 6);
    auto got = minimal_proof_size(g, c.calc, 6);
    out.require(got == want, std::string(c.label) + " " + c.goal);
    out.require(naive.rejected == 0, "naive generator consistent with checker");
    ++goals;
    if (want) ++provable;
  }
  out.note << "goals=" << goals << " provable=" << provable;
}

// ---- 8 ----
void kernel_properties(Outcome& out) {
  constexpr int kTerms = 5000;
  testing::TermGen gen(8);
  int failures = 0;
  for (int k = 0; k < kTerms; ++k) {
    Type ty = gen.small_type(2);
    Term t = gen.term(ty, 5);
    Term n = beta_normalize(t);
    bool ok = testing::count_redexes(n) == 0 && beta_normalize(n) == n;  // idempotence
    Term cur = t;
    int steps = 0;
    for (std::size_t r; ok && (r = testing::count_redexes(cur)) > 0 && steps < 20000; ++steps) {
      std::size_t pick = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(r) - 1));
      bool done = false;
      cur = testing::contract_at(cur, pick, done);
      ok = done && testing::infer(cur) == ty;  // subject reduction
    }
    ok = ok && cur == n;  // strategy independence
    ok = ok && testing::infer(n) == ty;
    Signature sig;
    for (const auto& [name, pty] : params_of(t)) sig.declare(name, pty);
    ok = ok && parse_term(print_term(t), sig) == t && parse_term(print_term(n), sig) == n;
    if (!ok) ++failures;
  }
  out.require(failures == 0, "kernel property");
  out.note << "terms=" << kTerms << " failures=" << failures;
}

// ---- 9 ----
void speedup_family(Outcome& out) {
  auto family = bench_family("iterated-definition");
  auto without = run_bench(family, Calculus::gbfb(), false, 12);
  auto with = run_bench(family, Calculus::gbfb(), true, 12);
  std::string table = format_bench_table(with);
  out.require(table == format_bench_table(run_bench(family, Calculus::gbfb(), true, 12)),
              "bench output deterministic");
  const std::regex line("(instance size expanded|n=[0-9]+ ([0-9]+|-) [0-9]+)");
  std::istringstream lines(table + format_bench_table(without));
  for (std::string l; std::getline(lines, l);) out.require(std::regex_match(l, line), "table line: " + l);

  std::ostringstream sizes;
  for (std::size_t k = 0; k < family.size(); ++k) {
    out.require(without[k].size.has_value() && with[k].size.has_value(), family[k].label + " found");
    sizes << family[k].label << ":" << (without[k].size ? std::to_string(*without[k].size) : "-") << "/"
          << (with[k].size ? std::to_string(*with[k].size) : "-") << " ";
  }
  if (out.pass) {
    for (std::size_t k = 1; k < family.size(); ++k) {
      out.require(*without[k].size > *without[k - 1].size, "cut-free sizes grow");
    }
    // the longest tail of instances on which the cut-assisted size is constant
    std::size_t tail = 1;
    while (tail < with.size() && *with[with.size() - 1 - tail].size == *with.back().size) ++tail;
    out.require(tail >= 3, "cut-assisted size bounded on three instances");
    out.require(*without.back().size > *with.back().size, "gap at the last instance");
    out.note << "bounded-tail=" << tail << " ";
  }
  out.note << "cut-free/with-cut " << sizes.str();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime bound
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "step-count reproduction", 1, step_counts},
      {2, "cut-strength budgets", 30, cut_strength},
      {3, "cut-simulation bound", 60, simulation_bound},
      {4, "0-admissibility", 0, zero_admissibility},
      {5, "12-admissibility in GbE", 0, ge_admissibility},
      {6, "fb goal dichotomy", 5, fb_dichotomy},
      {7, "minimality oracle equivalence", 0, minimality},
      {8, "kernel properties", 0, kernel_properties},
      {9, "cut speed-up family", 0, speedup_family},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0) out.require(secs < c.limit_s, "runtime bound");
    if (!out.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::string note = out.note.str();
    while (!note.empty() && note.back() == ' ') note.pop_back();
    std::cout << "criterion " << c.id << " " << (out.pass ? "PASS" : "FAIL") << " [" << c.name << "] "
              << note << " time=" << time.str() << "s";
    if (c.limit_s > 0) std::cout << " limit=" << c.limit_s << "s";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
