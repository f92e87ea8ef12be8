#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cutsim/calculus.hpp"
#include "cutsim/checker.hpp"
#include "cutsim/derivation.hpp"
#include "cutsim/sequent.hpp"

namespace cutsim {

enum class PoolPolicy {
  SubtermClosure,  // closed subterms of goal and seeds, plus lambda-wrappers
  Explicit,        // the seeds only
  PoolPlusFresh,   // SubtermClosure plus one fresh parameter per binder type
};

struct SearchBudget {
  std::size_t max_nodes = 8;
  std::size_t max_depth = 64;
  PoolPolicy policy = PoolPolicy::PoolPlusFresh;
  std::vector<Term> seeds;
  // Keeps the lambda-wrapper part of the pool from swamping the search.
  std::size_t max_pool = 400;
};

struct SearchStats {
  std::size_t expanded = 0;   // calls that generated instances
  std::size_t memo_hits = 0;
  std::size_t pool_size = 0;
};

struct ProveResult {
  std::optional<Derivation> derivation;
  // Largest node bound searched without success (0 if found at bound 1).
  std::size_t exhausted_bound = 0;
  // False when the failure may be an artifact of max_depth.
  bool exhaustive = true;
  SearchStats stats;

  bool found() const { return derivation.has_value(); }
};

// Witnesses and cut formulas offered to the search, in the order tried.
std::vector<Term> witness_pool(const Sequent& goal, const SearchBudget& budget);

// Iterative deepening on node count: the first derivation found has the
// fewest nodes among derivations built from applicable_rule_instances over
// the pool. Deterministic.
ProveResult prove(const Sequent& goal, const Calculus& calc, const SearchBudget& budget);

std::optional<std::size_t> minimal_proof_size(const Sequent& goal, const Calculus& calc,
                                              std::size_t max_nodes,
                                              const SearchBudget& base = {});

struct ApplicabilityReport {
  // Instances of the rules that need no witness pool.
  std::vector<RuleInstance> instances;
  // Some ~Pi formula is present and piL is a rule of the calculus.
  bool pi_l_possible = false;
  bool cut_possible = false;
  bool ext_axiom_possible = false;

  // No rule of the calculus concludes the goal, whatever the pool.
  bool empty() const {
    return instances.empty() && !pi_l_possible && !cut_possible && !ext_axiom_possible;
  }
  // One line per argument, ending in "no rule concludes the goal" when empty.
  std::string certificate() const;
};

ApplicabilityReport refute_applicability(const Sequent& goal, const Calculus& calc);

// Goal families for the cut/no-cut size comparison.
struct BenchInstance {
  std::string label;
  Sequent goal;
  std::vector<Term> seeds;
};

// "iterated-definition": {~a, ~b, ~q^n a, q^n b} for q : o -> o, n = 1..7.
// "pigeonhole": n+1 pigeons in n holes, n = 1..2, as a propositional sequent.
std::vector<std::string> bench_families();
// Throws std::invalid_argument for unknown names.
std::vector<BenchInstance> bench_family(const std::string& name);

struct BenchRow {
  std::string label;
  std::optional<std::size_t> size;  // nullopt: none within max_nodes
  std::size_t expanded = 0;
};

// Minimal sizes over the instance seeds only (PoolPolicy::Explicit); cut
// is switched on or off in a copy of calc.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& family, const Calculus& calc,
                                bool with_cut, std::size_t max_nodes);
// One header line, then `label size expanded` per row; size is `-` when none.
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace cutsim
