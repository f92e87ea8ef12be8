#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutsim/calculus.hpp"
#include "cutsim/derivation.hpp"
#include "cutsim/sequent.hpp"

namespace cutsim {

enum class CheckReason {
  RuleNotInCalculus,
  ShapeMismatch,
  EigenvariableViolation,
  NotBetaNormal,
  NotAtomic,
  TypeMismatch,
};

const char* reason_name(CheckReason r);

struct CheckError {
  std::string path;  // "root", "root.0.1", ...
  CheckReason reason;
  std::string detail;

  // "path: reason"
  std::string str() const;
};

// Local conditions of one node; premises are the children's conclusions.
std::optional<CheckError> check_node(const Derivation& node, const Calculus& calc,
                                     const std::string& path = "root");
// Every node, preorder; the first failure is reported.
std::optional<CheckError> check_derivation(const Derivation& d, const Calculus& calc);

inline std::size_t step_count(const Derivation& d) { return d.step_count(); }

struct RuleInstance {
  Rule rule;
  RuleParams params;
  Sequent conclusion;
  std::vector<Sequent> premises;

  friend bool operator==(const RuleInstance& a, const RuleInstance& b);
};

// All instances concluding exactly `goal`. Witnesses for piL, cut formulas and
// extFAx types are drawn from `pool`; piR uses the canonical fresh eigen-parameter.
// For every way of sharing context between conclusion and premises one
// instance is returned.
std::vector<RuleInstance> applicable_rule_instances(const Sequent& goal, const Calculus& calc,
                                                    const std::vector<Term>& pool);
// The instances above that keep every principal formula in their premises.
// Any other instance has premises contained in one of these, so for proof
// search (where weakening is free) they are the only ones that matter.
std::vector<RuleInstance> maximal_rule_instances(const Sequent& goal, const Calculus& calc,
                                                 const std::vector<Term>& pool);

// Principal formulas of a node and, per premise, the side formulas replacing
// them. The realizer of a cutA node is not known here, so every negated
// formula that fits is offered as its principal.
struct NodeShape {
  std::vector<Term> principal;
  std::vector<std::vector<Term>> sides;
};
// Every shape under which the node satisfies its rule's local conditions,
// ignoring calculus membership. Empty for invalid nodes and for weak.
std::vector<NodeShape> analyze_node(const Derivation& node);

// The formula Pi^alpha(lam X. A X == B X @ beta), beta-normalized: premise of propF.
Term prop_f_premise(const Term& a, const Term& b, const Type& alpha, const Type& beta);

}  // namespace cutsim
