#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cutsim/sequent.hpp"
#include "cutsim/term.hpp"

namespace cutsim {

enum class Rule {
  Init,
  Neg,
  NegInv,
  Weak,
  OrL,
  OrR,
  PiL,
  PiR,
  Cut,
  CutA,
  ExtFAx,
  ExtBAx,
  PropF,
  PropB,
  InitLeib,
  Dec,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

// Rule parameters; which fields are meaningful depends on the rule.
struct RuleParams {
  Term term;         // piL witness, cut/cutA formula
  Term eigen;        // piR eigen-parameter (a Const)
  unsigned n = 0;    // dec argument count
  Type a, b;         // extFAx types
};

// Immutable derivation tree. Every node carries its concluded sequent.
class Derivation {
 public:
  Derivation(Rule rule, RuleParams params, Sequent conclusion, std::vector<Derivation> premises);

  static Derivation init(const Sequent& concl);
  static Derivation neg(const Sequent& concl, Derivation premise);
  static Derivation or_l(const Sequent& concl, Derivation left, Derivation right);
  static Derivation or_r(const Sequent& concl, Derivation premise);
  static Derivation pi_l(const Sequent& concl, const Term& witness, Derivation premise);
  static Derivation pi_r(const Sequent& concl, const Term& eigen, Derivation premise);
  static Derivation cut(const Sequent& concl, const Term& formula, Derivation pos, Derivation neg);
  static Derivation cut_a(const Sequent& concl, const Term& formula, Derivation pos,
                          Derivation neg);

  Rule rule() const { return node_->rule; }
  const RuleParams& params() const { return node_->params; }
  const Sequent& conclusion() const { return node_->conclusion; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }

  // Number of nodes.
  std::size_t step_count() const { return node_->steps; }
  // Number of nodes with the given rule.
  std::size_t count_rule(Rule r) const;

  // Same node with another conclusion / premises.
  Derivation with_conclusion(Sequent s) const;

  // Structural equality (rule, parameters, conclusions, premises).
  friend bool operator==(const Derivation& a, const Derivation& b);
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

 private:
  struct Node {
    Rule rule;
    RuleParams params;
    Sequent conclusion;
    std::vector<Derivation> premises;
    std::size_t steps;
  };
  std::shared_ptr<const Node> node_;
};

}  // namespace cutsim
