#include "cutsim/derivation.hpp"

#include <array>
#include <utility>

namespace cutsim {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 16> kRuleNames{{
    {Rule::Init, "init"},
    {Rule::Neg, "neg"},
    {Rule::NegInv, "negInv"},
    {Rule::Weak, "weak"},
    {Rule::OrL, "orL"},
    {Rule::OrR, "orR"},
    {Rule::PiL, "piL"},
    {Rule::PiR, "piR"},
    {Rule::Cut, "cut"},
    {Rule::CutA, "cutA"},
    {Rule::ExtFAx, "extFAx"},
    {Rule::ExtBAx, "extBAx"},
    {Rule::PropF, "propF"},
    {Rule::PropB, "propB"},
    {Rule::InitLeib, "initLeib"},
    {Rule::Dec, "dec"},
}};

bool same_term(const Term& a, const Term& b) {
  if (a.valid() != b.valid()) return false;
  return !a.valid() || a == b;
}

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (name == n) return rule;
  }
  return std::nullopt;
}

Derivation::Derivation(Rule rule, RuleParams params, Sequent conclusion,
                       std::vector<Derivation> premises) {
  std::size_t steps = 1;
  for (const Derivation& p : premises) steps += p.step_count();
  node_ = std::make_shared<const Node>(
      Node{rule, std::move(params), std::move(conclusion), std::move(premises), steps});
}

Derivation Derivation::init(const Sequent& concl) { return Derivation(Rule::Init, {}, concl, {}); }

Derivation Derivation::neg(const Sequent& concl, Derivation premise) {
  return Derivation(Rule::Neg, {}, concl, {std::move(premise)});
}

Derivation Derivation::or_l(const Sequent& concl, Derivation left, Derivation right) {
  return Derivation(Rule::OrL, {}, concl, {std::move(left), std::move(right)});
}

Derivation Derivation::or_r(const Sequent& concl, Derivation premise) {
  return Derivation(Rule::OrR, {}, concl, {std::move(premise)});
}

Derivation Derivation::pi_l(const Sequent& concl, const Term& witness, Derivation premise) {
  RuleParams p;
  p.term = witness;
  return Derivation(Rule::PiL, p, concl, {std::move(premise)});
}

Derivation Derivation::pi_r(const Sequent& concl, const Term& eigen, Derivation premise) {
  RuleParams p;
  p.eigen = eigen;
  return Derivation(Rule::PiR, p, concl, {std::move(premise)});
}

Derivation Derivation::cut(const Sequent& concl, const Term& formula, Derivation pos,
                           Derivation neg) {
  RuleParams p;
  p.term = formula;
  return Derivation(Rule::Cut, p, concl, {std::move(pos), std::move(neg)});
}

Derivation Derivation::cut_a(const Sequent& concl, const Term& formula, Derivation pos,
                             Derivation neg) {
  RuleParams p;
  p.term = formula;
  return Derivation(Rule::CutA, p, concl, {std::move(pos), std::move(neg)});
}

std::size_t Derivation::count_rule(Rule r) const {
  std::size_t n = rule() == r ? 1 : 0;
  for (const Derivation& p : premises()) n += p.count_rule(r);
  return n;
}

Derivation Derivation::with_conclusion(Sequent s) const {
  return Derivation(rule(), params(), std::move(s), premises());
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  const RuleParams& pa = a.params();
  const RuleParams& pb = b.params();
  if (a.rule() != b.rule() || a.step_count() != b.step_count() ||
      a.conclusion() != b.conclusion() || !same_term(pa.term, pb.term) ||
      !same_term(pa.eigen, pb.eigen) || pa.n != pb.n || pa.a != pb.a || pa.b != pb.b) {
    return false;
  }
  return a.premises() == b.premises();
}

}  // namespace cutsim
