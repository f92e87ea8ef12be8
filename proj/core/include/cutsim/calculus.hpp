#pragma once

#include <optional>
#include <string>

#include "cutsim/derivation.hpp"
#include "cutsim/term.hpp"

namespace cutsim {

enum class BaseCalculus {
  Gb,         // init, neg, orL, orR, piL, piR
  GbE,        // Gb + extFAx + extBAx
  GbfbMinus,  // Gb + propF + propB
  Gbfb,       // GbfbMinus + initLeib + dec
};

struct Calculus {
  BaseCalculus base = BaseCalculus::Gb;
  bool cut = false;
  // When set, cutA with this realizer is a rule.
  std::optional<Term> cut_a_realizer;
  // Admit the admissible rules negInv and weak.
  bool allow_admissible = false;

  static Calculus gb() { return {}; }
  static Calculus gb_cut() { return {BaseCalculus::Gb, true, std::nullopt, false}; }
  static Calculus gb_cut_a(const Term& realizer) {
    return {BaseCalculus::Gb, false, realizer, false};
  }
  static Calculus gb_e() { return {BaseCalculus::GbE, false, std::nullopt, false}; }
  static Calculus gb_e_cut() { return {BaseCalculus::GbE, true, std::nullopt, false}; }
  static Calculus gbfb_minus() { return {BaseCalculus::GbfbMinus, false, std::nullopt, false}; }
  static Calculus gbfb() { return {BaseCalculus::Gbfb, false, std::nullopt, false}; }

  bool allows(Rule r) const;
};

const char* base_name(BaseCalculus b);

}  // namespace cutsim
