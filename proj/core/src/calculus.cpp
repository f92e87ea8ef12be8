#include "cutsim/calculus.hpp"

namespace cutsim {

bool Calculus::allows(Rule r) const {
  switch (r) {
    case Rule::Init:
    case Rule::Neg:
    case Rule::OrL:
    case Rule::OrR:
    case Rule::PiL:
    case Rule::PiR:
      return true;
    case Rule::NegInv:
    case Rule::Weak:
      return allow_admissible;
    case Rule::Cut:
      return cut;
    case Rule::CutA:
      return cut_a_realizer.has_value();
    case Rule::ExtFAx:
    case Rule::ExtBAx:
      return base == BaseCalculus::GbE;
    case Rule::PropF:
    case Rule::PropB:
      return base == BaseCalculus::GbfbMinus || base == BaseCalculus::Gbfb;
    case Rule::InitLeib:
    case Rule::Dec:
      return base == BaseCalculus::Gbfb;
  }
  return false;
}

const char* base_name(BaseCalculus b) {
  switch (b) {
    case BaseCalculus::Gb:
      return "Gb";
    case BaseCalculus::GbE:
      return "GbE";
    case BaseCalculus::GbfbMinus:
      return "GbfbMinus";
    case BaseCalculus::Gbfb:
      return "Gbfb";
  }
  return "?";
}

}  // namespace cutsim
