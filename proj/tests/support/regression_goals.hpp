#pragma once

// Goals shared by the prover tests and the acceptance run.

#include <string>
#include <vector>

#include "cutsim/calculus.hpp"
#include "cutsim/sequent.hpp"
#include "cutsim/signature.hpp"
#include "cutsim/syntax.hpp"

namespace cutsim::testing {

inline Signature sig() {
  Signature s;
  s.declare("a", Type::o());
  s.declare("b", Type::o());
  s.declare("c", Type::i());
  s.declare("m", Type::i());
  s.declare("p", Type::fun(Type::i(), Type::o()));
  s.declare("q", Type::fun(Type::o(), Type::o()));
  s.declare("f", Type::fun(Type::i(), Type::i()));
  return s;
}

inline Sequent seq(const std::string& text) { return parse_sequent(text, sig()); }

inline const char* const kFbGoal = "{~a, ~b, ~(q a), q b}";

struct RegressionCase {
  const char* goal;
  Calculus calc;
  const char* label;
};

// Goals whose minimal size is at most 6, or which have no derivation that small.
inline std::vector<RegressionCase> regression_suite() {
  Calculus gb = Calculus::gb(), cut = Calculus::gb_cut(), fb = Calculus::gbfb();
  return {
      {"{~a, a}", gb, "Gb"},
      {"{a | ~a}", gb, "Gb"},
      {"{~~a, ~a}", gb, "Gb"},
      {"{~(a | b), a, b}", gb, "Gb"},
      {"{(a | b) | ~a}", gb, "Gb"},
      {"{m == m @ i}", gb, "Gb"},
      {"{!X:o. X | ~X}", gb, "Gb"},
      {"{~(!X:i. p X), p c}", gb, "Gb"},
      {"{~(!X:i. p X), p (f c)}", gb, "Gb"},
      {"{~(a == b @ o), ~a, b}", gb, "Gb"},
      {"{~(a == b @ o), ~(q a), q b}", gb, "Gb"},
      {"{a, b}", gb, "Gb"},
      {"{~(a | b), a}", gb, "Gb"},
      {"{~a, a}", cut, "GbCut"},
      {"{a | ~a}", cut, "GbCut"},
      {"{~(a | b), a, b}", cut, "GbCut"},
      {"{a, b}", cut, "GbCut"},
      {kFbGoal, fb, "Gbfb"},
      {"{a == a @ o}", fb, "Gbfb"},
      {"{~a, ~b, a == b @ o}", fb, "Gbfb"},
      {"{~a, b}", fb, "Gbfb"},
      {"{~(p c), p c}", fb, "Gbfb"},
  };
}

}  // namespace cutsim::testing
