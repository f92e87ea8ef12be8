#pragma once

#include <map>
#include <string>

#include "cutsim/derivation.hpp"
#include "cutsim/schemas.hpp"
#include "cutsim/sequent.hpp"

namespace cutsim {

// Type-preserving map on parameter names; unmapped names are fixed.
using ParamRenaming = std::map<std::string, std::string>;

Sequent rename_sequent(const Sequent& s, const ParamRenaming& theta);

// Generalized weakening with renaming: given a checking derivation of Gamma and
// a sequent `target` of well-formed sentences with theta(Gamma) a subset of
// target, returns a checking derivation of `target` with the same rules at the
// same positions (weak nodes are dropped). The formulae of target outside
// theta(Gamma), and every member of `sticky` (a subset of target), are added to
// all premises. Eigen-parameters are kept where possible and otherwise
// replaced by the lowest fresh name.
Derivation transport(const Derivation& d, const ParamRenaming& theta, const Sequent& target,
                     const Sequent& sticky = {});

// Derivation of conclusion(d) + extra with the same step count.
// Throws TransformError("InvalidExtra") if extra has open, ill-typed or
// non-beta-normal members.
Derivation weaken(const Derivation& d, const Sequent& extra);
Derivation weaken_to(const Derivation& d, const Sequent& target);

// Derivation of theta(conclusion(d)) with the same step count. Parameters of
// a cutA realizer must not be renamed.
Derivation rename_params(const Derivation& d, const ParamRenaming& theta);

// d concludes Delta * ~~a; returns a derivation of (Delta minus ~~a) * a
// with at most as many steps. Throws TransformError("NotPresent") when ~~a
// is not in the conclusion.
Derivation neg_invert(const Derivation& d, const Term& a);

// Turns every cut of a GbCut derivation into a cutA for the realizer of `s`,
// keeping the step count. Every sequent of the output contains ~A.
// Throws TransformError("NotCutStrong") if ~A is not in the conclusion.
Derivation simulate_cut_rule(const Derivation& d, const CutStrongSchema& s);

// Replaces every cutA node by the realizer derivation of `s`; the result is
// cut-free with at most d + n*k steps for n cutA nodes.
// Throws TransformError("SchemaMismatch") if a cutA node lacks ~A.
Derivation eliminate_cut_a(const Derivation& d, const CutStrongSchema& s);

// Replaces every cut of a GbE + cut derivation by extFAx at i -> i followed by
// the functional extensionality realizer: at most 12 extra steps per cut.
Derivation eliminate_cut_in_ge(const Derivation& d);

}  // namespace cutsim
