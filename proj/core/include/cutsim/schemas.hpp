#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutsim/derivation.hpp"
#include "cutsim/sequent.hpp"
#include "cutsim/term.hpp"

namespace cutsim {

enum class SchemaKind {
  Trivial,         // forall P:o. P
  Tautology,       // forall P:o. P => P
  Leibniz,         // M == N @ alpha
  ComprehensionI,  // exists P:i->o. forall X:i. P X <=> X == X @ i
  BoolExt,         // forall A, B:o. (A <=> B) => A == B @ o
  FuncExt,         // forall F, G:alpha->beta. (forall X. F X == G X @ beta) => F == G
  Andrews,         // M === N @ alpha
  Induction,       // forall P:i->o. P zero & (forall X. P X => P (succ X)) => forall X. P X
  Choice,          // exists I:(alpha->o)->alpha. forall Q. (exists X. Q X) => Q (I Q)
  Description,     // exists I. forall Q. (exists1 Y. Q Y) => Q (I Q)
};

// A k-cut-strong formula together with what is needed to rebuild its
// realizer derivation.
struct CutStrongSchema {
  SchemaKind kind;
  std::string name;
  Term realizer;  // A; closed, beta-normal, type o
  unsigned k;
  Term lhs, rhs;  // Leibniz / Andrews instances
  Type alpha, beta;
};

CutStrongSchema trivial_schema();
CutStrongSchema tautology_schema();
CutStrongSchema leibniz_schema(const Term& m, const Term& n, const Type& alpha);
CutStrongSchema comprehension_schema();
CutStrongSchema bool_ext_schema();
CutStrongSchema func_ext_schema(const Type& alpha, const Type& beta);
CutStrongSchema andrews_schema(const Term& m, const Term& n, const Type& alpha);
CutStrongSchema induction_schema();
CutStrongSchema choice_schema(const Type& alpha);
CutStrongSchema description_schema(const Type& alpha);

// The constants of the induction axiom.
Term induction_zero();  // zero : i
Term induction_succ();  // succ : i -> i

// One instance of each schema; the type-indexed ones at i (and i -> i),
// the equations between parameters m, n : i.
std::vector<CutStrongSchema> builtin_schemas();

// Schemas whose negated realizer occurs in `delta`, cheapest first.
std::vector<CutStrongSchema> find_realizers(const Sequent& delta);

// Given D_C concluding delta * c and D_notC concluding delta * ~c, a Gb
// derivation of delta * ~A with exactly k nodes besides the two premise
// derivations. Throws TransformError("ShapeMismatch") otherwise.
Derivation realize(const CutStrongSchema& s, const Sequent& delta, const Term& c,
                   const Derivation& d_c, const Derivation& d_not_c);

// delta * (a <=> a) for atomic a, 7 nodes. Throws TransformError("NotAtomic").
Derivation build_iff_refl(const Sequent& delta, const Term& a);
// delta * (b == b @ alpha), 3 nodes. Throws TypeError if b is not of type alpha.
Derivation build_leib_refl(const Sequent& delta, const Term& b, const Type& alpha);

}  // namespace cutsim
