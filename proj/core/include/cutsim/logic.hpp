#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cutsim/term.hpp"

namespace cutsim {

Term not_const();
Term or_const();
// Pi^alpha : (alpha -> o) -> o
Term pi_const(const Type& alpha);

// Core connectives. All throw TypeError on ill-typed arguments.
Term mk_not(const Term& a);
Term mk_or(const Term& a, const Term& b);
// Pi^alpha pred, where pred : alpha -> o.
Term mk_pi(const Term& pred);
// Pi^type (lam name. body); `name` is a free variable of body.
Term mk_forall(const std::string& name, const Type& type, const Term& body);

// Sugar, expanded into core form.
Term mk_and(const Term& a, const Term& b);      // ~(~a | ~b)
Term mk_implies(const Term& a, const Term& b);  // ~a | b
Term mk_iff(const Term& a, const Term& b);      // ~(~(~a | b) | ~(~b | a))
Term mk_exists(const std::string& name, const Type& type, const Term& body);  // ~Pi(lam. ~body)

// Pi^{alpha->o} (lam P. ~(P a) | P b)
Term leibniz_eq(const Term& a, const Term& b, const Type& alpha);
// beta-normal form of Andrews equality applied to a, b:
// Pi^{alpha->alpha->o} (lam Q. ~Pi^alpha (lam Z. Q Z Z) | Q a b)
Term andrews_eq(const Term& a, const Term& b, const Type& alpha);

// Extensionality axioms.
// forall F, G : alpha -> beta. (forall X:alpha. F X == G X @ beta) => F == G @ alpha->beta
Term func_ext_axiom(const Type& alpha, const Type& beta);
// forall A, B : o. (A <=> B) => A == B @ o
Term bool_ext_axiom();

// Destructors on the core shapes; nullopt when the shape does not match.
std::optional<Term> match_not(const Term& t);
std::optional<std::pair<Term, Term>> match_or(const Term& t);
// Returns the predicate argument of Pi.
std::optional<Term> match_pi(const Term& t);

struct LeibnizParts {
  Term lhs;
  Term rhs;
  Type type;
};
std::optional<LeibnizParts> match_leibniz(const Term& t);
std::optional<LeibnizParts> match_andrews(const Term& t);

// True iff the beta-normal form of f (type o) is not headed by a logical constant.
bool is_atomic(const Term& f);

}  // namespace cutsim
