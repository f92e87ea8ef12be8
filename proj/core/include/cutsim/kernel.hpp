#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cutsim/term.hpp"

namespace cutsim {

// Adds d to every de Bruijn index >= cutoff.
Term shift(const Term& t, int d, std::uint32_t cutoff = 0);

// Replaces loose index 0 of `body` by `arg` and lowers the other loose
// indices by one (the contraction step of (lam. body) arg).
Term instantiate(const Term& body, const Term& arg);

// Turns occurrences of the free variable name:type into loose index 0 of the
// result (shifting existing loose indices up). Inverse of instantiate.
Term abstract_var(const Term& t, const std::string& name, const Type& type);

// Same, for occurrences of a constant (used to build eigenvariable binders).
Term abstract_const(const Term& t, const std::string& name, const Type& type);

// Replaces every occurrence of the closed subterm `sub` by a fresh loose
// index 0. Returns nullopt if `sub` does not occur.
std::optional<Term> abstract_subterm(const Term& t, const Term& sub);

// Capture-avoiding substitution of `a` for the free variable name:type.
Term substitute(const Term& body, const std::string& name, const Type& type, const Term& a);
// Capture-avoiding substitution of `a` for a constant.
Term substitute_const(const Term& body, const std::string& name, const Type& type, const Term& a);

Term beta_normalize(const Term& t);
bool is_beta_normal(const Term& t);
// beta-normalizes, then eta-contracts bottom-up.
Term beta_eta_normalize(const Term& t);

// Head symbol and arguments of an application spine: h a1 ... an.
Term head_of(const Term& t);
std::vector<Term> args_of(const Term& t);

// Free variables, keyed by name.
std::map<std::string, Type> free_vars(const Term& t);
// Non-logical constants, keyed by name.
std::map<std::string, Type> params_of(const Term& t);
void collect_params(const Term& t, std::map<std::string, Type>& out);

// Renames non-logical constants. Unmapped names are kept.
Term rename_params(const Term& t, const std::map<std::string, std::string>& theta);

// Preorder traversal over all subterms, with the number of enclosing binders.
void for_each_subterm(const Term& t, const std::function<void(const Term&, std::uint32_t)>& f);

// Lowest-k name "<mangle>_<k>" not contained in `avoid`.
std::string fresh_name(const Type& type, const std::set<std::string>& avoid);
template <typename Map>
std::string fresh_name(const Type& type, const Map& avoid) {
  std::set<std::string> keys;
  for (const auto& kv : avoid) keys.insert(kv.first);
  return fresh_name(type, keys);
}

}  // namespace cutsim
