#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutsim/calculus.hpp"
#include "cutsim/derivation.hpp"
#include "cutsim/sequent.hpp"
#include "cutsim/signature.hpp"
#include "cutsim/term.hpp"

namespace cutsim {

class ParseError : public std::runtime_error {
 public:
  enum class Category { Lexical, Syntactic, Typing, Scoping };

  ParseError(Category category, int line, int column, const std::string& message);

  Category category() const { return category_; }
  int line() const { return line_; }
  int column() const { return column_; }

  static const char* category_name(Category c);

 private:
  Category category_;
  int line_;
  int column_;
};

// How identifiers that are neither bound nor declared are treated.
enum class Undeclared {
  Reject,  // scoping error
  Infer,   // declare them as parameters with inferred types (unconstrained parts default to i)
};

Type parse_type(std::string_view text);

// Parsing a term / sequent / derivation may add declarations to `sig` only in
// Undeclared::Infer mode.
Term parse_term(std::string_view text, Signature& sig, Undeclared mode = Undeclared::Reject);
Term parse_term(std::string_view text, const Signature& sig);
// `{ F1, ..., Fn }`; every formula is beta-normalized.
Sequent parse_sequent(std::string_view text, Signature& sig, Undeclared mode = Undeclared::Reject);
Sequent parse_sequent(std::string_view text, const Signature& sig);
// Node conclusions are taken verbatim (not normalized), so the checker sees
// exactly what the file says.
Derivation parse_derivation(std::string_view text, Signature& sig,
                            Undeclared mode = Undeclared::Reject);
Derivation parse_derivation(std::string_view text, const Signature& sig);
// Gb, GbCut, GbCutA(<formula>), GbE, GbECut, GbfbMinus, Gbfb, and <base>Cut.
Calculus parse_calculus(std::string_view text, Signature& sig,
                        Undeclared mode = Undeclared::Reject);

struct NamedSequent {
  std::string name;
  Sequent sequent;
};

struct NamedDerivation {
  std::string name;
  std::optional<Calculus> calculus;
  Derivation derivation;
};

struct Problem {
  Signature signature;
  std::vector<NamedSequent> sequents;
  std::vector<NamedDerivation> derivations;

  const NamedSequent* find_sequent(const std::string& name) const;
};

// const declarations, `seq` blocks and `deriv` blocks; `#` starts a comment.
Problem parse_problem(std::string_view text);

std::string print_type(const Type& t);
std::string print_term(const Term& t);
std::string print_sequent(const Sequent& s);
std::string print_calculus(const Calculus& c);
// Nested S-expression, one node per line.
std::string print_derivation(const Derivation& d);
// A self-contained problem text: const declarations for every parameter
// occurring anywhere in the derivation, followed by the derivation.
std::string print_derivation_problem(const std::string& name, const Derivation& d,
                                     const std::optional<Calculus>& calculus);
std::string print_problem(const Problem& p);

}  // namespace cutsim
