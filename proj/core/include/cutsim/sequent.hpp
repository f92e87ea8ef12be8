#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cutsim/term.hpp"

namespace cutsim {

// A finite set of formulae, kept sorted under the structural term order.
// Adding a member that is already present leaves the sequent unchanged.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<Term> fs);
  explicit Sequent(std::vector<Term> fs);
  // beta-normalizes every member first.
  static Sequent normalized(const std::vector<Term>& fs);

  std::size_t size() const { return fs_.size(); }
  bool empty() const { return fs_.empty(); }
  auto begin() const { return fs_.begin(); }
  auto end() const { return fs_.end(); }
  const std::vector<Term>& formulas() const { return fs_; }

  bool contains(const Term& f) const;
  bool subset_of(const Sequent& other) const;
  Sequent with(const Term& f) const;
  Sequent with(const Sequent& other) const;
  Sequent without(const Term& f) const;
  Sequent without(const Sequent& other) const;

  std::map<std::string, Type> params() const;
  std::set<std::string> param_names() const;

  // Every member is closed, of type o and beta-normal.
  bool well_formed() const;

  friend bool operator==(const Sequent& a, const Sequent& b) { return a.fs_ == b.fs_; }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
  friend bool operator<(const Sequent& a, const Sequent& b);
  std::size_t hash() const;

 private:
  std::vector<Term> fs_;
};

}  // namespace cutsim

template <>
struct std::hash<cutsim::Sequent> {
  std::size_t operator()(const cutsim::Sequent& s) const { return s.hash(); }
};
