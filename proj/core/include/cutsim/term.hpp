#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "cutsim/type.hpp"

namespace cutsim {

// Simply typed lambda terms. Bound variables are de Bruijn indices, so two
// terms that differ only in the names of bound variables are equal under
// operator== (binder names are kept as printing hints only). Free variables
// and constants are named and carry their type.
//
// Every node caches its type, so construction type-checks and type() is O(1).
class Term {
 public:
  enum class Kind { Bound, Free, Const, App, Lam };

  // Reserved names of the logical constants.
  static constexpr const char* kNot = "~";
  static constexpr const char* kOr = "|";
  static constexpr const char* kPi = "Pi";

  Term() = default;  // null handle; only valid() is meaningful

  static Term bound(std::uint32_t index, const Type& type);
  static Term var(const std::string& name, const Type& type);
  static Term constant(const std::string& name, const Type& type);
  // Throws TypeError unless fn : arg.type() -> _.
  static Term app(const Term& fn, const Term& arg);
  static Term app(const Term& fn, std::initializer_list<Term> args);
  static Term app(const Term& fn, const std::vector<Term>& args);
  // `body` refers to the new binder as index 0.
  static Term lam_raw(const std::string& hint, const Type& binder, const Term& body);
  // Abstracts the free variable name:type in body.
  static Term lam(const std::string& name, const Type& type, const Term& body);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_var() const { return kind() == Kind::Free; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }
  // Const whose name is one of the logical constants.
  bool is_logical() const;
  bool is_param() const { return is_const() && !is_logical(); }

  const Type& type() const;
  // Free variable / constant name, or the binder hint of a lambda.
  const std::string& name() const;
  std::uint32_t index() const;
  const Term& fn() const;
  const Term& arg() const;
  const Term& body() const;
  const Type& binder_type() const;

  std::size_t hash() const;
  std::uint32_t size() const;
  // 1 + the largest loose de Bruijn index, or 0 when locally closed.
  std::uint32_t loose_bound() const;
  bool has_free_vars() const;
  bool has_redex() const;
  bool is_closed() const { return loose_bound() == 0 && !has_free_vars(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
  // Structural total order, consistent with operator==.
  friend int compare(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;
  Type type;
  Type binder;
  std::uint32_t index = 0;
  Term left;
  Term right;
  std::size_t hash = 0;
  std::uint32_t size = 1;
  std::uint32_t loose = 0;
  bool has_free = false;
  bool normal = true;  // no beta-redex inside
};

// alpha-equivalence; identical to operator== on this representation.
inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }

}  // namespace cutsim

template <>
struct std::hash<cutsim::Term> {
  std::size_t operator()(const cutsim::Term& t) const { return t.hash(); }
};
