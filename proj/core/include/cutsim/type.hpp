#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cutsim {

// Simple types freely generated from o (propositions) and i (individuals)
// by the function arrow. Immutable; copies share structure.
class Type {
 public:
  enum class Kind { O, I, Fun };

  static Type o();
  static Type i();
  static Type fun(const Type& domain, const Type& codomain);
  // a1 -> a2 -> ... -> result
  static Type arrows(const std::vector<Type>& args, const Type& result);

  Type();  // o

  Kind kind() const;
  bool is_o() const { return kind() == Kind::O; }
  bool is_i() const { return kind() == Kind::I; }
  bool is_fun() const { return kind() == Kind::Fun; }
  bool is_base() const { return !is_fun(); }

  // Only valid for function types.
  const Type& domain() const;
  const Type& codomain() const;

  std::size_t hash() const;
  std::string str() const;
  // Prefix-free identifier-safe encoding: o, i, f<dom><cod>.
  std::string mangle() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  std::shared_ptr<const Type> domain;
  std::shared_ptr<const Type> codomain;
  std::size_t hash;
};

inline Type::Kind Type::kind() const { return node_->kind; }
inline std::size_t Type::hash() const { return node_->hash; }

}  // namespace cutsim

template <>
struct std::hash<cutsim::Type> {
  std::size_t operator()(const cutsim::Type& t) const { return t.hash(); }
};
