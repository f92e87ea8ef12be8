#include "cutsim/type.hpp"

#include <functional>

namespace cutsim {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type Type::o() {
  static const Type t(std::make_shared<const Node>(Node{Kind::O, nullptr, nullptr, 0x51}));
  return t;
}

Type Type::i() {
  static const Type t(std::make_shared<const Node>(Node{Kind::I, nullptr, nullptr, 0x73}));
  return t;
}

Type Type::fun(const Type& domain, const Type& codomain) {
  std::size_t h = mix(mix(0x1f, domain.hash()), codomain.hash());
  return Type(std::make_shared<const Node>(Node{Kind::Fun, std::make_shared<const Type>(domain),
                                                std::make_shared<const Type>(codomain), h}));
}

Type Type::arrows(const std::vector<Type>& args, const Type& result) {
  Type t = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = fun(*it, t);
  return t;
}

Type::Type() : Type(o()) {}

const Type& Type::domain() const { return *node_->domain; }
const Type& Type::codomain() const { return *node_->codomain; }

std::string Type::str() const {
  switch (kind()) {
    case Kind::O:
      return "o";
    case Kind::I:
      return "i";
    case Kind::Fun: {
      std::string d = domain().str();
      if (domain().is_fun()) d = "(" + d + ")";
      return d + " -> " + codomain().str();
    }
  }
  return "?";
}

std::string Type::mangle() const {
  switch (kind()) {
    case Kind::O:
      return "o";
    case Kind::I:
      return "i";
    case Kind::Fun:
      return "f" + domain().mangle() + codomain().mangle();
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  if (!a.is_fun()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

bool operator<(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (!a.is_fun()) return false;
  if (a.domain() != b.domain()) return a.domain() < b.domain();
  return a.codomain() < b.codomain();
}

}  // namespace cutsim
