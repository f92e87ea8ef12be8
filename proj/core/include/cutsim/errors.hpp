#pragma once

#include <stdexcept>
#include <string>

namespace cutsim {

// Ill-typed application, abstraction or substitution.
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A derivation transformer or schema constructor received input outside its
// contract. `kind()` names the violated precondition (e.g. "ShapeMismatch").
class TransformError : public std::runtime_error {
 public:
  TransformError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace cutsim
