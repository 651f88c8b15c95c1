#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace nilp {

/// Malformed input: bad scalar grammar, unknown basis name, wrong JSON shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch between vectors, matrices, subspaces or algebras.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition or check failed. The certificate is a
/// JSON document sufficient to replay the failing check in isolation.
class CertifiedError : public std::runtime_error {
 public:
  CertifiedError(const std::string& what, nlohmann::json certificate)
      : std::runtime_error(what), certificate_(std::move(certificate)) {}

  const nlohmann::json& certificate() const noexcept { return certificate_; }

 private:
  nlohmann::json certificate_;
};

}  // namespace nilp
