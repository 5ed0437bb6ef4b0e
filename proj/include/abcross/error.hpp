#pragma once

#include <stdexcept>
#include <string>

namespace abcross {

enum class ErrorKind {
  ill_defined_hom,
  domain_mismatch,
  size_exceeded,
  not_a_cocycle,
  invalid_twisting,
  invalid_morphism,
  invalid_functor,
  invalid_extension,
  base_mismatch,
  not_mono,
  parse_error,
  validation_error,
  internal_error,
};

const char* error_kind_name(ErrorKind k);

/// All library failures carry a kind so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace abcross
