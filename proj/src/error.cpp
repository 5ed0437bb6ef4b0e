#include "abcross/error.hpp"

namespace abcross {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ill_defined_hom: return "ill-defined-hom";
    case ErrorKind::domain_mismatch: return "domain-mismatch";
    case ErrorKind::size_exceeded: return "size-exceeded";
    case ErrorKind::not_a_cocycle: return "not-a-cocycle";
    case ErrorKind::invalid_twisting: return "invalid-twisting";
    case ErrorKind::invalid_morphism: return "invalid-morphism";
    case ErrorKind::invalid_functor: return "invalid-functor";
    case ErrorKind::invalid_extension: return "invalid-extension";
    case ErrorKind::base_mismatch: return "base-mismatch";
    case ErrorKind::not_mono: return "not-mono";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::validation_error: return "validation-error";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

}  // namespace abcross
