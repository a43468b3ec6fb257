#include "uberhom/error.hpp"

namespace uberhom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kMalformedComplex: return "malformed-complex";
    case ErrorCode::kContractViolation: return "contract-violation";
    case ErrorCode::kNotAMatching: return "not-a-matching";
    case ErrorCode::kInvalidEdge: return "invalid-edge";
    case ErrorCode::kUnknownSimplex: return "unknown-simplex";
    case ErrorCode::kNotAdjacent: return "not-adjacent";
    case ErrorCode::kUnsupportedMap: return "unsupported-map";
    case ErrorCode::kNotColoured: return "not-coloured";
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kGuard: return "guard";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Error::Error(ErrorCode code, const std::string& what, std::size_t offset)
    : std::runtime_error(std::string(to_string(code)) + " at offset " + std::to_string(offset) +
                         ": " + what),
      code_(code),
      offset_(offset) {}

}  // namespace uberhom
