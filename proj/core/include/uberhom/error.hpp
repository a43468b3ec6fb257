#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uberhom {

enum class ErrorCode {
  kMalformedInput,
  kMalformedComplex,
  kContractViolation,
  kNotAMatching,
  kInvalidEdge,
  kUnknownSimplex,
  kNotAdjacent,
  kUnsupportedMap,
  kNotColoured,
  kInvalidSpec,
  kParse,
  kGuard,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  Error(ErrorCode code, const std::string& what, std::size_t offset);

  ErrorCode code() const noexcept { return code_; }
  // Byte offset for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace uberhom
