#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aztec {

enum class ErrorCode {
  kInvalidParameter,
  kInvalidDefect,
  kUnsupportedRegion,
  kInvalidMatrix,
  kNonterminatingSeries,
  kSingularParameters,
  kCondensationInapplicable,
  kInvalidOrder,
  kInvalidConfiguration,
  kOutOfScopeConfiguration,
  kInternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kInvalidDefect: return "invalid-defect";
    case ErrorCode::kUnsupportedRegion: return "unsupported-region";
    case ErrorCode::kInvalidMatrix: return "invalid-matrix";
    case ErrorCode::kNonterminatingSeries: return "nonterminating-series";
    case ErrorCode::kSingularParameters: return "singular-parameters";
    case ErrorCode::kCondensationInapplicable: return "condensation-inapplicable";
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kInvalidConfiguration: return "invalid-configuration";
    case ErrorCode::kOutOfScopeConfiguration: return "out-of-scope-configuration";
    case ErrorCode::kInternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace aztec
