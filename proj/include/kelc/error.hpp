#ifndef KELC_ERROR_HPP_
#define KELC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kelc {

enum class ErrorCode {
  kInvalidLength,
  kInvalidLiteral,
  kCannotFold,
  kUndefinedForZero,
  kOutOfRange,
  kInvalidBranch,
  kFormulaError,
  kMultipleMatch,
  kTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kelc

#endif  // KELC_ERROR_HPP_
