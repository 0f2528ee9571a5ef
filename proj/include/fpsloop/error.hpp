#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpsloop {

enum class ErrorCode {
  AssociativityViolation,
  GradingViolation,
  EmptyGenerators,
  AlgebraMismatch,
  TruncationMismatch,
  BadParams,
  SupportNeedsFreeAlgebra,
  KTooLarge,
  EmptyArgs,
  EmptyI,
  BadArity,
  BadIndex,
  TruncationTooSmall,
  ParseError,
  UnknownSymbol,
  Inconsistent,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based line/column into the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fpsloop
