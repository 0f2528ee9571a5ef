#include "fpsloop/error.hpp"

namespace fpsloop {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AssociativityViolation: return "ASSOCIATIVITY_VIOLATION";
    case ErrorCode::GradingViolation: return "GRADING_VIOLATION";
    case ErrorCode::EmptyGenerators: return "EMPTY_GENERATORS";
    case ErrorCode::AlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::TruncationMismatch: return "TRUNCATION_MISMATCH";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::SupportNeedsFreeAlgebra: return "SUPPORT_NEEDS_FREE_ALGEBRA";
    case ErrorCode::KTooLarge: return "K_TOO_LARGE";
    case ErrorCode::EmptyArgs: return "EMPTY_ARGS";
    case ErrorCode::EmptyI: return "EMPTY_I";
    case ErrorCode::BadArity: return "BAD_ARITY";
    case ErrorCode::BadIndex: return "BAD_INDEX";
    case ErrorCode::TruncationTooSmall: return "TRUNCATION_TOO_SMALL";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownSymbol: return "UNKNOWN_SYMBOL";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(code, what + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

}  // namespace fpsloop
