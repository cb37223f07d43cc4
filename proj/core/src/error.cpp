#include "skyring/error.hpp"

namespace skyring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::schema_violation: return "SchemaViolation";
    case ErrorCode::file_not_found: return "FileNotFound";
    case ErrorCode::validation_failed: return "ValidationFailed";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::not_zero_cycle: return "NotZeroCycle";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::unsupported_format: return "UnsupportedFormat";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_symbol: return "UnknownSymbol";
    case ErrorCode::wrong_kind_symbol: return "WrongKindSymbol";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::not_intersecting: return "NotIntersecting";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace skyring
