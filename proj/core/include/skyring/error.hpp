#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skyring {

enum class ErrorCode {
  schema_violation,
  file_not_found,
  validation_failed,
  basis_mismatch,
  not_zero_cycle,
  index_out_of_range,
  unsupported_format,
  syntax_error,
  unknown_symbol,
  wrong_kind_symbol,
  rank_mismatch,
  not_intersecting,
  too_large,
  overflow,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every skyring operation. Syntax and symbol errors
/// carry the byte offset into the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }
  bool has_position() const noexcept { return position_ != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace skyring
