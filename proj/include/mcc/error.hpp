#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcc {

enum class ErrorCode {
  unknown_vertex,
  duplicate_id,
  non_positive_cell_size,
  empty_range,
  too_far,
  empty_cluster,
  missing_center_rect,
  invalid_spec,
  invalid_argument,
  parse_error,
  io_error,
  empty_input,
  clique_budget_exceeded,
  timeout,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }

  // 1-based input line for parse errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace mcc
