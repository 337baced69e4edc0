#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unisets {

enum class ErrorCode {
  invalid_argument,
  not_a_group,
  overflowing_order,
  group_mismatch,
  empty_set,
  invalid_series,
  not_prime,
  field_too_large,
  zero_element,
  degree_too_small,
  exact_infeasible,
  retry_budget_exhausted,
  bad_targets,
  subgroup_too_small,
  no_valid_index,
  unverified_tuple,
  degree_cap_exceeded,
  no_known_series,
  x_out_of_range,
  translator_not_found,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so callers
// (and the CLI exit-status mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unisets
