#include "unisets/error.hpp"

namespace unisets {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_a_group: return "NotAGroup";
    case ErrorCode::overflowing_order: return "OverflowingOrder";
    case ErrorCode::group_mismatch: return "GroupMismatch";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::invalid_series: return "InvalidSeries";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::field_too_large: return "FieldTooLarge";
    case ErrorCode::zero_element: return "ZeroElement";
    case ErrorCode::degree_too_small: return "DegreeTooSmall";
    case ErrorCode::exact_infeasible: return "ExactInfeasible";
    case ErrorCode::retry_budget_exhausted: return "RetryBudgetExhausted";
    case ErrorCode::bad_targets: return "BadTargets";
    case ErrorCode::subgroup_too_small: return "SubgroupTooSmall";
    case ErrorCode::no_valid_index: return "NoValidIndex";
    case ErrorCode::unverified_tuple: return "UnverifiedTuple";
    case ErrorCode::degree_cap_exceeded: return "DegreeCapExceeded";
    case ErrorCode::no_known_series: return "NoKnownSeries";
    case ErrorCode::x_out_of_range: return "XOutOfRange";
    case ErrorCode::translator_not_found: return "TranslatorNotFound";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace unisets
