#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "unisets/verify.hpp"

namespace unisets::cli {

enum ExitCode : int {
  kVerified = 0,
  kSampledOnly = 1,
  kUsage = 2,
  kVerificationFailed = 3,
  kConstructionError = 4,
};

/// What every subcommand emits. `body` holds the command-specific sections.
struct RunReport {
  std::string command;
  nlohmann::json group = nullptr;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json body = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::object();
  std::optional<Verdict> verdict;
  std::optional<std::uint64_t> seed;
  double wall_time = 0.0;
  int exit_status = kVerified;

  nlohmann::json to_json() const;
};

int exit_status_for(const Verdict& v);

/// bound value, achieved value and their ratio
nlohmann::json bound_comparison(double bound, double achieved, bool guaranteed);

void print_text(std::ostream& out, const RunReport& r);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace unisets::cli
