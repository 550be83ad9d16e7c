#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lorenz::verify {

enum class Scale { Small, Full };

struct Failure {
  std::size_t case_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t digest = 0;  // FNV-1a over the case inputs
  std::string expected;
  std::string got;
  std::string tolerance;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double wall_seconds = 0.0;  // not part of the formatted report

  bool passed() const noexcept { return failures.empty(); }
};

/// Outcome of one seeded case. `digest` identifies the generated inputs.
struct CaseResult {
  bool ok = true;
  std::uint64_t digest = 0;
  std::string expected;
  std::string got;
  std::string tolerance;
};

using CaseFn = std::function<CaseResult(std::uint64_t case_seed, Scale scale)>;

struct Suite {
  std::string name;
  std::string description;
  std::size_t full_cases = 0;
  std::size_t small_cases = 0;
  CaseFn run_case;
};

/// Registered suites in fixed order.
const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);

/// Runs every case of a suite, sharded over `workers` threads. Case i uses
/// derive_seed(seed, suite name, i); the report is ordered by case index.
SuiteReport run_suite(const Suite& suite, std::uint64_t seed, Scale scale, std::size_t workers);

/// Deterministic text rendering (no timings).
std::string format_report(const SuiteReport& report);

/// Worker count from LORENZ_THREADS, defaulting to hardware concurrency.
std::size_t default_workers();

/// Incremental FNV-1a.
class Digest {
 public:
  Digest& add(std::uint64_t v) noexcept;
  Digest& add(double v) noexcept;
  Digest& add(const std::vector<double>& v) noexcept;
  std::uint64_t value() const noexcept { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

}  // namespace lorenz::verify
