#include "lorenz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "lorenz/random.hpp"

namespace lorenz::verify {

Digest& Digest::add(std::uint64_t v) noexcept {
  for (int i = 0; i < 8; ++i) {
    h_ ^= (v >> (8 * i)) & 0xffu;
    h_ *= 1099511628211ull;
  }
  return *this;
}

Digest& Digest::add(double v) noexcept { return add(std::bit_cast<std::uint64_t>(v)); }

Digest& Digest::add(const std::vector<double>& v) noexcept {
  add(static_cast<std::uint64_t>(v.size()));
  for (double x : v) add(x);
  return *this;
}

const Suite* find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SuiteReport run_suite(const Suite& suite, std::uint64_t seed, Scale scale, std::size_t workers) {
  const std::size_t cases = scale == Scale::Full ? suite.full_cases : suite.small_cases;
  std::vector<CaseResult> results(cases);
  std::vector<std::uint64_t> seeds(cases);
  for (std::size_t i = 0; i < cases; ++i) seeds[i] = derive_seed(seed, suite.name, i);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases; i = next++) {
      try {
        results[i] = suite.run_case(seeds[i], scale);
      } catch (const std::exception& e) {
        results[i] = CaseResult{false, 0, "no exception", e.what(), "-"};
      }
    }
  };

  const auto start = std::chrono::steady_clock::now();
  workers = std::max<std::size_t>(1, std::min(workers, cases));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  const auto stop = std::chrono::steady_clock::now();

  SuiteReport report;
  report.suite = suite.name;
  report.cases = cases;
  report.wall_seconds = std::chrono::duration<double>(stop - start).count();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto& r = results[i];
    if (r.ok) continue;
    report.failures.push_back({i, seeds[i], r.digest, r.expected, r.got, r.tolerance});
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ": " << report.cases << " cases, " << report.failures.size()
      << " failures\n";
  for (const auto& f : report.failures) {
    out << "  case " << f.case_index << " seed " << std::hex << f.seed << " digest " << f.digest << std::dec
        << "\n    expected: " << f.expected << "\n    got:      " << f.got
        << "\n    tolerance: " << f.tolerance << "\n";
  }
  return out.str();
}

std::size_t default_workers() {
  if (const char* env = std::getenv("LORENZ_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

}  // namespace lorenz::verify
