#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/fock.hpp"

namespace lrc {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  std::size_t instances = 0;
  double elapsed_seconds = 0;

  /// Pass iff at least one instance was checked and every check is ok.
  bool passed() const;
};

/// How the Fock suites obtain coefficients.
struct TableSource {
  enum class Kind { symbolic, random, file };
  Kind kind = Kind::symbolic;
  std::uint64_t seed = 0;
  std::optional<CoefficientTable> table;  // Kind::file
};

struct SuiteOptions {
  std::string suite;
  std::optional<int> max_n;
  std::optional<int> d;
  TableSource source;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws std::invalid_argument for an unknown
/// suite name or out-of-range limits.
RunReport run_suite(const SuiteOptions& options);

}  // namespace lrc
