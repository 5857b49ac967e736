#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satgb/engine.hpp"
#include "satgb/problem.hpp"
#include "satgb/strategy.hpp"

namespace satgb {

/// A strategy as run by the tools: a config plus whether the input is
/// homogenized first (false only for A).
struct NamedStrategy {
  std::string name;
  StrategyConfig config;
  bool homogenize = true;
};

/// A | sugar, H | homog, S | selfsat, weaksat:<never|ymultiply|final|fuzz<seed>>.
/// Throws DomainError on anything else.
NamedStrategy strategyByName(const std::string& name);

/// Result of one strategy on one problem.
struct ComputeOutcome {
  /// Reduced sigma-Groebner basis of the input, one string per element.
  std::vector<std::string> basis;
  /// Reduced basis of the run itself (homogenized unless the strategy is A).
  std::vector<std::string> runBasis;
  RunStats stats;
  Transcript transcript;
};

/// Runs one strategy. Throws RefusedError, TimeoutError and the parse-level
/// errors of the components.
ComputeOutcome computeProblem(const ProblemSpec& spec, const NamedStrategy& strategy);

struct BenchRow {
  std::string strategy;
  RunStats stats;
  bool timedOut = false;

  friend bool operator==(const BenchRow& a, const BenchRow& b) {
    return a.strategy == b.strategy && a.timedOut == b.timedOut && a.stats.sameCounters(b.stats) &&
           a.stats.wallTime == b.stats.wallTime;
  }
};

struct BenchReport {
  static constexpr int kVersion = 1;
  int version = kVersion;
  std::string problem;
  std::string field;
  std::string ordering;
  std::vector<BenchRow> rows;
  /// Whether all completed rows produced the same reduced basis.
  bool consistent = true;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// One row per strategy; a run over `budgetSeconds` (if positive) is marked
/// timed out. Up to `workers` runs execute concurrently.
BenchReport runBenchmark(const ProblemSpec& spec, const std::vector<NamedStrategy>& strategies, double budgetSeconds,
                         unsigned workers = 1);

enum class ReportFormat { kText, kJson };

std::string emitReport(const BenchReport& report, ReportFormat format);
/// Inverse of emitReport(r, kJson). Throws DomainError on malformed input.
BenchReport parseReport(const std::string& json);

}  // namespace satgb
