#include "satgb/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace satgb {

NamedStrategy strategyByName(const std::string& name) {
  if (name == "A" || name == "sugar") return {"A", StrategyConfig::sugar(), false};
  if (name == "H" || name == "homog") return {"H", StrategyConfig::homogeneous(), true};
  if (name == "S" || name == "selfsat") return {"S", StrategyConfig::selfSat(), true};
  const std::string prefix = "weaksat:";
  if (name.rfind(prefix, 0) == 0) {
    std::string policy = name.substr(prefix.size());
    if (policy == "never") return {name, StrategyConfig::weakSat(WeakSatPolicy::kNever), true};
    if (policy == "ymultiply") return {name, StrategyConfig::weakSat(WeakSatPolicy::kYMultiplyToReduce), true};
    if (policy == "final") return {name, StrategyConfig::weakSat(WeakSatPolicy::kSaturateFinal), true};
    if (policy.rfind("fuzz", 0) == 0) {
      std::string digits = policy.substr(4);
      if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
        return {name, StrategyConfig::fuzzed(std::stoull(digits)), true};
    }
  }
  throw DomainError("unknown strategy '" + name + "'");
}

namespace {

template <class F>
std::vector<std::string> strings(const std::vector<ModuleVector<F>>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.toString());
  return out;
}

template <class F>
ComputeOutcome computeWith(const ProblemSpec& spec, const F& field, const NamedStrategy& strategy) {
  auto spaces = makeSpaces(field, spec.context(), spec.ordering);
  auto gens = toVectors<F>(spec, spaces.plain);
  InhomResult<F> r = strategy.homogenize ? computeInhomGB<F>(gens, strategy.config)
                                         : computePlainGB<F>(gens, strategy.config);
  ComputeOutcome out;
  out.basis = strings(r.basis);
  out.runBasis = strings(r.run.reduced);
  out.stats = r.run.stats;
  out.transcript = std::move(r.run.transcript);
  return out;
}

}  // namespace

ComputeOutcome computeProblem(const ProblemSpec& spec, const NamedStrategy& strategy) {
  if (spec.prime) return computeWith(spec, PrimeField(*spec.prime), strategy);
  return computeWith(spec, RationalField{}, strategy);
}

BenchReport runBenchmark(const ProblemSpec& spec, const std::vector<NamedStrategy>& strategies, double budgetSeconds,
                         unsigned workers) {
  if (strategies.empty()) throw DomainError("runBenchmark needs at least one strategy");
  BenchReport report;
  report.problem = spec.name.empty() ? "input" : spec.name;
  report.field = spec.fieldName();
  report.ordering = spec.ordering.toString();
  report.rows.resize(strategies.size());
  std::vector<std::optional<std::vector<std::string>>> bases(strategies.size());

  std::atomic<std::size_t> nextIndex{0};
  auto work = [&] {
    for (std::size_t i = nextIndex++; i < strategies.size(); i = nextIndex++) {
      NamedStrategy s = strategies[i];
      if (budgetSeconds > 0)
        s.config.deadline = std::chrono::steady_clock::now() +
                            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(budgetSeconds));
      BenchRow& row = report.rows[i];
      row.strategy = s.name;
      const auto start = std::chrono::steady_clock::now();
      try {
        ComputeOutcome o = computeProblem(spec, s);
        row.stats = o.stats;
        bases[i] = std::move(o.basis);
      } catch (const TimeoutError&) {
        row.timedOut = true;
        row.stats.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(strategies.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  const std::vector<std::string>* reference = nullptr;
  for (const auto& b : bases) {
    if (!b) continue;
    if (!reference) reference = &*b;
    else if (*b != *reference) report.consistent = false;
  }
  return report;
}

namespace {

std::string formatSeconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << 's';
  return os.str();
}

std::string textReport(const BenchReport& r) {
  std::ostringstream os;
  os << r.problem << "  field " << r.field << "  ordering " << r.ordering << '\n';
  const int label = 10;
  std::size_t width = 10;
  for (const auto& row : r.rows) width = std::max(width, row.strategy.size() + 2);
  const int w = static_cast<int>(width);
  os << std::setw(label) << std::left << "";
  for (const auto& row : r.rows) os << std::setw(w) << std::right << row.strategy;
  os << '\n';
  auto line = [&](const char* name, auto cell) {
    os << std::setw(label) << std::left << name;
    for (const auto& row : r.rows) os << std::setw(w) << std::right << (row.timedOut ? std::string("-") : cell(row));
    os << '\n';
  };
  line("GBLen", [](const BenchRow& row) { return std::to_string(row.stats.gbLen); });
  line("PolyRed", [](const BenchRow& row) { return std::to_string(row.stats.polyRed); });
  line("PairsIns", [](const BenchRow& row) { return std::to_string(row.stats.pairsIns); });
  os << std::setw(label) << std::left << "Time";
  for (const auto& row : r.rows)
    os << std::setw(w) << std::right << (row.timedOut ? std::string("timeout") : formatSeconds(row.stats.wallTime));
  os << '\n';
  os << "bases agree: " << (r.consistent ? "yes" : "NO") << '\n';
  return os.str();
}

}  // namespace

std::string emitReport(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::kText) return textReport(report);
  nlohmann::ordered_json j;
  j["version"] = report.version;
  j["problem"] = report.problem;
  j["field"] = report.field;
  j["ordering"] = report.ordering;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows)
    j["rows"].push_back({{"strategy", row.strategy},
                         {"gbLen", row.stats.gbLen},
                         {"polyRed", row.stats.polyRed},
                         {"pairsIns", row.stats.pairsIns},
                         {"wallTimeSec", row.stats.wallTime},
                         {"timedOut", row.timedOut}});
  j["consistent"] = report.consistent;
  return j.dump(2) + "\n";
}

BenchReport parseReport(const std::string& json) {
  try {
    auto j = nlohmann::json::parse(json);
    BenchReport r;
    r.version = j.at("version").get<int>();
    r.problem = j.at("problem").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.ordering = j.at("ordering").get<std::string>();
    for (const auto& row : j.at("rows")) {
      BenchRow b;
      b.strategy = row.at("strategy").get<std::string>();
      b.stats.gbLen = row.at("gbLen").get<std::size_t>();
      b.stats.polyRed = row.at("polyRed").get<std::size_t>();
      b.stats.pairsIns = row.at("pairsIns").get<std::size_t>();
      b.stats.wallTime = row.at("wallTimeSec").get<double>();
      b.timedOut = row.at("timedOut").get<bool>();
      r.rows.push_back(std::move(b));
    }
    r.consistent = j.value("consistent", true);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace satgb
