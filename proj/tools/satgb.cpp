#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satgb/satgb.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitRefused = 3;
constexpr int kExitTimeout = 4;

satgb::ProblemSpec loadProblem(const std::string& source) {
  const std::string cyclic = "cyclic:";
  if (source.rfind(cyclic, 0) == 0) return satgb::generateCyclic(std::stoi(source.substr(cyclic.size())));
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot read " + source);
  std::stringstream buf;
  buf << in.rdbuf();
  satgb::ProblemSpec spec = satgb::parseSystem(buf.str());
  auto slash = source.find_last_of('/');
  spec.name = source.substr(slash == std::string::npos ? 0 : slash + 1);
  return spec;
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::chrono::steady_clock::time_point deadlineAfter(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of modules by self-saturating Buchberger algorithms"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute a reduced Groebner basis of an input system");
  std::string input;
  std::string strategyName = "selfsat";
  bool noCoprime = false, noChain = false, stats = false, json = false;
  std::string transcriptPath;
  double budget = 0;
  compute->add_option("file", input, "input system, or cyclic:<k>")->required();
  compute->add_option("--strategy", strategyName, "sugar | homog | selfsat | weaksat:<never|ymultiply|final|fuzz<seed>>");
  compute->add_flag("--no-coprime", noCoprime, "disable the coprime criterion");
  compute->add_flag("--no-chain", noChain, "disable the chain criterion");
  compute->add_flag("--stats", stats, "print run counters");
  compute->add_option("--transcript", transcriptPath, "write the event log to this file");
  compute->add_flag("--json", json, "print JSON");
  compute->add_option("--budget", budget, "time limit in seconds");

  auto* bench = app.add_subcommand("bench", "compare strategies on one problem");
  std::string benchInput;
  std::string strategies = "A,H,S";
  double benchBudget = 0;
  bool benchJson = false;
  unsigned workers = 1;
  bench->add_option("problem", benchInput, "input system, or cyclic:<k>")->required();
  bench->add_option("--strategies", strategies, "comma separated strategy names");
  bench->add_option("--budget", benchBudget, "time limit per strategy in seconds");
  bench->add_flag("--json", benchJson, "print JSON");
  bench->add_option("--workers", workers, "concurrent runs")->check(CLI::PositiveNumber);

  auto* show = app.add_subcommand("show", "print a problem in input syntax");
  std::string showInput;
  show->add_option("problem", showInput, "input system, or cyclic:<k>")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*show) {
      std::cout << satgb::formatSystem(loadProblem(showInput));
      return 0;
    }
    if (*bench) {
      satgb::ProblemSpec spec = loadProblem(benchInput);
      std::vector<satgb::NamedStrategy> list;
      for (const auto& name : splitList(strategies)) list.push_back(satgb::strategyByName(name));
      satgb::BenchReport report = satgb::runBenchmark(spec, list, benchBudget, workers);
      std::cout << satgb::emitReport(report, benchJson ? satgb::ReportFormat::kJson : satgb::ReportFormat::kText);
      return report.consistent ? 0 : 1;
    }

    satgb::ProblemSpec spec = loadProblem(input);
    satgb::NamedStrategy strategy = satgb::strategyByName(strategyName);
    strategy.config.coprime = !noCoprime;
    strategy.config.chain = !noChain;
    strategy.config.recordTranscript = !transcriptPath.empty();
    if (budget > 0) strategy.config.deadline = deadlineAfter(budget);
    satgb::ComputeOutcome out = satgb::computeProblem(spec, strategy);

    if (!transcriptPath.empty()) {
      std::ofstream t(transcriptPath);
      if (!t) throw std::runtime_error("cannot write " + transcriptPath);
      t << out.transcript.str();
    }
    if (json) {
      nlohmann::ordered_json j;
      j["problem"] = spec.name;
      j["strategy"] = strategy.name;
      j["basis"] = out.basis;
      if (stats)
        j["stats"] = {{"gbLen", out.stats.gbLen},
                      {"polyRed", out.stats.polyRed},
                      {"pairsIns", out.stats.pairsIns},
                      {"wallTimeSec", out.stats.wallTime}};
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& b : out.basis) std::cout << b << '\n';
      if (stats)
        std::cerr << "GBLen " << out.stats.gbLen << "  PolyRed " << out.stats.polyRed << "  PairsIns "
                  << out.stats.pairsIns << "  Time " << out.stats.wallTime << "s\n";
    }
    return 0;
  } catch (const satgb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const satgb::RefusedError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const satgb::TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
