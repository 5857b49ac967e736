#include "satgb/strategy.hpp"

#include <random>
#include <sstream>

namespace satgb {

WeakSatHook fuzzPolicy(std::uint64_t seed) {
  return [seed](const WeakSatStepInfo& info) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(info.call), static_cast<std::uint32_t>(info.final)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick(0, 9);
    WeakSatAction action;
    int r = pick(rng);
    if (info.final) {
      if (r < 5) action.kind = WeakSatAction::Kind::kSaturate;
      return action;
    }
    if (r < 2) {
      action.kind = WeakSatAction::Kind::kSaturate;
    } else if (r < 4) {
      action.kind = WeakSatAction::Kind::kMultiplyY;
      std::uniform_int_distribution<int> e(0, 2);
      action.yPower.resize(info.m);
      for (auto& x : action.yPower) x = e(rng);
    }
    return action;
  };
}

StrategyConfig StrategyConfig::sugar() {
  StrategyConfig c;
  c.selection = Selection::kBySugar;
  c.remainderMode = RemainderMode::kPlain;
  return c;
}

StrategyConfig StrategyConfig::homogeneous() {
  StrategyConfig c;
  c.selection = Selection::kByDegree;
  c.remainderMode = RemainderMode::kWeakSat;
  c.weakSatPolicy = WeakSatPolicy::kNever;
  return c;
}

StrategyConfig StrategyConfig::selfSat() {
  StrategyConfig c;
  c.selection = Selection::kBySugar;
  c.remainderMode = RemainderMode::kSelfSat;
  c.weakSatPolicy = WeakSatPolicy::kSaturateFinal;
  return c;
}

StrategyConfig StrategyConfig::weakSat(WeakSatPolicy policy, Selection selection) {
  StrategyConfig c;
  c.selection = selection;
  c.remainderMode = RemainderMode::kWeakSat;
  c.weakSatPolicy = policy;
  return c;
}

StrategyConfig StrategyConfig::fuzzed(std::uint64_t seed) {
  StrategyConfig c = weakSat(WeakSatPolicy::kCustom);
  c.customHook = fuzzPolicy(seed);
  return c;
}

std::string Transcript::str() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string toString(std::span<const Exponent> exps) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? " " : "") << exps[i];
  os << ']';
  return os.str();
}

}  // namespace satgb
