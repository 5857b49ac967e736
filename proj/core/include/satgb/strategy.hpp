#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satgb/grading.hpp"
#include "satgb/power_product.hpp"

namespace satgb {

enum class Selection { kByDegree, kBySugar, kByInsertion };
enum class RemainderMode { kPlain, kWeakSat, kSelfSat };
enum class WeakSatPolicy { kNever, kYMultiplyToReduce, kSaturateFinal, kCustom };
enum class ReductionDepth { kHeadOnly, kFull };

/// What a custom weak-saturation hook sees before each head reduction step,
/// and once more (final = true) on the irreducible remainder.
struct WeakSatStepInfo {
  /// Index of this hook call within the run; calls are numbered from 0.
  std::size_t call = 0;
  bool final = false;
  std::size_t m = 0;
  Degree degree;
  std::vector<Exponent> headY;
};

struct WeakSatAction {
  enum class Kind { kNone, kSaturate, kMultiplyY };
  Kind kind = Kind::kNone;
  /// y-exponents for kMultiplyY (length m).
  std::vector<Exponent> yPower;
};

using WeakSatHook = std::function<WeakSatAction(const WeakSatStepInfo&)>;

/// A hook that randomly skips, saturates or multiplies by small y-powers.
/// Its choices depend only on the seed and the call index.
WeakSatHook fuzzPolicy(std::uint64_t seed);

struct StrategyConfig {
  Selection selection = Selection::kBySugar;
  RemainderMode remainderMode = RemainderMode::kSelfSat;
  WeakSatPolicy weakSatPolicy = WeakSatPolicy::kSaturateFinal;
  WeakSatHook customHook;
  bool coprime = true;
  bool chain = true;
  ReductionDepth depth = ReductionDepth::kFull;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool recordTranscript = false;

  /// A: sugar selection, plain remainders, on the unhomogenized input.
  static StrategyConfig sugar();
  /// H: degree selection, WeakSatRem with the never policy, on homogenized input.
  static StrategyConfig homogeneous();
  /// S: sugar selection, self-saturating remainders.
  static StrategyConfig selfSat();
  static StrategyConfig weakSat(WeakSatPolicy policy, Selection selection = Selection::kBySugar);
  static StrategyConfig fuzzed(std::uint64_t seed);

  /// Whether the final irreducible remainder gets saturated.
  bool saturatesFinal() const {
    return remainderMode == RemainderMode::kSelfSat ||
           (remainderMode == RemainderMode::kWeakSat && weakSatPolicy == WeakSatPolicy::kSaturateFinal);
  }
};

/// Line-oriented event log of a run.
class Transcript {
 public:
  void add(std::string line) { lines_.push_back(std::move(line)); }
  const std::vector<std::string>& lines() const noexcept { return lines_; }
  bool empty() const noexcept { return lines_.empty(); }
  std::string str() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<std::string> lines_;
};

std::string toString(std::span<const Exponent> exps);

}  // namespace satgb
