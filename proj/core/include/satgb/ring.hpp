#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "satgb/grading.hpp"
#include "satgb/power_product.hpp"

namespace satgb {

/// Ambient data of P^r (plain) or of the graded free module over P-bar
/// (homogenized). The homogenized context carries one homogenizing
/// indeterminate per grading row, stored in the leading exponent slots.
class RingContext {
 public:
  RingContext(std::vector<std::string> xNames, Grading grading, bool homogenized = false,
              std::vector<std::string> yNames = {});

  std::size_t n() const noexcept { return xNames_.size(); }
  /// Number of homogenizing indeterminates present: 0 for the plain ring.
  std::size_t m() const noexcept { return homogenized_ ? grading_.rows() : 0; }
  std::size_t rank() const noexcept { return grading_.moduleRank(); }
  std::size_t slots() const noexcept { return m() + n(); }
  bool isHomogenized() const noexcept { return homogenized_; }
  const Grading& grading() const noexcept { return grading_; }

  const std::vector<std::string>& xNames() const noexcept { return xNames_; }
  const std::vector<std::string>& yNames() const noexcept { return yNames_; }
  /// Name of exponent slot i (y's first when homogenized).
  const std::string& slotName(std::size_t slot) const;

  RingContext homogenizedContext() const;
  RingContext plainContext() const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> xNames_;
  std::vector<std::string> yNames_;
  Grading grading_;
  bool homogenized_;
};

/// deg of t*e_i: W*x (+ y-exponents when homogenized) + shift of e_i.
Degree degW(const ModuleTerm& t, const RingContext& ctx);

}  // namespace satgb
