#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satgb/error.hpp"

namespace satgb {

using Exponent = std::int32_t;

/// A term of T^{m+n}: a dense exponent array. When the ring carries
/// homogenizing indeterminates they occupy the leading m slots.
class PowerProduct {
 public:
  PowerProduct() = default;
  /// The identity term of the given length.
  explicit PowerProduct(std::size_t length) : exps_(length, 0) {}
  explicit PowerProduct(std::vector<Exponent> exps);
  PowerProduct(std::initializer_list<Exponent> exps) : PowerProduct(std::vector<Exponent>(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  void set(std::size_t i, Exponent e);

  std::int64_t totalDegree() const;
  bool isOne() const;

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;
  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);

 private:
  std::vector<Exponent> exps_;
};

PowerProduct ppLcm(const PowerProduct& a, const PowerProduct& b);
PowerProduct ppGcd(const PowerProduct& a, const PowerProduct& b);

/// a / b when b divides a; std::nullopt signals non-divisibility.
std::optional<PowerProduct> ppQuotient(const PowerProduct& a, const PowerProduct& b);

bool ppDivides(const PowerProduct& divisor, const PowerProduct& dividend);

/// t * e_component; components are 0-based.
struct ModuleTerm {
  PowerProduct pp;
  std::size_t component = 0;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

}  // namespace satgb
