#include "satgb/power_product.hpp"

#include <algorithm>

namespace satgb {

namespace {

void requireSameLength(const PowerProduct& a, const PowerProduct& b, const char* op) {
  if (a.size() != b.size())
    throw StructuralError(std::string(op) + ": power products of lengths " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
}

}  // namespace

PowerProduct::PowerProduct(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw DomainError("negative exponent in power product");
}

void PowerProduct::set(std::size_t i, Exponent e) {
  if (e < 0) throw DomainError("negative exponent in power product");
  exps_.at(i) = e;
}

std::int64_t PowerProduct::totalDegree() const {
  std::int64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool PowerProduct::isOne() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
  requireSameLength(a, b, "product");
  PowerProduct out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = detail::checkedAdd(a[i], b[i]);
  return out;
}

PowerProduct ppLcm(const PowerProduct& a, const PowerProduct& b) {
  requireSameLength(a, b, "lcm");
  PowerProduct out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, std::max(a[i], b[i]));
  return out;
}

PowerProduct ppGcd(const PowerProduct& a, const PowerProduct& b) {
  requireSameLength(a, b, "gcd");
  PowerProduct out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, std::min(a[i], b[i]));
  return out;
}

bool ppDivides(const PowerProduct& divisor, const PowerProduct& dividend) {
  requireSameLength(divisor, dividend, "divisibility");
  for (std::size_t i = 0; i < divisor.size(); ++i)
    if (divisor[i] > dividend[i]) return false;
  return true;
}

std::optional<PowerProduct> ppQuotient(const PowerProduct& a, const PowerProduct& b) {
  requireSameLength(a, b, "quotient");
  PowerProduct out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return std::nullopt;
    out.set(i, a[i] - b[i]);
  }
  return out;
}

}  // namespace satgb
