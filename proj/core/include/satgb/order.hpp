#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satgb/grading.hpp"
#include "satgb/power_product.hpp"
#include "satgb/ring.hpp"

namespace satgb {

enum class NamedOrder { kLex, kDegLex, kDegRevLex };

/// A monoid ordering on T^n, either named or given by a non-singular
/// integer matrix V (t1 > t2 iff V*t1 > V*t2 lexicographically).
///
/// Module terms are compared term-over-position: power products first,
/// then components, with e_1 > e_2 > ... > e_r.
class OrderSpec {
 public:
  static OrderSpec lex() { return OrderSpec(NamedOrder::kLex); }
  static OrderSpec degLex() { return OrderSpec(NamedOrder::kDegLex); }
  static OrderSpec degRevLex() { return OrderSpec(NamedOrder::kDegRevLex); }
  /// Throws DomainError unless the matrix is square and non-singular.
  static OrderSpec matrix(IntMatrix v);

  bool isNamed() const noexcept { return named_.has_value(); }
  std::optional<NamedOrder> named() const noexcept { return named_; }

  /// The canonical n x n matrix: Lex = identity; DegLex = ones row then the
  /// first n-1 unit rows; DegRevLex = ones row then -e_n, -e_{n-1}, ..., -e_2.
  IntMatrix expand(std::size_t n) const;

  std::string toString() const;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

 private:
  explicit OrderSpec(NamedOrder o) : named_(o) {}
  explicit OrderSpec(IntMatrix v) : matrix_(std::move(v)) {}

  std::optional<NamedOrder> named_;
  IntMatrix matrix_;
};

/// The active ordering of a context: sigma itself on the plain ring, or its
/// extension sigma-bar by W on the homogenized ring. Both are realised as one
/// stacked weight matrix; for the extension the first m rows are W-bar = (I | W)
/// plus the component shifts, and the remaining n rows are sigma's matrix on the
/// x-slots. Each term caches its weight vector ("key"), so a comparison is a
/// lexicographic scan and multiplication by a term adds keys.
class TermOrder {
 public:
  TermOrder(const OrderSpec& base, const RingContext& ctx);

  const OrderSpec& base() const noexcept { return base_; }
  bool isExtended() const noexcept { return m_ > 0; }
  std::size_t keyLength() const noexcept { return rows_.size(); }
  std::size_t slots() const noexcept { return slots_; }
  std::size_t rank() const noexcept { return offsets_.size(); }
  const IntMatrix& rows() const noexcept { return rows_; }

  /// Writes the key of t*e_component into out (length keyLength()).
  void computeKey(std::span<const Exponent> exps, std::size_t component, std::span<std::int32_t> out) const;
  std::vector<std::int32_t> key(const ModuleTerm& t) const;

  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderSpec base_;
  std::size_t m_;
  std::size_t slots_;
  IntMatrix rows_;
  IntMatrix offsets_;
};

using ExtendedOrder = TermOrder;

/// sigma-bar^W: the extension of sigma to the homogenized context of ctx.
ExtendedOrder extendOrder(const OrderSpec& sigma, const RingContext& ctx);

struct GradingReport {
  bool positive = false;
  bool degCompatible = false;
  /// True when degCompatible rests on sampling rather than a proof.
  bool sampled = false;
};

/// Positivity by the column rule; deg_W-compatibility of sigma by the
/// row-span criterion followed by 10^4 sampled pairs.
GradingReport gradingChecks(const Grading& g, const OrderSpec& sigma);

}  // namespace satgb
