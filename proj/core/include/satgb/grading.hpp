#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "satgb/power_product.hpp"

namespace satgb {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A degree in Z^m. Tuples compare lexicographically (std::vector's operator<).
using Degree = std::vector<std::int64_t>;

/// Componentwise maximum. Throws StructuralError on empty input or unequal lengths.
Degree topTuple(std::span<const Degree> tuples);
Degree top(const Degree& a, const Degree& b);
Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
/// Componentwise a <= b.
bool dominatedBy(const Degree& a, const Degree& b);
std::string toString(const Degree& d);

std::size_t matrixRank(const IntMatrix& m);

/// A matrix grading W in Mat_{m,n}(Z) of rank m, together with the degree
/// shifts of the basis vectors of a free module of rank r.
class Grading {
 public:
  Grading(IntMatrix weights, std::vector<Degree> shifts = {});

  /// The single all-ones row.
  static Grading standard(std::size_t n, std::size_t moduleRank = 1);

  std::size_t rows() const noexcept { return weights_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  std::size_t moduleRank() const noexcept { return shifts_.size(); }
  const IntMatrix& weights() const noexcept { return weights_; }
  const Degree& shift(std::size_t component) const { return shifts_.at(component); }
  const std::vector<Degree>& shifts() const noexcept { return shifts_; }

  /// Each column has a non-zero entry and its first non-zero entry is positive.
  bool positive() const noexcept { return positive_; }

  /// W * x for an exponent vector over the n ordinary indeterminates.
  Degree weigh(std::span<const Exponent> x) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  IntMatrix weights_;
  std::vector<Degree> shifts_;
  std::size_t columns_ = 0;
  bool positive_ = false;
};

bool isPositiveMatrix(const IntMatrix& m);

}  // namespace satgb
