#include "satgb/grading.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

namespace satgb {

namespace {

void requireSameLength(const Degree& a, const Degree& b) {
  if (a.size() != b.size())
    throw StructuralError("degree tuples of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

Degree topTuple(std::span<const Degree> tuples) {
  if (tuples.empty()) throw StructuralError("Top of an empty set of tuples");
  Degree out = tuples.front();
  for (const Degree& d : tuples.subspan(1)) out = top(out, d);
  return out;
}

Degree top(const Degree& a, const Degree& b) {
  requireSameLength(a, b);
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Degree operator+(const Degree& a, const Degree& b) {
  requireSameLength(a, b);
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Degree operator-(const Degree& a, const Degree& b) {
  requireSameLength(a, b);
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool dominatedBy(const Degree& a, const Degree& b) {
  requireSameLength(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string toString(const Degree& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
  os << ']';
  return os.str();
}

std::size_t matrixRank(const IntMatrix& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) {
    a.emplace_back();
    for (auto v : row) a.back().emplace_back(static_cast<long>(v));
  }
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool isPositiveMatrix(const IntMatrix& m) {
  if (m.empty()) return false;
  for (std::size_t c = 0; c < m.front().size(); ++c) {
    bool decided = false;
    for (const auto& row : m) {
      if (row[c] == 0) continue;
      if (row[c] < 0) return false;
      decided = true;
      break;
    }
    if (!decided) return false;
  }
  return true;
}

Grading::Grading(IntMatrix weights, std::vector<Degree> shifts)
    : weights_(std::move(weights)), shifts_(std::move(shifts)) {
  if (weights_.empty()) throw StructuralError("grading matrix needs at least one row");
  columns_ = weights_.front().size();
  if (columns_ == 0) throw StructuralError("grading matrix needs at least one column");
  for (const auto& row : weights_)
    if (row.size() != columns_) throw StructuralError("ragged grading matrix");
  if (matrixRank(weights_) != weights_.size())
    throw DomainError("grading matrix must have full row rank " + std::to_string(weights_.size()));
  if (shifts_.empty()) shifts_.assign(1, Degree(weights_.size(), 0));
  for (const auto& s : shifts_)
    if (s.size() != weights_.size()) throw StructuralError("shift tuple length differs from grading rows");
  positive_ = isPositiveMatrix(weights_);
}

Grading Grading::standard(std::size_t n, std::size_t moduleRank) {
  return Grading(IntMatrix{std::vector<std::int64_t>(n, 1)}, std::vector<Degree>(moduleRank, Degree{0}));
}

Degree Grading::weigh(std::span<const Exponent> x) const {
  if (x.size() != columns_)
    throw StructuralError("exponent vector of length " + std::to_string(x.size()) + " for a grading on " +
                          std::to_string(columns_) + " indeterminates");
  Degree out(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < columns_; ++c) out[r] += weights_[r][c] * x[c];
  return out;
}

}  // namespace satgb
