#include "satgb/order.hpp"

#include <random>
#include <sstream>

namespace satgb {

OrderSpec OrderSpec::matrix(IntMatrix v) {
  if (v.empty()) throw DomainError("order matrix is empty");
  for (const auto& row : v)
    if (row.size() != v.size()) throw DomainError("order matrix must be square");
  if (matrixRank(v) != v.size()) throw DomainError("order matrix must be non-singular");
  return OrderSpec(std::move(v));
}

IntMatrix OrderSpec::expand(std::size_t n) const {
  if (!named_) {
    if (matrix_.size() != n)
      throw StructuralError("order matrix of size " + std::to_string(matrix_.size()) + " for " + std::to_string(n) +
                            " indeterminates");
    return matrix_;
  }
  auto unit = [n](std::size_t i, std::int64_t sign) {
    std::vector<std::int64_t> row(n, 0);
    row[i] = sign;
    return row;
  };
  IntMatrix out;
  switch (*named_) {
    case NamedOrder::kLex:
      for (std::size_t i = 0; i < n; ++i) out.push_back(unit(i, 1));
      break;
    case NamedOrder::kDegLex:
      out.emplace_back(n, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(i, 1));
      break;
    case NamedOrder::kDegRevLex:
      out.emplace_back(n, 1);
      for (std::size_t i = n - 1; i >= 1; --i) out.push_back(unit(i, -1));
      break;
  }
  return out;
}

std::string OrderSpec::toString() const {
  if (named_) {
    switch (*named_) {
      case NamedOrder::kLex:
        return "Lex";
      case NamedOrder::kDegLex:
        return "DegLex";
      case NamedOrder::kDegRevLex:
        return "DegRevLex";
    }
  }
  std::ostringstream os;
  os << "matrix";
  for (std::size_t r = 0; r < matrix_.size(); ++r) {
    os << (r ? "," : "");
    for (auto v : matrix_[r]) os << ' ' << v;
  }
  return os.str();
}

TermOrder::TermOrder(const OrderSpec& base, const RingContext& ctx)
    : base_(base), m_(ctx.m()), slots_(ctx.slots()) {
  const Grading& g = ctx.grading();
  const std::size_t n = ctx.n();
  IntMatrix sigma = base.expand(n);
  if (m_ > 0) {
    for (std::size_t r = 0; r < m_; ++r) {
      std::vector<std::int64_t> row(slots_, 0);
      row[r] = 1;
      for (std::size_t c = 0; c < n; ++c) row[m_ + c] = g.weights()[r][c];
      rows_.push_back(std::move(row));
    }
  }
  for (const auto& srow : sigma) {
    std::vector<std::int64_t> row(slots_, 0);
    for (std::size_t c = 0; c < n; ++c) row[m_ + c] = srow[c];
    rows_.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    std::vector<std::int64_t> off(rows_.size(), 0);
    for (std::size_t r = 0; r < m_; ++r) off[r] = g.shift(i)[r];
    offsets_.push_back(std::move(off));
  }
}

void TermOrder::computeKey(std::span<const Exponent> exps, std::size_t component, std::span<std::int32_t> out) const {
  if (exps.size() != slots_) throw StructuralError("term length does not match the ordering's context");
  if (component >= offsets_.size()) throw StructuralError("component index outside the module rank");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::int64_t acc = offsets_[component][r];
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < slots_; ++c) acc += row[c] * exps[c];
    out[r] = detail::narrow(acc, "order key");
  }
}

std::vector<std::int32_t> TermOrder::key(const ModuleTerm& t) const {
  std::vector<std::int32_t> k(keyLength());
  computeKey(t.pp.exponents(), t.component, k);
  return k;
}

std::strong_ordering TermOrder::compare(const ModuleTerm& a, const ModuleTerm& b) const {
  auto ka = key(a), kb = key(b);
  if (auto c = ka <=> kb; c != 0) return c;
  // e_1 > e_2 > ... on ties.
  if (auto c = b.component <=> a.component; c != 0) return c;
  // Equal keys with a non-singular stacked matrix mean equal power products.
  return std::strong_ordering::equal;
}

ExtendedOrder extendOrder(const OrderSpec& sigma, const RingContext& ctx) {
  return TermOrder(sigma, ctx.isHomogenized() ? ctx : ctx.homogenizedContext());
}

GradingReport gradingChecks(const Grading& g, const OrderSpec& sigma) {
  GradingReport report;
  report.positive = g.positive();
  const std::size_t n = g.columns(), m = g.rows();
  IntMatrix v = sigma.expand(n);
  if (m > v.size()) return report;

  IntMatrix top(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
  IntMatrix joint = top;
  joint.insert(joint.end(), g.weights().begin(), g.weights().end());
  if (matrixRank(top) != m || matrixRank(joint) != m) return report;

  auto weigh = [](const IntMatrix& mat, const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> out(mat.size(), 0);
    for (std::size_t r = 0; r < mat.size(); ++r)
      for (std::size_t c = 0; c < x.size(); ++c) out[r] += mat[r][c] * x[c];
    return out;
  };
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> exp(0, 4);
  std::vector<std::int64_t> a(n), b(n);
  for (int trial = 0; trial < 10000; ++trial) {
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = exp(rng);
      b[i] = exp(rng);
    }
    auto da = weigh(g.weights(), a), db = weigh(g.weights(), b);
    if (da == db) continue;
    if (da < db) std::swap(a, b), std::swap(da, db);
    if (!(weigh(v, a) > weigh(v, b))) return report;
  }
  report.degCompatible = true;
  report.sampled = true;
  return report;
}

}  // namespace satgb
