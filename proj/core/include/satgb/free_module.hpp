#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satgb/error.hpp"
#include "satgb/field.hpp"
#include "satgb/grading.hpp"
#include "satgb/order.hpp"
#include "satgb/power_product.hpp"
#include "satgb/ring.hpp"

namespace satgb {

/// A power product prepared for multiplying packed terms: its order key
/// (without component offsets) and its exponents.
struct Multiplier {
  std::vector<std::int32_t> key;
  std::vector<Exponent> exps;
};

/// A free module over a polynomial ring with a fixed coefficient field and
/// active term ordering. Terms inside vectors are packed as
///   [ key (K words) | component | exponents (N words) ]
/// where key is the ordering's weight vector of the term.
template <class F>
class FreeModule {
 public:
  using Field = F;
  using Element = typename F::Element;

  static std::shared_ptr<const FreeModule> create(F field, RingContext ctx, OrderSpec sigma) {
    return std::shared_ptr<const FreeModule>(new FreeModule(std::move(field), std::move(ctx), std::move(sigma)));
  }

  const F& field() const noexcept { return field_; }
  const RingContext& context() const noexcept { return ctx_; }
  const TermOrder& order() const noexcept { return order_; }
  const OrderSpec& sigma() const noexcept { return order_.base(); }

  std::size_t keyLength() const noexcept { return keyLength_; }
  std::size_t slots() const noexcept { return slots_; }
  std::size_t stride() const noexcept { return keyLength_ + 1 + slots_; }

  bool sameAs(const FreeModule& o) const {
    return this == &o || (field_ == o.field_ && ctx_ == o.ctx_ && order_ == o.order_);
  }

  void pack(const ModuleTerm& t, std::int32_t* out) const {
    if (t.pp.size() != slots_) throw StructuralError("term length does not match the module's ring");
    order_.computeKey(t.pp.exponents(), t.component, std::span<std::int32_t>(out, keyLength_));
    out[keyLength_] = static_cast<std::int32_t>(t.component);
    std::copy(t.pp.exponents().begin(), t.pp.exponents().end(), out + keyLength_ + 1);
  }

  ModuleTerm unpack(const std::int32_t* w) const {
    return ModuleTerm{PowerProduct(std::vector<Exponent>(w + keyLength_ + 1, w + keyLength_ + 1 + slots_)),
                      static_cast<std::size_t>(w[keyLength_])};
  }

  Multiplier multiplier(const PowerProduct& t) const {
    if (t.size() != slots_) throw StructuralError("multiplier length does not match the module's ring");
    Multiplier mul;
    mul.key.resize(keyLength_);
    // Offsets of component 0 are subtracted again so the key is shift-free.
    order_.computeKey(t.exponents(), 0, mul.key);
    std::vector<std::int32_t> zero(keyLength_);
    order_.computeKey(PowerProduct(slots_).exponents(), 0, zero);
    for (std::size_t i = 0; i < keyLength_; ++i) mul.key[i] -= zero[i];
    mul.exps.assign(t.exponents().begin(), t.exponents().end());
    return mul;
  }

  /// Three-way comparison of packed terms: key, then component (e_1 largest).
  int comparePacked(const std::int32_t* a, const std::int32_t* b) const noexcept {
    for (std::size_t i = 0; i < keyLength_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a[keyLength_] != b[keyLength_]) return a[keyLength_] > b[keyLength_] ? -1 : 1;
    return 0;
  }

  const std::int32_t* exps(const std::int32_t* w) const noexcept { return w + keyLength_ + 1; }
  std::int32_t component(const std::int32_t* w) const noexcept { return w[keyLength_]; }

  /// divisor | dividend (same component, exponentwise <=).
  bool dividesPacked(const std::int32_t* divisor, const std::int32_t* dividend) const noexcept {
    if (divisor[keyLength_] != dividend[keyLength_]) return false;
    const std::int32_t* a = exps(divisor);
    const std::int32_t* b = exps(dividend);
    for (std::size_t i = 0; i < slots_; ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  /// out = term * mul (overflow-checked).
  void multiplyPacked(const std::int32_t* term, const Multiplier& mul, std::int32_t* out) const {
    for (std::size_t i = 0; i < keyLength_; ++i) out[i] = detail::checkedAdd(term[i], mul.key[i], "order key");
    out[keyLength_] = term[keyLength_];
    for (std::size_t i = 0; i < slots_; ++i)
      out[keyLength_ + 1 + i] = detail::checkedAdd(term[keyLength_ + 1 + i], mul.exps[i]);
  }

  /// Bit i set iff slot i (mod 64) has a positive exponent.
  std::uint64_t divMask(const std::int32_t* w) const noexcept {
    std::uint64_t mask = 0;
    const std::int32_t* e = exps(w);
    for (std::size_t i = 0; i < slots_; ++i)
      if (e[i] > 0) mask |= std::uint64_t{1} << (i % 64);
    return mask;
  }

  Degree degreeOfPacked(const std::int32_t* w) const {
    return degW(unpack(w), ctx_);
  }

  std::string termToString(const std::int32_t* w) const {
    std::ostringstream os;
    bool first = true;
    const std::int32_t* e = exps(w);
    for (std::size_t i = 0; i < slots_; ++i) {
      if (e[i] == 0) continue;
      os << (first ? "" : "*") << ctx_.slotName(i);
      if (e[i] > 1) os << '^' << e[i];
      first = false;
    }
    if (ctx_.rank() > 1) {
      os << (first ? "" : "*") << 'e' << (w[keyLength_] + 1);
      first = false;
    }
    if (first) os << '1';
    return os.str();
  }

 private:
  FreeModule(F field, RingContext ctx, OrderSpec sigma)
      : field_(std::move(field)),
        ctx_(std::move(ctx)),
        order_(sigma, ctx_),
        keyLength_(order_.keyLength()),
        slots_(ctx_.slots()) {}

  F field_;
  RingContext ctx_;
  TermOrder order_;
  std::size_t keyLength_;
  std::size_t slots_;
};

template <class F>
using ModulePtr = std::shared_ptr<const FreeModule<F>>;

/// A finite sum of coefficient * term * e_i, stored strictly descending
/// under the space's ordering with no zero coefficients. The empty sum is 0.
template <class F>
class ModuleVector {
 public:
  using Field = F;
  using Element = typename F::Element;
  using Space = FreeModule<F>;

  ModuleVector() = default;
  explicit ModuleVector(ModulePtr<F> space) : space_(std::move(space)) {}

  static ModuleVector fromTerms(ModulePtr<F> space, std::vector<std::pair<Element, ModuleTerm>> summands) {
    ModuleVector v(std::move(space));
    const std::size_t stride = v.space_->stride();
    std::vector<std::int32_t> words(summands.size() * stride);
    for (std::size_t i = 0; i < summands.size(); ++i) v.space_->pack(summands[i].second, words.data() + i * stride);
    std::vector<std::size_t> idx(summands.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return v.space_->comparePacked(words.data() + a * stride, words.data() + b * stride) > 0;
    });
    const F& field = v.space_->field();
    for (std::size_t k = 0; k < idx.size();) {
      const std::int32_t* w = words.data() + idx[k] * stride;
      Element c = summands[idx[k]].first;
      std::size_t j = k + 1;
      for (; j < idx.size() && v.space_->comparePacked(w, words.data() + idx[j] * stride) == 0; ++j)
        c = field.add(c, summands[idx[j]].first);
      if (!field.isZero(c)) v.pushBack(std::move(c), w);
      k = j;
    }
    return v;
  }

  static ModuleVector monomial(ModulePtr<F> space, Element c, const ModuleTerm& t) {
    std::vector<std::pair<Element, ModuleTerm>> s;
    s.emplace_back(std::move(c), t);
    return fromTerms(std::move(space), std::move(s));
  }

  const ModulePtr<F>& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool isZero() const noexcept { return coeffs_.empty(); }

  const Element& coefficient(std::size_t i) const { return coeffs_[i]; }
  ModuleTerm term(std::size_t i) const { return space_->unpack(packed(i)); }
  const std::int32_t* packed(std::size_t i) const noexcept { return words_.data() + i * space_->stride(); }

  const Element& leadingCoefficient() const {
    if (isZero()) throw DomainError("leading coefficient of the zero vector");
    return coeffs_.front();
  }
  ModuleTerm leadingTerm() const {
    if (isZero()) throw DomainError("leading term of the zero vector");
    return term(0);
  }

  void scale(const Element& c) {
    const F& field = space_->field();
    if (field.isZero(c)) {
      clear();
      return;
    }
    for (auto& e : coeffs_) field.mulInPlace(e, c);
  }

  /// Divide by the leading coefficient. No-op on zero.
  void makeMonic() {
    if (isZero() || space_->field().isOne(coeffs_.front())) return;
    scale(space_->field().inverse(coeffs_.front()));
  }

  ModuleVector multiplied(const PowerProduct& t) const {
    ModuleVector out(space_);
    if (isZero()) return out;
    Multiplier mul = space_->multiplier(t);
    out.coeffs_ = coeffs_;
    out.words_.resize(words_.size());
    const std::size_t stride = space_->stride();
    for (std::size_t i = 0; i < size(); ++i)
      space_->multiplyPacked(packed(i), mul, out.words_.data() + i * stride);
    return out;
  }

  ModuleVector negated() const {
    ModuleVector out = *this;
    for (auto& e : out.coeffs_) e = space_->field().neg(e);
    return out;
  }

  void clear() {
    coeffs_.clear();
    words_.clear();
  }

  /// Strictly descending, no zero coefficients.
  bool isSortedStrict() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (space_->field().isZero(coeffs_[i])) return false;
      if (i > 0 && space_->comparePacked(packed(i - 1), packed(i)) <= 0) return false;
    }
    return true;
  }

  std::string toString() const {
    if (isZero()) return "0";
    if (space_->context().rank() > 1) return moduleString();
    return polyString(0, size());
  }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    if (a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    if (!a.space_->sameAs(*b.space_)) return false;
    const F& field = a.space_->field();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    return a.words_ == b.words_;
  }

  // Raw storage for the algorithms in this library. Callers keep the invariants.
  std::vector<Element>& rawCoefficients() noexcept { return coeffs_; }
  std::vector<std::int32_t>& rawWords() noexcept { return words_; }
  const std::vector<Element>& rawCoefficients() const noexcept { return coeffs_; }
  const std::vector<std::int32_t>& rawWords() const noexcept { return words_; }

  void pushBack(Element c, const std::int32_t* w) {
    coeffs_.push_back(std::move(c));
    words_.insert(words_.end(), w, w + space_->stride());
  }
  void reserve(std::size_t terms) {
    coeffs_.reserve(terms);
    words_.reserve(terms * space_->stride());
  }

 private:
  std::string polyString(std::size_t from, std::size_t to, bool withComponent = true) const {
    std::ostringstream os;
    const F& field = space_->field();
    for (std::size_t i = from; i < to; ++i) {
      mpq_class q = field.toRational(coeffs_[i]);
      std::string term = space_->termToString(packed(i));
      if (!withComponent) term = stripComponent(term);
      bool isUnit = term == "1";
      if (i == from) {
        if (q < 0) os << '-';
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      mpq_class a = abs(q);
      if (isUnit) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << '*';
        os << term;
      }
    }
    return os.str();
  }

  static std::string stripComponent(const std::string& term) {
    auto pos = term.rfind('e');
    if (pos == std::string::npos) return term;
    if (pos == 0) return "1";
    return term.substr(0, pos - 1);
  }

  std::string moduleString() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t c = 0; c < space_->context().rank(); ++c) {
      ModuleVector sub(space_);
      for (std::size_t k = 0; k < size(); ++k)
        if (static_cast<std::size_t>(space_->component(packed(k))) == c) sub.pushBack(coeffs_[k], packed(k));
      os << (c ? ", " : "") << (sub.isZero() ? std::string("0") : sub.polyString(0, sub.size(), false));
    }
    os << ']';
    return os.str();
  }

  ModulePtr<F> space_;
  std::vector<Element> coeffs_;
  std::vector<std::int32_t> words_;
};

namespace detail {

template <class F>
void requireSameSpace(const ModuleVector<F>& a, const ModuleVector<F>& b, const char* op) {
  if (!a.space() || !b.space() || !a.space()->sameAs(*b.space()))
    throw StructuralError(std::string(op) + ": vectors live in different modules");
}

}  // namespace detail

/// a*t*u + b*s*v, merged and sorted under the active ordering.
template <class F>
ModuleVector<F> vectorCombine(const typename F::Element& a, const PowerProduct& t, const ModuleVector<F>& u,
                              const typename F::Element& b, const PowerProduct& s, const ModuleVector<F>& v) {
  detail::requireSameSpace(u, v, "vectorCombine");
  const auto& space = *u.space();
  const F& field = space.field();
  const std::size_t stride = space.stride();
  Multiplier mt = space.multiplier(t), ms = space.multiplier(s);
  const bool skipU = field.isZero(a), skipV = field.isZero(b);
  const std::size_t nu = skipU ? 0 : u.size(), nv = skipV ? 0 : v.size();

  ModuleVector<F> out(u.space());
  out.reserve(nu + nv);
  std::vector<std::int32_t> tu(stride), tv(stride);
  std::size_t i = 0, j = 0;
  if (i < nu) space.multiplyPacked(u.packed(i), mt, tu.data());
  if (j < nv) space.multiplyPacked(v.packed(j), ms, tv.data());
  while (i < nu || j < nv) {
    int cmp = i >= nu ? -1 : j >= nv ? 1 : space.comparePacked(tu.data(), tv.data());
    if (cmp > 0) {
      out.pushBack(field.mul(a, u.coefficient(i)), tu.data());
      if (++i < nu) space.multiplyPacked(u.packed(i), mt, tu.data());
    } else if (cmp < 0) {
      out.pushBack(field.mul(b, v.coefficient(j)), tv.data());
      if (++j < nv) space.multiplyPacked(v.packed(j), ms, tv.data());
    } else {
      auto c = field.add(field.mul(a, u.coefficient(i)), field.mul(b, v.coefficient(j)));
      if (!field.isZero(c)) out.pushBack(std::move(c), tu.data());
      if (++i < nu) space.multiplyPacked(u.packed(i), mt, tu.data());
      if (++j < nv) space.multiplyPacked(v.packed(j), ms, tv.data());
    }
  }
  return out;
}

template <class F>
ModuleVector<F> operator+(const ModuleVector<F>& u, const ModuleVector<F>& v) {
  const F& field = u.space()->field();
  PowerProduct one(u.space()->slots());
  return vectorCombine(field.one(), one, u, field.one(), one, v);
}

template <class F>
ModuleVector<F> operator-(const ModuleVector<F>& u, const ModuleVector<F>& v) {
  const F& field = u.space()->field();
  PowerProduct one(u.space()->slots());
  return vectorCombine(field.one(), one, u, field.neg(field.one()), one, v);
}

/// LC and LT under the vector's own ordering.
template <class F>
std::pair<typename F::Element, ModuleTerm> leadingParts(const ModuleVector<F>& v) {
  if (v.isZero()) throw DomainError("leading parts of the zero vector");
  return {v.leadingCoefficient(), v.leadingTerm()};
}

/// LC and LT under another ordering of the same ring (re-sorts).
template <class F>
std::pair<typename F::Element, ModuleTerm> leadingParts(const ModuleVector<F>& v, const TermOrder& order) {
  if (v.isZero()) throw DomainError("leading parts of the zero vector");
  std::size_t best = 0;
  ModuleTerm bestTerm = v.term(0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    ModuleTerm t = v.term(i);
    if (order.compare(t, bestTerm) > 0) {
      best = i;
      bestTerm = std::move(t);
    }
  }
  return {v.coefficient(best), bestTerm};
}

/// Top over deg_W of all terms (shift-adjusted).
template <class F>
Degree topDeg(const ModuleVector<F>& v) {
  if (v.isZero()) throw DomainError("top degree of the zero vector");
  const auto& space = *v.space();
  Degree d = space.degreeOfPacked(v.packed(0));
  for (std::size_t i = 1; i < v.size(); ++i) d = top(d, space.degreeOfPacked(v.packed(i)));
  return d;
}

}  // namespace satgb
