#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "satgb/error.hpp"

namespace satgb {

/// The rationals. Elements are GMP rationals kept in canonical form
/// (lowest terms, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element fromRational(const mpq_class& q) const { return q; }
  Element fromInteger(long v) const { return Element(v); }
  mpq_class toRational(const Element& e) const { return e; }

  bool isZero(const Element& e) const { return sgn(e) == 0; }
  bool isOne(const Element& e) const { return e == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inverse(const Element& a) const {
    if (isZero(a)) throw DomainError("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inverse(b)); }

  /// acc -= c * g
  void subMul(Element& acc, const Element& c, const Element& g, Element& scratch) const {
    mpq_mul(scratch.get_mpq_t(), c.get_mpq_t(), g.get_mpq_t());
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
  }
  void mulInPlace(Element& acc, const Element& c) const {
    mpq_mul(acc.get_mpq_t(), acc.get_mpq_t(), c.get_mpq_t());
  }

  std::string toString(const Element& e) const { return e.get_str(); }
  std::string name() const { return "Q"; }

  // Division over Q runs fraction-free: vectors being reduced carry integer
  // coefficients (denominator 1) and are rescaled instead of divided.
  static constexpr bool kFractionFree = true;

  /// Scales cs to coprime integers with a positive first entry; returns the factor applied.
  Element makePrimitive(std::vector<Element>& cs) const;
  /// Divides integer coefficients by their content; returns the content (1 if none).
  Element removeContent(std::span<Element> a, std::span<Element> b) const;
  /// Integer cofactors a = lcG/g, c = lcH/g with g = gcd and a > 0, so a*lcH - c*lcG = 0.
  void cofactors(const Element& lcH, const Element& lcG, Element& a, Element& c) const;
  void intScale(Element& x, const Element& a) const {
    mpz_mul(mpq_numref(x.get_mpq_t()), mpq_numref(x.get_mpq_t()), mpq_numref(a.get_mpq_t()));
  }
  /// acc -= c * g on integers.
  void intSubMul(Element& acc, const Element& c, const Element& g) const {
    mpz_submul(mpq_numref(acc.get_mpq_t()), mpq_numref(c.get_mpq_t()), mpq_numref(g.get_mpq_t()));
  }
  Element intNegMul(const Element& c, const Element& g) const {
    Element r;
    mpz_mul(mpq_numref(r.get_mpq_t()), mpq_numref(c.get_mpq_t()), mpq_numref(g.get_mpq_t()));
    mpz_neg(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()));
    return r;
  }

  bool operator==(const RationalField&) const { return true; }
};

/// Z/p for a prime p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element fromRational(const mpq_class& q) const;
  Element fromInteger(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Symmetric lift into (-p/2, p/2].
  mpq_class toRational(const Element& e) const {
    return e > p_ / 2 ? mpq_class(static_cast<long>(e) - static_cast<long>(p_)) : mpq_class(static_cast<unsigned long>(e));
  }

  bool isZero(Element e) const { return e == 0; }
  bool isOne(Element e) const { return e == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inverse(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inverse(b)); }

  void subMul(Element& acc, Element c, Element g, Element&) const { acc = sub(acc, mul(c, g)); }
  void mulInPlace(Element& acc, Element c) const { acc = mul(acc, c); }

  std::string toString(Element e) const { return toRational(e).get_str(); }
  std::string name() const { return "Zp" + std::to_string(p_); }

  static constexpr bool kFractionFree = false;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace satgb
