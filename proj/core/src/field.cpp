#include "satgb/field.hpp"

namespace satgb {

namespace {

bool isPrime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RationalField::Element RationalField::makePrimitive(std::vector<Element>& cs) const {
  if (cs.empty()) return Element(1);
  mpz_class l = 1;
  for (const auto& c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), mpq_denref(c.get_mpq_t()));
  mpz_class g = 0;
  for (const auto& c : cs) {
    mpz_class v = (c.get_num() * l) / c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(cs.front()) < 0) g = -g;
  Element factor(l, g);
  factor.canonicalize();
  for (auto& c : cs) c *= factor;
  return factor;
}

RationalField::Element RationalField::removeContent(std::span<Element> a, std::span<Element> b) const {
  // Start from the shortest coefficient: gcds against a small value are cheap.
  mpz_srcptr best = nullptr;
  for (auto part : {a, b})
    for (const auto& c : part) {
      mpz_srcptr z = mpq_numref(c.get_mpq_t());
      if (mpz_sgn(z) != 0 && (!best || mpz_size(z) < mpz_size(best))) best = z;
    }
  if (!best) return Element(1);
  mpz_class g;
  mpz_abs(g.get_mpz_t(), best);
  if (g == 1) return Element(1);
  for (auto part : {a, b})
    for (const auto& c : part) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpq_numref(c.get_mpq_t()));
      if (g == 1) return Element(1);
    }
  for (auto part : {a, b})
    for (auto& c : part) mpz_divexact(mpq_numref(c.get_mpq_t()), mpq_numref(c.get_mpq_t()), g.get_mpz_t());
  return Element(g);
}

void RationalField::cofactors(const Element& lcH, const Element& lcG, Element& a, Element& c) const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpq_numref(lcH.get_mpq_t()), mpq_numref(lcG.get_mpq_t()));
  a = Element(lcG.get_num() / g);
  c = Element(lcH.get_num() / g);
  if (sgn(a) < 0) {
    a = -a;
    c = -c;
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !isPrime(p))
    throw DomainError("prime field characteristic must be a prime below 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::fromRational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw DomainError("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
  if (num < 0) num += p_;
  return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

PrimeField::Element PrimeField::inverse(Element a) const {
  if (a == 0) throw DomainError("inverse of zero");
  std::int64_t t = 0, newT = 1;
  std::int64_t r = p_, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

}  // namespace satgb
