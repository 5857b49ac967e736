#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "satgb/free_module.hpp"

namespace satgb {

/// The plain module F = P^r ordered by sigma and its homogenized
/// counterpart F-bar ordered by sigma-bar^W.
template <class F>
struct SpacePair {
  ModulePtr<F> plain;
  ModulePtr<F> homogenized;
};

template <class F>
SpacePair<F> makeSpaces(const F& field, const RingContext& ctx, const OrderSpec& sigma) {
  RingContext plain = ctx.plainContext();
  return {FreeModule<F>::create(field, plain, sigma), FreeModule<F>::create(field, plain.homogenizedContext(), sigma)};
}

namespace detail {

template <class F>
void requireCounterparts(const FreeModule<F>& plain, const FreeModule<F>& hom) {
  if (plain.context().isHomogenized() || !hom.context().isHomogenized() ||
      !(plain.context().homogenizedContext() == hom.context()) || !(plain.sigma() == hom.sigma()) ||
      !(plain.field() == hom.field()))
    throw StructuralError("modules are not a plain/homogenized pair");
}

}  // namespace detail

/// deg of a homogeneous vector in F-bar (its first term's degree).
template <class F>
Degree degreeOf(const ModuleVector<F>& v) {
  if (v.isZero()) throw DomainError("degree of the zero vector");
  return v.space()->degreeOfPacked(v.packed(0));
}

template <class F>
bool isHomogeneous(const ModuleVector<F>& v) {
  if (v.size() <= 1) return true;
  const auto& space = *v.space();
  const std::size_t m = space.context().m();
  if (m == 0) {
    Degree d = space.degreeOfPacked(v.packed(0));
    for (std::size_t i = 1; i < v.size(); ++i)
      if (space.degreeOfPacked(v.packed(i)) != d) return false;
    return true;
  }
  // The first m key words of the extended ordering are the W-bar degree.
  const std::int32_t* first = v.packed(0);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!std::equal(first, first + m, v.packed(i))) return false;
  return true;
}

/// v^hom: every summand t*e_i gets y^(TopDeg(v) - deg_W(t) - delta_i).
template <class F>
ModuleVector<F> homogenize(const ModuleVector<F>& v, const ModulePtr<F>& target) {
  detail::requireCounterparts(*v.space(), *target);
  ModuleVector<F> out(target);
  if (v.isZero()) return out;
  const auto& src = *v.space();
  const std::size_t m = target->context().m();
  const std::size_t n = src.context().n();
  Degree mu = topDeg(v);
  std::vector<std::pair<typename F::Element, ModuleTerm>> summands;
  summands.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Degree d = src.degreeOfPacked(v.packed(i));
    std::vector<Exponent> exps(m + n);
    for (std::size_t k = 0; k < m; ++k) {
      std::int64_t e = mu[k] - d[k];
      if (e < 0) throw DomainError("negative homogenizing exponent: inconsistent module shifts");
      exps[k] = detail::narrow(e, "homogenization");
    }
    const std::int32_t* x = src.exps(v.packed(i));
    std::copy(x, x + n, exps.begin() + static_cast<std::ptrdiff_t>(m));
    summands.emplace_back(v.coefficient(i),
                          ModuleTerm{PowerProduct(std::move(exps)), static_cast<std::size_t>(src.component(v.packed(i)))});
  }
  return ModuleVector<F>::fromTerms(target, std::move(summands));
}

/// V^deh: set every homogenizing indeterminate to 1.
template <class F>
ModuleVector<F> dehomogenize(const ModuleVector<F>& v, const ModulePtr<F>& target) {
  detail::requireCounterparts(*target, *v.space());
  ModuleVector<F> out(target);
  if (v.isZero()) return out;
  const auto& src = *v.space();
  const std::size_t m = src.context().m();
  std::vector<std::pair<typename F::Element, ModuleTerm>> summands;
  summands.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int32_t* e = src.exps(v.packed(i));
    summands.emplace_back(v.coefficient(i),
                          ModuleTerm{PowerProduct(std::vector<Exponent>(e + m, e + src.slots())),
                                     static_cast<std::size_t>(src.component(v.packed(i)))});
  }
  return ModuleVector<F>::fromTerms(target, std::move(summands));
}

/// Componentwise minimum of the y-exponents over all terms.
template <class F>
std::vector<Exponent> commonYPower(const ModuleVector<F>& v) {
  const auto& space = *v.space();
  const std::size_t m = space.context().m();
  std::vector<Exponent> c(m, 0);
  if (v.isZero()) return c;
  const std::int32_t* e0 = space.exps(v.packed(0));
  std::copy(e0, e0 + m, c.begin());
  for (std::size_t i = 1; i < v.size(); ++i) {
    const std::int32_t* e = space.exps(v.packed(i));
    for (std::size_t k = 0; k < m; ++k) c[k] = std::min(c[k], e[k]);
  }
  return c;
}

/// Divide every term by y^c; c must divide all terms.
template <class F>
ModuleVector<F> divideByYPower(const ModuleVector<F>& v, std::span<const Exponent> c) {
  const auto& space = *v.space();
  std::vector<Exponent> exps(space.slots(), 0);
  std::copy(c.begin(), c.end(), exps.begin());
  Multiplier mul = space.multiplier(PowerProduct(exps));
  for (auto& k : mul.key) k = -k;
  for (auto& e : mul.exps) e = -e;
  ModuleVector<F> out(v.space());
  out.rawCoefficients() = v.rawCoefficients();
  out.rawWords().resize(v.rawWords().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    space.multiplyPacked(v.packed(i), mul, out.rawWords().data() + i * space.stride());
  return out;
}

/// U^sat = (U^deh)^hom for homogeneous U. With one homogenizing
/// indeterminate this strips the largest power of y dividing U; otherwise
/// it dehomogenizes into `plain` and homogenizes back.
template <class F>
ModuleVector<F> saturateVector(const ModuleVector<F>& u, const ModulePtr<F>& plain) {
  if (!u.space()->context().isHomogenized()) throw DomainError("saturation needs a homogenized module");
  if (!isHomogeneous(u)) throw DomainError("saturation of a non-homogeneous vector");
  if (u.isZero()) return u;
  if (u.space()->context().m() == 1) {
    auto c = commonYPower(u);
    return c[0] == 0 ? u : divideByYPower(u, c);
  }
  return homogenize(dehomogenize(u, plain), u.space());
}

template <class F>
ModuleVector<F> saturateVector(const ModuleVector<F>& u) {
  const auto& space = *u.space();
  return saturateVector(u, FreeModule<F>::create(space.field(), space.context().plainContext(), space.sigma()));
}

/// Elementwise homogenization; zero generators are a domain error.
template <class F>
std::vector<ModuleVector<F>> homogenizeGenerators(std::span<const ModuleVector<F>> vs, const ModulePtr<F>& target) {
  std::vector<ModuleVector<F>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.isZero()) throw DomainError("cannot homogenize a zero generator");
    out.push_back(homogenize(v, target));
  }
  return out;
}

}  // namespace satgb
