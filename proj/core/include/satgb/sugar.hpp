#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "satgb/free_module.hpp"
#include "satgb/homogenization.hpp"

namespace satgb {

/// A basis vector together with its sugar bookkeeping.
///
/// `sweetener` is the exponent tuple a with V^sw = y^a V^sat, so
/// sugar = deg(V^sat) + sweetener. On the plain ring, V^sat stands for
/// V^hom and deg(V^sat) is TopDeg(V).
template <class F>
struct BasisElement {
  ModuleVector<F> vector;
  Degree sweetener;
  Degree sugar;
  std::size_t birth = 0;
};

struct SugarState {
  Degree sweetener;
  Degree sugar;
};

/// The degree of V^sat: deg_W-bar of the saturation, or TopDeg on the plain ring.
template <class F>
Degree saturatedDegree(const ModuleVector<F>& v) {
  if (v.isZero()) throw DomainError("degree of the zero vector");
  const auto& ctx = v.space()->context();
  if (!ctx.isHomogenized()) return topDeg(v);
  auto c = commonYPower(v);
  Degree d = degreeOf(v);
  for (std::size_t k = 0; k < c.size(); ++k) d[k] -= c[k];
  return d;
}

/// Inputs are their own companions: sweetener 0, sugar = degree.
template <class F>
SugarState initSugar(const ModuleVector<F>& u) {
  if (u.isZero()) throw DomainError("sugar of the zero vector");
  const auto& ctx = u.space()->context();
  if (ctx.isHomogenized()) {
    if (!isHomogeneous(u)) throw DomainError("initial sugar needs a homogeneous vector");
    Degree d = degreeOf(u);
    return {Degree(ctx.grading().rows(), 0), d};
  }
  return {Degree(ctx.grading().rows(), 0), topDeg(u)};
}

/// Sugar after reducing U by V with multiplier y^a * t (t free of y):
/// Top(sugar(U), deg(t) + sugar(V)).
inline Degree reductionSugar(const Degree& sugarU, const PowerProduct& t, const Degree& sugarV, const Grading& g) {
  if (sugarU.size() != g.rows() || sugarV.size() != g.rows())
    throw StructuralError("sugar tuple length differs from grading rows");
  return top(sugarU, g.weigh(t.exponents()) + sugarV);
}

/// When V (with V^sw = y^a V^sat) is replaced by y^b V^sat, the new
/// companion is y^Top(a,b) V^sat.
inline Degree replacementSweetener(const Degree& a, const Degree& b) { return top(a, b); }

namespace detail {

/// W*x + shift for the x-part of a packed term.
template <class F>
Degree xDegree(const FreeModule<F>& space, const std::int32_t* w) {
  const auto& ctx = space.context();
  const std::int32_t* e = space.exps(w);
  Degree d = ctx.grading().weigh(std::span<const Exponent>(e + ctx.m(), ctx.n()));
  const Degree& shift = ctx.grading().shift(static_cast<std::size_t>(space.component(w)));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] += shift[k];
  return d;
}

/// Sugar of the S-vector of two elements given their sugars and leading terms:
/// deg of lcm(LT(A^sw), LT(B^sw)), where LT(V^sw) = y^(sugar - deg_x(t_V)) t_V.
template <class F>
Degree pairSugarPacked(const FreeModule<F>& space, const Degree& sugarA, const std::int32_t* ltA,
                       const Degree& sugarB, const std::int32_t* ltB) {
  const auto& ctx = space.context();
  const std::int32_t* ea = space.exps(ltA);
  const std::int32_t* eb = space.exps(ltB);
  std::vector<Exponent> lcmX(ctx.n());
  for (std::size_t i = 0; i < ctx.n(); ++i) lcmX[i] = std::max(ea[ctx.m() + i], eb[ctx.m() + i]);
  Degree lx = ctx.grading().weigh(lcmX);
  const Degree& shift = ctx.grading().shift(static_cast<std::size_t>(space.component(ltA)));
  for (std::size_t k = 0; k < lx.size(); ++k) lx[k] += shift[k];
  return top(sugarA - xDegree(space, ltA), sugarB - xDegree(space, ltB)) + lx;
}

}  // namespace detail

/// sugar(A, B) = deg_W-bar(S(A^sw, B^sw)).
template <class F>
Degree pairSugar(const BasisElement<F>& a, const BasisElement<F>& b) {
  if (a.vector.isZero() || b.vector.isZero()) throw DomainError("pair sugar of a zero vector");
  detail::requireSameSpace(a.vector, b.vector, "pairSugar");
  const auto& space = *a.vector.space();
  if (space.component(a.vector.packed(0)) != space.component(b.vector.packed(0)))
    throw DomainError("pair sugar of leading terms on different components");
  return detail::pairSugarPacked(space, a.sugar, a.vector.packed(0), b.sugar, b.vector.packed(0));
}

/// Builds a basis element from a vector and its sugar, deriving the sweetener.
template <class F>
BasisElement<F> makeBasisElement(ModuleVector<F> v, Degree sugar, std::size_t birth) {
  Degree sweetener = sugar - saturatedDegree(v);
  return BasisElement<F>{std::move(v), std::move(sweetener), std::move(sugar), birth};
}

}  // namespace satgb
