#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <satgb/satgb.hpp>

namespace satgb::testing {

/// Parses `text` (one polynomial, or [p, q] for rank > 1) as a vector of
/// `space`. Indeterminates are the space's slot names, y's first.
template <class F>
ModuleVector<F> vec(const ModulePtr<F>& space, const std::string& text) {
  const auto& ctx = space->context();
  std::string src = "ring ";
  for (std::size_t i = 0; i < ctx.slots(); ++i) src += (i ? ", " : "") + ctx.slotName(i);
  src += " over Q;";
  if (ctx.rank() > 1) src += " module " + std::to_string(ctx.rank()) + ";";
  src += " gens: " + text + ";";
  ProblemSpec p = parseSystem(src);
  const F& field = space->field();
  std::vector<std::pair<typename F::Element, ModuleTerm>> summands;
  for (const auto& [key, c] : p.generators.at(0))
    summands.emplace_back(field.fromRational(c), ModuleTerm{PowerProduct(key.second), key.first});
  return ModuleVector<F>::fromTerms(space, std::move(summands));
}

template <class F>
std::vector<ModuleVector<F>> vecs(const ModulePtr<F>& space, const std::vector<std::string>& texts) {
  std::vector<ModuleVector<F>> out;
  for (const auto& t : texts) out.push_back(vec(space, t));
  return out;
}

template <class F>
ModuleVector<F> monic(ModuleVector<F> v) {
  v.makeMonic();
  return v;
}

inline std::vector<std::string> names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

/// A random vector over `space`: up to `terms` summands, total x-degree at
/// most `maxDeg`, coefficients in [-c, c].
template <class F>
ModuleVector<F> randomVector(const ModulePtr<F>& space, std::mt19937_64& rng, int terms, int maxDeg, int c = 5,
                             int maxY = 0) {
  const auto& ctx = space->context();
  const F& field = space->field();
  std::uniform_int_distribution<int> coeff(-c, c);
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_int_distribution<int> deg(0, maxDeg);
  std::uniform_int_distribution<int> ydeg(0, maxY);
  std::uniform_int_distribution<std::size_t> var(0, ctx.n() - 1);
  std::uniform_int_distribution<std::size_t> comp(0, ctx.rank() - 1);
  std::vector<std::pair<typename F::Element, ModuleTerm>> s;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Exponent> e(ctx.slots(), 0);
    for (std::size_t j = 0; j < ctx.m(); ++j) e[j] = ydeg(rng);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[ctx.m() + var(rng)];
    int a = coeff(rng);
    if (a == 0) a = 1;
    s.emplace_back(field.fromInteger(a), ModuleTerm{PowerProduct(std::move(e)), comp(rng)});
  }
  return ModuleVector<F>::fromTerms(space, std::move(s));
}

/// A random homogeneous vector of the homogenized `space`: random terms are
/// padded with y's up to a common degree.
template <class F>
ModuleVector<F> randomHomogeneous(const ModulePtr<F>& space, std::mt19937_64& rng, int terms, int maxDeg,
                                  int extraY = 2) {
  const auto& ctx = space->context();
  auto plainSpace = FreeModule<F>::create(space->field(), ctx.plainContext(), space->sigma());
  ModuleVector<F> v;
  do v = randomVector(plainSpace, rng, terms, maxDeg);
  while (v.isZero());
  ModuleVector<F> h = homogenize(v, space);
  std::uniform_int_distribution<int> y(0, extraY);
  std::vector<Exponent> e(ctx.slots(), 0);
  for (std::size_t j = 0; j < ctx.m(); ++j) e[j] = y(rng);
  return h.multiplied(PowerProduct(std::move(e)));
}

template <class F>
std::vector<ModuleVector<F>> nonzero(const std::vector<ModuleVector<F>>& vs) {
  std::vector<ModuleVector<F>> out;
  for (const auto& v : vs)
    if (!v.isZero()) out.push_back(v);
  return out;
}

template <class F>
std::vector<std::string> strings(const std::vector<ModuleVector<F>>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.toString());
  return out;
}

inline std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline std::vector<Exponent> bracketed(const std::string& line) {
  auto open = line.find('['), close = line.find(']');
  std::istringstream is(line.substr(open + 1, close - open - 1));
  std::vector<Exponent> out;
  for (Exponent e; is >> e;) out.push_back(e);
  return out;
}

/// Recomputes every inserted element's sugar from the transcript alone and
/// returns the number of mismatches with the engine's values.
template <class F>
int sugarReplayMismatches(const GBResult<F>& run, const std::vector<ModuleVector<F>>& gens) {
  std::vector<ModuleVector<F>> distinct;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    ModuleVector<F> mono = monic(g);
    if (std::find(distinct.begin(), distinct.end(), mono) == distinct.end()) distinct.push_back(mono);
  }
  const auto& space = *run.basis.front().vector.space();
  const auto& ctx = space.context();
  const std::size_t m = ctx.m();
  int mismatches = 0;
  Degree sugar, deg;
  for (const auto& line : run.transcript.lines()) {
    auto w = words(line);
    if (w[0] == "GEN") {
      const auto& g = distinct.at(std::stoul(w[1]));
      sugar = initSugar(g).sugar;
      deg = ctx.isHomogenized() ? degreeOf(g) : topDeg(g);
    } else if (w[0] == "PAIR") {
      const auto& a = run.basis.at(std::stoul(w[1]));
      const auto& b = run.basis.at(std::stoul(w[2]));
      sugar = pairSugar(a, b);
      deg = degW(ModuleTerm{ppLcm(a.vector.leadingTerm().pp, b.vector.leadingTerm().pp),
                            a.vector.leadingTerm().component},
                 ctx);
    } else if (w[0] == "REDSTEP") {
      auto e = bracketed(line);
      PowerProduct t(std::vector<Exponent>(e.begin() + static_cast<std::ptrdiff_t>(m), e.end()));
      sugar = reductionSugar(sugar, t, run.basis.at(std::stoul(w[1])).sugar, ctx.grading());
    } else if (w[0] == "YMUL") {
      auto y = bracketed(line);
      for (std::size_t k = 0; k < m; ++k) deg[k] += y[k];
      sugar = top(sugar, deg);
    } else if (w[0] == "ADD") {
      const auto& e = run.basis.at(std::stoul(w[1]));
      auto printed = bracketed(line);
      if (Degree(printed.begin(), printed.end()) != sugar || e.sugar != sugar) ++mismatches;
      if (!dominatedBy(ctx.isHomogenized() ? degreeOf(e.vector) : topDeg(e.vector), e.sugar)) ++mismatches;
    }
  }
  return mismatches;
}

}  // namespace satgb::testing
