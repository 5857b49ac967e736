#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "satgb/free_module.hpp"
#include "satgb/homogenization.hpp"
#include "satgb/strategy.hpp"
#include "satgb/sugar.hpp"

namespace satgb {

struct CriticalPair {
  std::size_t left = 0;
  std::size_t right = 0;
  ModuleTerm lcmTerm;
  Degree sugar;
  Degree degree;
  std::size_t birth = 0;
};

struct RunStats {
  std::size_t gbLen = 0;
  std::size_t polyRed = 0;
  std::size_t pairsIns = 0;
  double wallTime = 0.0;

  /// Equality ignoring wallTime.
  bool sameCounters(const RunStats& o) const {
    return gbLen == o.gbLen && polyRed == o.polyRed && pairsIns == o.pairsIns;
  }
};

template <class F>
struct GBResult {
  std::vector<BasisElement<F>> basis;
  std::vector<ModuleVector<F>> reduced;
  RunStats stats;
  Transcript transcript;
};

/// S(u,v) = lcm/(c_u t_u) u - lcm/(c_v t_v) v.
template <class F>
ModuleVector<F> sVector(const ModuleVector<F>& u, const ModuleVector<F>& v) {
  detail::requireSameSpace(u, v, "sVector");
  if (u.isZero() || v.isZero()) throw DomainError("S-vector of a zero vector");
  const auto& space = *u.space();
  const F& field = space.field();
  const std::int32_t* a = u.packed(0);
  const std::int32_t* b = v.packed(0);
  if (space.component(a) != space.component(b)) throw DomainError("S-vector of leading terms on different components");
  const std::int32_t* ea = space.exps(a);
  const std::int32_t* eb = space.exps(b);
  std::vector<Exponent> tu(space.slots()), tv(space.slots());
  for (std::size_t i = 0; i < space.slots(); ++i) {
    Exponent l = std::max(ea[i], eb[i]);
    tu[i] = l - ea[i];
    tv[i] = l - eb[i];
  }
  return vectorCombine(field.inverse(u.leadingCoefficient()), PowerProduct(std::move(tu)), u,
                       field.neg(field.inverse(v.leadingCoefficient())), PowerProduct(std::move(tv)), v);
}

namespace detail {


template <class F>
struct Reducer {
  const ModuleVector<F>* vector;
  std::size_t id;
  std::uint64_t mask;
  /// Null when sugar is not tracked.
  const Degree* sugar;
};

/// h := h[pos+1..] - c * mul * g[1..], the leading terms cancelling.
template <class F>
void cancelLead(ModuleVector<F>& h, std::size_t pos, const typename F::Element& c, const Multiplier& mul,
                const ModuleVector<F>& g, ModuleVector<F>& out, std::vector<std::int32_t>& tg) {
  const auto& space = *h.space();
  const F& field = space.field();
  out.clear();
  out.reserve(h.size() - pos + g.size());
  auto& hc = h.rawCoefficients();
  std::size_t i = pos + 1, j = 1;
  const std::size_t nh = h.size(), ng = g.size();
  typename F::Element scratch{};
  if (j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
  while (i < nh || j < ng) {
    int cmp = i >= nh ? -1 : j >= ng ? 1 : space.comparePacked(h.packed(i), tg.data());
    if (cmp > 0) {
      out.pushBack(std::move(hc[i]), h.packed(i));
      ++i;
    } else if (cmp < 0) {
      out.pushBack(field.neg(field.mul(c, g.coefficient(j))), tg.data());
      if (++j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
    } else {
      field.subMul(hc[i], c, g.coefficient(j), scratch);
      if (!field.isZero(hc[i])) out.pushBack(std::move(hc[i]), h.packed(i));
      ++i;
      if (++j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
    }
  }
  std::swap(h, out);
}

/// Fraction-free variant over Q: h := a*h[pos+1..] - c*mul*g[1..] on integer
/// coefficients, with `done` (the irreducible prefix) scaled by a as well.
template <class F>
void cancelLeadIntegral(ModuleVector<F>& h, std::size_t pos, ModuleVector<F>& done, const typename F::Element& a,
                        const typename F::Element& c, const Multiplier& mul, const ModuleVector<F>& g,
                        ModuleVector<F>& out, std::vector<std::int32_t>& tg) {
  const auto& space = *h.space();
  const F& field = space.field();
  const bool scaleH = !field.isOne(a);
  if (scaleH)
    for (auto& x : done.rawCoefficients()) field.intScale(x, a);
  out.clear();
  out.reserve(h.size() - pos + g.size());
  auto& hc = h.rawCoefficients();
  std::size_t i = pos + 1, j = 1;
  const std::size_t nh = h.size(), ng = g.size();
  if (j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
  while (i < nh || j < ng) {
    int cmp = i >= nh ? -1 : j >= ng ? 1 : space.comparePacked(h.packed(i), tg.data());
    if (cmp > 0) {
      if (scaleH) field.intScale(hc[i], a);
      out.pushBack(std::move(hc[i]), h.packed(i));
      ++i;
    } else if (cmp < 0) {
      out.pushBack(field.intNegMul(c, g.coefficient(j)), tg.data());
      if (++j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
    } else {
      if (scaleH) field.intScale(hc[i], a);
      field.intSubMul(hc[i], c, g.coefficient(j));
      if (!field.isZero(hc[i])) out.pushBack(std::move(hc[i]), h.packed(i));
      ++i;
      if (++j < ng) space.multiplyPacked(g.packed(j), mul, tg.data());
    }
  }
  std::swap(h, out);
}

/// The division algorithm with the remainder strategies of the engine.
///
/// Over Q the reduction is fraction-free, so outputs are scalar multiples of
/// a remainder unless `exact` is set (callers that normalise afterwards do
/// not need it).
template <class F>
class Division {
 public:
  Division(ModulePtr<F> space, const StrategyConfig& cfg, bool exact = false, ModulePtr<F> plain = nullptr)
      : space_(std::move(space)),
        cfg_(cfg),
        exact_(exact),
        plain_(std::move(plain)),
        scratch_(space_),
        tg_(space_->stride()) {
    const auto& ctx = space_->context();
    if (ctx.isHomogenized() && ctx.m() > 1 && !plain_)
      plain_ = FreeModule<F>::create(space_->field(), ctx.plainContext(), space_->sigma());
  }

  /// Reducers are tried in insertion order.
  void append(const ModuleVector<F>* v, std::size_t id, const Degree* sugar = nullptr) {
    v = prepared(v, id);
    reducers_.push_back({v, id, space_->divMask(v->packed(0)), sugar});
  }

  /// Keeps reducers sorted by (sugar, id).
  void insertBySugar(const ModuleVector<F>* v, std::size_t id, const Degree* sugar) {
    v = prepared(v, id);
    Reducer<F> r{v, id, space_->divMask(v->packed(0)), sugar};
    auto it = std::upper_bound(reducers_.begin(), reducers_.end(), r, [&](const Reducer<F>& a, const Reducer<F>& b) {
      if (*a.sugar != *b.sugar) return *a.sugar < *b.sugar;
      return a.id < b.id;
    });
    reducers_.insert(it, r);
  }

  /// The stored form of reducer `id` (primitive over Q), or null.
  const ModuleVector<F>* stored(std::size_t id) const noexcept { return id < byId_.size() ? byId_[id] : nullptr; }

  const std::vector<Reducer<F>>& reducers() const noexcept { return reducers_; }

  std::optional<std::size_t> find(const std::int32_t* term) const {
    const std::uint64_t mask = space_->divMask(term);
    for (std::size_t k = 0; k < reducers_.size(); ++k) {
      const auto& r = reducers_[k];
      if ((r.mask & ~mask) == 0 && space_->dividesPacked(r.vector->packed(0), term)) return k;
    }
    return std::nullopt;
  }

  /// Reduces h following the configured remainder mode. `sugar` (may be null)
  /// is updated through every step; `transcript` (may be null) records them.
  ModuleVector<F> reduce(ModuleVector<F> h, Degree* sugar, Transcript* transcript) {
    scale_ = space_->field().one();
    ModuleVector<F> r = reduceScaled(std::move(h), sugar, transcript);
    if constexpr (F::kFractionFree) {
      if (exact_ && !r.isZero()) r.scale(space_->field().inverse(scale_));
    }
    return r;
  }

  /// Plain division: no substitutions, no saturation.
  ModuleVector<F> plainRemainder(ModuleVector<F> h) { return divide(std::move(h), nullptr, nullptr, false); }

  std::size_t steps() const noexcept { return steps_; }

 private:
  const ModuleVector<F>* prepared(const ModuleVector<F>* v, std::size_t id) {
    if (v->isZero()) throw DomainError("zero reducer");
    if constexpr (F::kFractionFree) {
      primitive_.push_back(*v);
      space_->field().makePrimitive(primitive_.back().rawCoefficients());
      v = &primitive_.back();
    }
    if (byId_.size() <= id) byId_.resize(id + 1, nullptr);
    byId_[id] = v;
    return v;
  }

  ModuleVector<F> reduceScaled(ModuleVector<F> h, Degree* sugar, Transcript* transcript) {
    const bool homogenized = space_->context().isHomogenized();
    if (cfg_.remainderMode != RemainderMode::kPlain && homogenized && !isHomogeneous(h))
      throw DomainError("weakly saturating remainder of a non-homogeneous vector");
    ModuleVector<F> r = divide(std::move(h), sugar, transcript, cfg_.remainderMode == RemainderMode::kWeakSat);
    if (r.isZero() || !homogenized) return r;

    bool saturate = cfg_.saturatesFinal();
    if (cfg_.remainderMode == RemainderMode::kWeakSat && cfg_.weakSatPolicy == WeakSatPolicy::kCustom &&
        cfg_.customHook) {
      WeakSatStepInfo info{hookCalls_++, true, space_->context().m(), degreeOf(r), headY(r, 0)};
      saturate = cfg_.customHook(info).kind == WeakSatAction::Kind::kSaturate;
    }
    if (!saturate) return r;
    for (;;) {
      ModuleVector<F> s = saturateVector(r, plain_);
      if (s == r) break;
      if (transcript) transcript->add("SAT");
      r = std::move(s);
      if (cfg_.depth != ReductionDepth::kFull) break;
      // The head stays irreducible; only the tail can have become reducible.
      r = divide(std::move(r), sugar, transcript, false);
    }
    return r;
  }

  std::vector<Exponent> headY(const ModuleVector<F>& h, std::size_t pos) const {
    const std::int32_t* e = space_->exps(h.packed(pos));
    return std::vector<Exponent>(e, e + space_->context().m());
  }

  void tick() {
    if (cfg_.deadline && (++ticks_ & 63) == 0 && std::chrono::steady_clock::now() > *cfg_.deadline)
      throw TimeoutError("time budget exceeded");
  }

  void multiplyY(ModuleVector<F>& h, const std::vector<Exponent>& y, Degree* sugar, Transcript* transcript) {
    std::vector<Exponent> exps(space_->slots(), 0);
    std::copy(y.begin(), y.end(), exps.begin());
    h = h.multiplied(PowerProduct(std::move(exps)));
    if (sugar && !h.isZero()) *sugar = top(*sugar, degreeOf(h));
    if (transcript) transcript->add("YMUL " + toString(y));
  }

  /// Minimal y-power making the head reducible by a reducer whose x-part divides it.
  std::optional<std::vector<Exponent>> yMultiplierFor(const std::int32_t* lead) const {
    const std::size_t m = space_->context().m(), slots = space_->slots();
    const std::int32_t* e = space_->exps(lead);
    std::optional<std::vector<Exponent>> best;
    std::int64_t bestSum = 0;
    std::vector<Exponent> need(m);
    for (const auto& r : reducers_) {
      const std::int32_t* g = r.vector->packed(0);
      if (space_->component(g) != space_->component(lead)) continue;
      const std::int32_t* ge = space_->exps(g);
      bool divides = true;
      for (std::size_t i = m; i < slots && divides; ++i) divides = ge[i] <= e[i];
      if (!divides) continue;
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < m; ++k) {
        need[k] = std::max(0, ge[k] - e[k]);
        sum += need[k];
      }
      if (!best || sum < bestSum || (sum == bestSum && need < *best)) {
        best = need;
        bestSum = sum;
      }
    }
    return best;
  }

  ModuleVector<F> divide(ModuleVector<F> h, Degree* sugar, Transcript* transcript, bool substitutions) {
    const auto& space = *space_;
    const F& field = space.field();
    const std::size_t K = space.keyLength(), slots = space.slots();
    const std::size_t m = space.context().m();
    const bool trackSugar = sugar != nullptr;
    const bool custom = substitutions && cfg_.weakSatPolicy == WeakSatPolicy::kCustom && cfg_.customHook;
    const bool yMultiply = substitutions && cfg_.weakSatPolicy == WeakSatPolicy::kYMultiplyToReduce;

    ModuleVector<F> done(space_);
    Multiplier mul;
    mul.key.resize(K);
    mul.exps.resize(slots);
    [[maybe_unused]] typename F::Element a{}, c{};
    [[maybe_unused]] std::size_t sinceContent = 0;
    if constexpr (F::kFractionFree) scale_ *= field.makePrimitive(h.rawCoefficients());
    std::size_t pos = 0;
    bool head = true;
    while (pos < h.size()) {
      tick();
      if (head && custom) {
        WeakSatStepInfo info{hookCalls_++, false, m, degreeOf(h), headY(h, 0)};
        WeakSatAction action = cfg_.customHook(info);
        if (action.kind == WeakSatAction::Kind::kSaturate) {
          ModuleVector<F> s = saturateVector(h, plain_);
          if (!(s == h)) {
            if (transcript) transcript->add("SAT");
            h = std::move(s);
          }
        } else if (action.kind == WeakSatAction::Kind::kMultiplyY) {
          if (action.yPower.size() != m) throw StructuralError("hook y-power has the wrong length");
          if (std::any_of(action.yPower.begin(), action.yPower.end(), [](Exponent e) { return e != 0; }))
            multiplyY(h, action.yPower, sugar, transcript);
        }
      }
      std::optional<std::size_t> k = find(h.packed(pos));
      if (!k && head && yMultiply) {
        if (auto y = yMultiplierFor(h.packed(pos))) {
          multiplyY(h, *y, sugar, transcript);
          k = find(h.packed(pos));
        }
      }
      if (k) {
        const Reducer<F>& r = reducers_[*k];
        const std::int32_t* lead = h.packed(pos);
        const std::int32_t* g = r.vector->packed(0);
        for (std::size_t i = 0; i < K; ++i) mul.key[i] = lead[i] - g[i];
        for (std::size_t i = 0; i < slots; ++i) mul.exps[i] = lead[K + 1 + i] - g[K + 1 + i];
        if (trackSugar && r.sugar)
          *sugar = top(*sugar, space.context().grading().weigh(std::span<const Exponent>(mul.exps).subspan(m)) +
                                   *r.sugar);
        if (transcript) transcript->add("REDSTEP " + std::to_string(r.id) + " " + toString(mul.exps));
        if constexpr (F::kFractionFree) {
          field.cofactors(h.coefficient(pos), r.vector->leadingCoefficient(), a, c);
          scale_ *= a;
          cancelLeadIntegral(h, pos, done, a, c, mul, *r.vector, scratch_, tg_);
          if (++sinceContent >= kContentPeriod) {
            sinceContent = 0;
            scale_ /= field.removeContent(done.rawCoefficients(), h.rawCoefficients());
          }
        } else {
          c = field.div(h.coefficient(pos), r.vector->leadingCoefficient());
          cancelLead(h, pos, c, mul, *r.vector, scratch_, tg_);
        }
        pos = 0;
        ++steps_;
        continue;
      }
      if (cfg_.depth == ReductionDepth::kHeadOnly) break;
      head = false;
      done.pushBack(std::move(h.rawCoefficients()[pos]), h.packed(pos));
      ++pos;
    }
    if (!(done.isZero() && pos == 0))
      for (std::size_t i = pos; i < h.size(); ++i) done.pushBack(std::move(h.rawCoefficients()[i]), h.packed(i));
    else
      done = std::move(h);
    if constexpr (F::kFractionFree) scale_ /= field.removeContent(done.rawCoefficients(), {});
    return done;
  }

  static constexpr std::size_t kContentPeriod = 4;

  ModulePtr<F> space_;
  const StrategyConfig& cfg_;
  bool exact_;
  ModulePtr<F> plain_;
  std::vector<Reducer<F>> reducers_;
  std::deque<ModuleVector<F>> primitive_;
  std::vector<const ModuleVector<F>*> byId_;
  typename F::Element scale_{};
  ModuleVector<F> scratch_;
  std::vector<std::int32_t> tg_;
  std::size_t hookCalls_ = 0;
  std::size_t steps_ = 0;
  std::uint64_t ticks_ = 0;
};

}  // namespace detail

/// A remainder of v by G; reducers are tried in the order of G.
template <class F>
ModuleVector<F> remainder(const ModuleVector<F>& v, std::span<const ModuleVector<F>> G,
                          ReductionDepth depth = ReductionDepth::kFull) {
  if (v.isZero()) return v;
  StrategyConfig cfg;
  cfg.remainderMode = RemainderMode::kPlain;
  cfg.depth = depth;
  detail::Division<F> div(v.space(), cfg, true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    detail::requireSameSpace(v, G[i], "remainder");
    if (!G[i].isZero()) div.append(&G[i], i);
  }
  return div.reduce(v, nullptr, nullptr);
}

/// Division interleaved with same-saturation substitutions chosen by `policy`
/// (the hook is consulted for WeakSatPolicy::kCustom).
template <class F>
ModuleVector<F> weakSatRemainder(const ModuleVector<F>& v, std::span<const ModuleVector<F>> G, WeakSatPolicy policy,
                                 const WeakSatHook& hook = {}, Transcript* transcript = nullptr) {
  if (!v.space()->context().isHomogenized()) throw DomainError("WeakSatRem needs a homogenized module");
  if (!isHomogeneous(v)) throw DomainError("WeakSatRem of a non-homogeneous vector");
  if (v.isZero()) return v;
  StrategyConfig cfg = StrategyConfig::weakSat(policy);
  cfg.customHook = hook;
  detail::Division<F> div(v.space(), cfg, true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    detail::requireSameSpace(v, G[i], "weakSatRemainder");
    if (!isHomogeneous(G[i])) throw DomainError("WeakSatRem by a non-homogeneous vector");
    if (!G[i].isZero()) div.append(&G[i], i);
  }
  return div.reduce(v, nullptr, transcript);
}

/// (Rem(V, G))^sat.
template <class F>
ModuleVector<F> satRemainder(const ModuleVector<F>& v, std::span<const ModuleVector<F>> G) {
  if (!v.space()->context().isHomogenized()) throw DomainError("SatRem needs a homogenized module");
  if (v.isZero()) return v;
  return saturateVector(remainder(v, G));
}

namespace detail {

/// Monic tail-reduced copies of `kept`, whose leading terms must be pairwise
/// non-divisible and sorted ascending.
template <class F>
std::vector<ModuleVector<F>> reduceTails(const std::vector<ModuleVector<F>>& kept,
                                         std::optional<std::chrono::steady_clock::time_point> deadline) {
  std::vector<ModuleVector<F>> out;
  if (kept.empty()) return out;
  out.reserve(kept.size());
  StrategyConfig cfg;
  cfg.remainderMode = RemainderMode::kPlain;
  cfg.deadline = deadline;
  // No element divides a term of its own tail, so one division serves all.
  Division<F> div(kept.front().space(), cfg, true);
  for (std::size_t j = 0; j < kept.size(); ++j) div.append(&kept[j], j);
  const F& field = kept.front().space()->field();
  for (const auto& g : kept) {
    ModuleVector<F> tail(g.space());
    for (std::size_t k = 1; k < g.size(); ++k) tail.pushBack(g.coefficient(k), g.packed(k));
    tail = div.reduce(std::move(tail), nullptr, nullptr);
    const auto inv = field.inverse(g.leadingCoefficient());
    ModuleVector<F> r(g.space());
    r.reserve(tail.size() + 1);
    r.pushBack(field.one(), g.packed(0));
    for (std::size_t k = 0; k < tail.size(); ++k) r.pushBack(field.mul(tail.coefficient(k), inv), tail.packed(k));
    out.push_back(std::move(r));
  }
  return out;
}

template <class F>
std::vector<ModuleVector<F>> sortedNonzero(std::span<const ModuleVector<F>> G) {
  std::vector<ModuleVector<F>> sorted;
  for (const auto& g : G)
    if (!g.isZero()) sorted.push_back(g);
  if (sorted.empty()) return sorted;
  const auto& space = *sorted.front().space();
  for (const auto& g : sorted) requireSameSpace(sorted.front(), g, "interreduce");
  std::stable_sort(sorted.begin(), sorted.end(), [&](const ModuleVector<F>& a, const ModuleVector<F>& b) {
    return space.comparePacked(a.packed(0), b.packed(0)) < 0;
  });
  return sorted;
}

/// interreduce for a set known to be a Groebner basis: elements with a
/// divisible leading term are redundant and dropped unreduced.
template <class F>
std::vector<ModuleVector<F>> interreduceBasis(std::span<const ModuleVector<F>> G,
                                              std::optional<std::chrono::steady_clock::time_point> deadline) {
  auto sorted = sortedNonzero(G);
  if (sorted.empty()) return sorted;
  const auto& space = *sorted.front().space();
  std::vector<ModuleVector<F>> kept;
  for (auto& g : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ModuleVector<F>& k) {
      return space.dividesPacked(k.packed(0), g.packed(0));
    });
    if (!redundant) kept.push_back(std::move(g));
  }
  return reduceTails(kept, deadline);
}

}  // namespace detail

/// Monic, auto-reduced, sorted ascending by leading term. Zero vectors are
/// dropped. Elements whose leading term is divisible by another's are reduced
/// and fed back until no leading term divides another.
/// Throws TimeoutError once `deadline` has passed.
template <class F>
std::vector<ModuleVector<F>> interreduce(std::span<const ModuleVector<F>> G,
                                         std::optional<std::chrono::steady_clock::time_point> deadline = {}) {
  auto work = detail::sortedNonzero(G);
  if (work.empty()) return work;
  const auto& space = *work.front().space();
  std::vector<ModuleVector<F>> kept;
  for (;;) {
    kept.clear();
    std::vector<ModuleVector<F>> pending;
    for (auto& g : work) {
      bool divisible = std::any_of(kept.begin(), kept.end(), [&](const ModuleVector<F>& k) {
        return space.dividesPacked(k.packed(0), g.packed(0));
      });
      if (!divisible) {
        kept.push_back(std::move(g));
        continue;
      }
      auto r = remainder<F>(g, kept);
      if (!r.isZero()) pending.push_back(std::move(r));
    }
    if (pending.empty()) break;
    for (auto& k : kept) pending.push_back(std::move(k));
    work = detail::sortedNonzero<F>(pending);
  }
  return detail::reduceTails(kept, deadline);
}

/// Buchberger's criterion: every same-component S-vector reduces to zero.
template <class F>
bool isGroebnerBasis(std::span<const ModuleVector<F>> G) {
  std::vector<const ModuleVector<F>*> nz;
  for (const auto& g : G)
    if (!g.isZero()) nz.push_back(&g);
  if (nz.empty()) return true;
  StrategyConfig cfg;
  cfg.remainderMode = RemainderMode::kPlain;
  cfg.depth = ReductionDepth::kHeadOnly;
  detail::Division<F> div(nz.front()->space(), cfg);
  for (std::size_t i = 0; i < nz.size(); ++i) {
    detail::requireSameSpace(*nz.front(), *nz[i], "isGroebnerBasis");
    div.append(nz[i], i);
  }
  const auto& space = *nz.front()->space();
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      if (space.component(nz[i]->packed(0)) != space.component(nz[j]->packed(0))) continue;
      if (!div.plainRemainder(sVector(*nz[i], *nz[j])).isZero()) return false;
    }
  return true;
}

namespace detail {

template <class F>
class Engine {
 public:
  Engine(ModulePtr<F> space, StrategyConfig cfg)
      : space_(std::move(space)), cfg_(std::move(cfg)), division_(space_, cfg_), tasks_(TaskLess{this}) {
    const auto& ctx = space_->context();
    if (!ctx.grading().positive()) throw RefusedError("grading is not positive: termination is not guaranteed");
    if (!ctx.isHomogenized()) {
      if (!isPositiveMatrix(space_->order().rows()))
        throw RefusedError("term ordering is not a well-ordering: termination is not guaranteed");
      if (cfg_.remainderMode != RemainderMode::kPlain)
        throw DomainError("saturating remainders need a homogenized module");
    }
  }

  GBResult<F> run(std::span<const ModuleVector<F>> gens) {
    const auto start = std::chrono::steady_clock::now();
    Transcript* tr = cfg_.recordTranscript ? &result_.transcript : nullptr;
    const bool homogenized = space_->context().isHomogenized();

    for (const auto& g : gens) {
      if (!g.space() || !g.space()->sameAs(*space_)) throw StructuralError("generator lives in a different module");
      if (g.isZero()) continue;
      if (homogenized && !isHomogeneous(g)) throw DomainError("generator is not homogeneous");
      ModuleVector<F> monic = g;
      monic.makeMonic();
      if (std::any_of(gens_.begin(), gens_.end(), [&](const ModuleVector<F>& o) { return o == monic; })) continue;
      gens_.push_back(std::move(monic));
    }
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      Task t;
      t.isPair = false;
      t.a = k;
      t.sugar = initSugar(gens_[k]).sugar;
      t.degree = termDegree(gens_[k].packed(0));
      t.lcm.assign(gens_[k].packed(0), gens_[k].packed(0) + space_->stride());
      t.birth = births_++;
      tasks_.insert(std::move(t));
    }

    while (!tasks_.empty()) {
      checkDeadline();
      Task task = std::move(tasks_.extract(tasks_.begin()).value());
      ModuleVector<F> w;
      Degree sugar = task.sugar;
      if (task.isPair) {
        if (tr) tr->add("PAIR " + std::to_string(task.a) + " " + std::to_string(task.b));
        w = pairVector(task.a, task.b);
        ++result_.stats.polyRed;
      } else {
        if (tr) tr->add("GEN " + std::to_string(task.a));
        w = gens_[task.a];
      }
      ModuleVector<F> v = division_.reduce(std::move(w), &sugar, tr);
      if (v.isZero()) {
        if (tr) tr->add("ZERO");
        continue;
      }
      v.makeMonic();
      add(std::move(v), std::move(sugar), tr);
    }

    result_.basis.assign(basis_.begin(), basis_.end());
    std::vector<ModuleVector<F>> vs;
    vs.reserve(basis_.size());
    for (const auto& b : basis_) vs.push_back(b.vector);
    result_.reduced = interreduceBasis<F>(vs, cfg_.deadline);
    result_.stats.gbLen = result_.reduced.size();
    result_.stats.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(result_);
  }

 private:
  struct Task {
    bool isPair = false;
    std::size_t a = 0, b = 0;
    Degree sugar, degree;
    std::vector<std::int32_t> lcm;
    std::size_t birth = 0;
  };

  struct TaskLess {
    const Engine* engine;
    bool operator()(const Task& x, const Task& y) const {
      const Selection sel = engine->cfg_.selection;
      if (sel == Selection::kBySugar && x.sugar != y.sugar) return x.sugar < y.sugar;
      if (sel != Selection::kByInsertion) {
        if (x.degree != y.degree) return x.degree < y.degree;
        int c = engine->space_->comparePacked(x.lcm.data(), y.lcm.data());
        if (c != 0) return c < 0;
      }
      return x.birth < y.birth;
    }
  };

  struct Candidate {
    std::size_t g;
    std::vector<std::int32_t> lcm;
    bool coprime;
  };

  /// The S-vector of basis elements a and b up to a non-zero scalar. Over Q it
  /// is formed from the integer copies the division keeps.
  ModuleVector<F> pairVector(std::size_t a, std::size_t b) const {
    if constexpr (F::kFractionFree) {
      const ModuleVector<F>& u = *division_.stored(a);
      const ModuleVector<F>& v = *division_.stored(b);
      const F& field = space_->field();
      typename F::Element cu, cv;
      field.cofactors(v.leadingCoefficient(), u.leadingCoefficient(), cv, cu);
      const std::int32_t* eu = space_->exps(u.packed(0));
      const std::int32_t* ev = space_->exps(v.packed(0));
      std::vector<Exponent> tu(space_->slots()), tv(space_->slots());
      for (std::size_t i = 0; i < space_->slots(); ++i) {
        Exponent l = std::max(eu[i], ev[i]);
        tu[i] = l - eu[i];
        tv[i] = l - ev[i];
      }
      return vectorCombine(cu, PowerProduct(std::move(tu)), u, field.neg(cv), PowerProduct(std::move(tv)), v);
    } else {
      return sVector(basis_[a].vector, basis_[b].vector);
    }
  }

  void checkDeadline() const {
    if (cfg_.deadline && std::chrono::steady_clock::now() > *cfg_.deadline)
      throw TimeoutError("time budget exceeded");
  }

  Degree termDegree(const std::int32_t* w) const {
    const std::size_t m = space_->context().m();
    if (m > 0) return Degree(w, w + m);
    return xDegree(*space_, w);
  }

  /// Packed lcm of two packed terms on the same component.
  std::vector<std::int32_t> lcmPacked(const std::int32_t* a, const std::int32_t* b) const {
    const std::size_t slots = space_->slots();
    const std::int32_t* ea = space_->exps(a);
    const std::int32_t* eb = space_->exps(b);
    std::vector<Exponent> e(slots);
    for (std::size_t i = 0; i < slots; ++i) e[i] = std::max(ea[i], eb[i]);
    std::vector<std::int32_t> out(space_->stride());
    space_->pack(ModuleTerm{PowerProduct(std::move(e)), static_cast<std::size_t>(space_->component(a))}, out.data());
    return out;
  }

  bool coprime(const std::int32_t* a, const std::int32_t* b) const {
    const std::int32_t* ea = space_->exps(a);
    const std::int32_t* eb = space_->exps(b);
    for (std::size_t i = 0; i < space_->slots(); ++i)
      if (ea[i] > 0 && eb[i] > 0) return false;
    return true;
  }

  bool sameExps(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) const {
    return std::equal(a.begin() + static_cast<std::ptrdiff_t>(space_->keyLength()), a.end(),
                      b.begin() + static_cast<std::ptrdiff_t>(space_->keyLength()));
  }

  void add(ModuleVector<F> v, Degree sugar, Transcript* tr) {
    const std::size_t h = basis_.size();
    const std::int32_t* lt = v.packed(0);
    for (const auto& b : basis_)
      if (space_->dividesPacked(b.vector.packed(0), lt))
        throw std::logic_error("internal: new basis element has a reducible leading term");
    Degree deg = space_->context().isHomogenized() ? degreeOf(v) : topDeg(v);
    if (!dominatedBy(deg, sugar)) throw std::logic_error("internal: sugar below the degree of its vector");

    basis_.push_back(makeBasisElement(std::move(v), std::move(sugar), h));
    active_.push_back(false);
    const BasisElement<F>& e = basis_.back();
    if (tr)
      tr->add("ADD " + std::to_string(h) + " SUGAR " + satgb::toString(e.sugar) + " LT " +
              space_->termToString(e.vector.packed(0)));
    division_.insertBySugar(&e.vector, h, &e.sugar);
    updatePairs(h);
  }

  void updatePairs(std::size_t h) {
    const std::int32_t* lth = basis_[h].vector.packed(0);
    const std::int32_t comp = space_->component(lth);
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      const std::int32_t* ltg = basis_[g].vector.packed(0);
      if (space_->component(ltg) != comp) continue;
      cands.push_back({g, lcmPacked(ltg, lth), coprime(ltg, lth)});
    }
    result_.stats.pairsIns += cands.size();

    std::vector<const Candidate*> keep;
    if (cfg_.chain) {
      std::vector<const Candidate*> d;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        const Candidate& c = cands[i];
        bool dominated = false;
        if (!(cfg_.coprime && c.coprime)) {
          for (std::size_t j = i + 1; j < cands.size() && !dominated; ++j)
            dominated = space_->dividesPacked(cands[j].lcm.data(), c.lcm.data());
          for (std::size_t j = 0; j < d.size() && !dominated; ++j)
            dominated = space_->dividesPacked(d[j]->lcm.data(), c.lcm.data());
        }
        if (!dominated) d.push_back(&c);
      }
      for (const Candidate* c : d)
        if (!(cfg_.coprime && c->coprime)) keep.push_back(c);

      for (auto it = tasks_.begin(); it != tasks_.end();) {
        const Task& t = *it;
        if (t.isPair && space_->component(t.lcm.data()) == comp && space_->dividesPacked(lth, t.lcm.data())) {
          auto la = lcmPacked(basis_[t.a].vector.packed(0), lth);
          auto lb = lcmPacked(basis_[t.b].vector.packed(0), lth);
          if (!sameExps(la, t.lcm) && !sameExps(lb, t.lcm)) {
            it = tasks_.erase(it);
            continue;
          }
        }
        ++it;
      }
      for (std::size_t g = 0; g < h; ++g)
        if (active_[g] && space_->dividesPacked(lth, basis_[g].vector.packed(0))) active_[g] = false;
    } else {
      for (const auto& c : cands)
        if (!(cfg_.coprime && c.coprime)) keep.push_back(&c);
    }
    active_[h] = true;

    for (const Candidate* c : keep) {
      Task t;
      t.isPair = true;
      t.a = c->g;
      t.b = h;
      const auto& a = basis_[c->g];
      const auto& b = basis_[h];
      t.sugar = pairSugarPacked(*space_, a.sugar, a.vector.packed(0), b.sugar, b.vector.packed(0));
      t.degree = termDegree(c->lcm.data());
      t.lcm = c->lcm;
      t.birth = births_++;
      tasks_.insert(std::move(t));
    }
  }

  ModulePtr<F> space_;
  StrategyConfig cfg_;
  Division<F> division_;
  std::vector<ModuleVector<F>> gens_;
  std::deque<BasisElement<F>> basis_;
  std::vector<bool> active_;
  std::set<Task, TaskLess> tasks_;
  std::size_t births_ = 0;
  GBResult<F> result_;
};

}  // namespace detail

/// The body of Buchberger's algorithm with the strategy `cfg`. Generators are
/// processed like pairs: reduced before insertion.
template <class F>
GBResult<F> buchberger(const ModulePtr<F>& space, std::span<const ModuleVector<F>> gens, const StrategyConfig& cfg) {
  return detail::Engine<F>(space, cfg).run(gens);
}

template <class F>
GBResult<F> buchberger(std::span<const ModuleVector<F>> gens, const StrategyConfig& cfg) {
  if (gens.empty()) throw DomainError("buchberger needs at least one generator to know its module");
  return buchberger(gens.front().space(), gens, cfg);
}

template <class F>
struct InhomResult {
  /// Reduced sigma-Groebner basis of the input, on the plain module.
  std::vector<ModuleVector<F>> basis;
  /// The run on the homogenized generators.
  GBResult<F> run;
};

/// homogenize -> buchberger -> dehomogenize -> interreduce.
template <class F>
InhomResult<F> computeInhomGB(std::span<const ModuleVector<F>> vs, const StrategyConfig& cfg) {
  if (vs.empty()) throw DomainError("computeInhomGB needs at least one generator");
  const ModulePtr<F>& plain = vs.front().space();
  if (plain->context().isHomogenized()) throw DomainError("computeInhomGB expects vectors on the plain module");
  ModulePtr<F> hom = FreeModule<F>::create(plain->field(), plain->context().homogenizedContext(), plain->sigma());
  std::vector<ModuleVector<F>> nonzero;
  for (const auto& v : vs)
    if (!v.isZero()) nonzero.push_back(v);
  auto homGens = homogenizeGenerators<F>(nonzero, hom);
  InhomResult<F> out;
  out.run = buchberger<F>(hom, homGens, cfg);
  std::vector<ModuleVector<F>> deh;
  deh.reserve(out.run.basis.size());
  for (const auto& b : out.run.basis) deh.push_back(dehomogenize(b.vector, plain));
  // The dehomogenized run basis is a sigma-Groebner basis.
  out.basis = detail::interreduceBasis<F>(deh, cfg.deadline);
  return out;
}

/// Strategy A: sugar Buchberger directly on the plain module.
template <class F>
InhomResult<F> computePlainGB(std::span<const ModuleVector<F>> vs, StrategyConfig cfg) {
  if (vs.empty()) throw DomainError("computePlainGB needs at least one generator");
  cfg.remainderMode = RemainderMode::kPlain;
  InhomResult<F> out;
  out.run = buchberger<F>(vs.front().space(), vs, cfg);
  out.basis = out.run.reduced;
  return out;
}

}  // namespace satgb
