#include "satgb/ring.hpp"

#include <algorithm>

namespace satgb {

namespace {

std::vector<std::string> defaultYNames(std::size_t m, const std::vector<std::string>& taken) {
  auto isTaken = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  std::vector<std::string> names;
  if (m == 1) {
    for (std::string candidate : {"h", "y", "hom"})
      if (!isTaken(candidate)) return {candidate};
  }
  std::string stem = "y";
  while (true) {
    names.clear();
    bool clash = false;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(stem + std::to_string(i + 1));
      clash = clash || isTaken(names.back());
    }
    if (!clash) return names;
    stem += "_";
  }
}

}  // namespace

RingContext::RingContext(std::vector<std::string> xNames, Grading grading, bool homogenized,
                         std::vector<std::string> yNames)
    : xNames_(std::move(xNames)), yNames_(std::move(yNames)), grading_(std::move(grading)), homogenized_(homogenized) {
  if (xNames_.empty()) throw StructuralError("ring needs at least one indeterminate");
  if (grading_.columns() != xNames_.size())
    throw StructuralError("grading has " + std::to_string(grading_.columns()) + " columns for " +
                          std::to_string(xNames_.size()) + " indeterminates");
  if (yNames_.empty()) yNames_ = defaultYNames(grading_.rows(), xNames_);
  if (yNames_.size() != grading_.rows()) throw StructuralError("one homogenizing name per grading row expected");
}

const std::string& RingContext::slotName(std::size_t slot) const {
  if (slot < m()) return yNames_.at(slot);
  return xNames_.at(slot - m());
}

RingContext RingContext::homogenizedContext() const { return RingContext(xNames_, grading_, true, yNames_); }

RingContext RingContext::plainContext() const { return RingContext(xNames_, grading_, false, yNames_); }

Degree degW(const ModuleTerm& t, const RingContext& ctx) {
  if (t.pp.size() != ctx.slots())
    throw StructuralError("term of length " + std::to_string(t.pp.size()) + " in a context with " +
                          std::to_string(ctx.slots()) + " slots");
  if (t.component >= ctx.rank()) throw StructuralError("component index outside the module rank");
  auto exps = t.pp.exponents();
  Degree d = ctx.grading().weigh(exps.subspan(ctx.m()));
  for (std::size_t j = 0; j < ctx.m(); ++j) d[j] += exps[j];
  const Degree& shift = ctx.grading().shift(t.component);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] += shift[j];
  return d;
}

}  // namespace satgb
