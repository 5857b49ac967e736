#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "satgb/free_module.hpp"
#include "satgb/grading.hpp"
#include "satgb/order.hpp"
#include "satgb/ring.hpp"

namespace satgb {

/// A field-independent vector: (component, exponents) -> rational coefficient.
using RawVector = std::map<std::pair<std::size_t, std::vector<Exponent>>, mpq_class>;

/// A parsed input system.
struct ProblemSpec {
  std::string name;
  std::vector<std::string> variables;
  /// nullopt means Q.
  std::optional<std::uint32_t> prime;
  OrderSpec ordering = OrderSpec::degRevLex();
  Grading grading = Grading::standard(1);
  std::vector<RawVector> generators;

  std::size_t rank() const noexcept { return grading.moduleRank(); }
  RingContext context() const { return RingContext(variables, grading); }
  std::string fieldName() const;

  /// Compares the mathematical content; the name is a label only.
  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
    return a.variables == b.variables && a.prime == b.prime && a.ordering == b.ordering && a.grading == b.grading &&
           a.generators == b.generators;
  }
};

/// Parses
///   ring x, y over Q | Zp <p>;
///   order Lex | DegLex | DegRevLex | matrix <rows>;
///   grading <rows>;
///   module <rank> [shifts <rows>];
///   gens: p1, p2;
/// where rows are space-separated integers with rows separated by commas.
/// `ring` and `order` may be omitted (variables in order of appearance,
/// DegRevLex). Vector generators are written [p, q].
ProblemSpec parseSystem(const std::string& text);

/// Inverse of parseSystem up to formatting.
std::string formatSystem(const ProblemSpec& spec);

/// g_d = sum_i prod_{j<d} x_{(i+j mod k)+1} for d = 1..k-1, and x_1...x_k - 1.
ProblemSpec generateCyclic(int k);

std::string formatRawVector(const RawVector& v, const std::vector<std::string>& names, std::size_t rank);

/// The generators as vectors of the plain module `space`.
template <class F>
std::vector<ModuleVector<F>> toVectors(const ProblemSpec& spec, const ModulePtr<F>& space) {
  if (space->context().isHomogenized() || space->context().n() != spec.variables.size() ||
      space->context().rank() != spec.rank())
    throw StructuralError("module does not match the problem's ring");
  const F& field = space->field();
  std::vector<ModuleVector<F>> out;
  out.reserve(spec.generators.size());
  for (const auto& g : spec.generators) {
    std::vector<std::pair<typename F::Element, ModuleTerm>> summands;
    for (const auto& [key, c] : g) summands.emplace_back(field.fromRational(c), ModuleTerm{PowerProduct(key.second), key.first});
    out.push_back(ModuleVector<F>::fromTerms(space, std::move(summands)));
  }
  return out;
}

}  // namespace satgb
