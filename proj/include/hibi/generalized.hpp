#pragma once

#include <optional>
#include <string>

#include "hibi/canonical.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// P x chain(r-1). Element (x, i) sits at index x * (r-1) + (i-1) and is
// labelled "(label(x),i)".
struct MultichainPoset {
  Poset base;
  int r = 2;
  Poset product;

  Element index(Element x, int i) const { return x * static_cast<Element>(r - 1) + (i - 1); }
};

// Throws ParameterOutOfRange for r < 2.
MultichainPoset multichain_poset(const Poset& p, int r);

// iota(v)(x, i) = v(x) + (r - 1 - i), degree v(bottom) + (r - 2).
// Throws NotStrictlyOrderReversing unless v is in T(P^).
GradedFunction iota(const MultichainPoset& m, const GradedFunction& v);

struct ProductFormulaReport {
  bool ok = true;
  std::string first_violation;
};
ProductFormulaReport verify_product_formulas(const Poset& p, int r);

struct TypeComparison {
  std::size_t type_L = 0;
  std::size_t type_Lr = 0;
  bool pseudo_gorenstein_L = false;
  bool pseudo_gorenstein_Lr = false;
  bool level_L = false;
  bool level_Lr = false;
  // iota maps T0(P^) injectively into T0(P^_r).
  bool iota_preserves_generators = false;
};

// Computes both generator sets and throws ConsistencyFailure unless
// type_L <= type_Lr, pseudo-Gorenstein agrees on both sides, level(L_r)
// implies level(L), and iota preserves minimal generators.
TypeComparison compare_types(const Poset& p, int r = 3,
                             std::uint64_t budget = SearchBudget::kDefaultLimit);

}  // namespace hibi
