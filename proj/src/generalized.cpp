#include "hibi/generalized.hpp"

#include <set>

#include "hibi/error.hpp"
#include "hibi/predicates.hpp"

namespace hibi {

MultichainPoset multichain_poset(const Poset& p, int r) {
  if (r < 2) throw Error(ErrorKind::ParameterOutOfRange, "r must be at least 2");
  const Element k = static_cast<Element>(r - 1);
  if (p.size() * k > kMaxElements)
    throw Error(ErrorKind::TooLarge, "product poset exceeds " + std::to_string(kMaxElements) +
                                         " elements");
  std::vector<std::string> labels;
  for (Element x = 0; x < p.size(); ++x)
    for (int i = 1; i <= r - 1; ++i) labels.push_back("(" + p.label(x) + "," + std::to_string(i) + ")");
  std::vector<std::pair<Element, Element>> rel;
  for (Element x = 0; x < p.size(); ++x)
    for (Element i = 0; i < k; ++i) {
      if (i + 1 < k) rel.emplace_back(x * k + i, x * k + i + 1);
      for (Element y : p.upper_covers(x)) rel.emplace_back(x * k + i, y * k + i);
    }
  return MultichainPoset{p, r, Poset::from_relations(std::move(labels), rel)};
}

GradedFunction iota(const MultichainPoset& m, const GradedFunction& v) {
  if (!is_in_T(m.base, v))
    throw Error(ErrorKind::NotStrictlyOrderReversing, "iota needs a strictly order-reversing input");
  GradedFunction out{v.degree + (m.r - 2), std::vector<int>(m.product.size())};
  for (Element x = 0; x < m.base.size(); ++x)
    for (int i = 1; i <= m.r - 1; ++i) out.values[m.index(x, i)] = v.values[x] + (m.r - 1 - i);
  return out;
}

ProductFormulaReport verify_product_formulas(const Poset& p, int r) {
  const auto m = multichain_poset(p, r);
  ProductFormulaReport rep;
  auto fail = [&](std::string what) {
    if (rep.ok) rep.first_violation = std::move(what);
    rep.ok = false;
  };
  for (Element x = 0; x < p.size(); ++x)
    for (int i = 1; i <= r - 1; ++i) {
      Element e = m.index(x, i);
      if (hat_height(m.product, e) != hat_height(p, x) + (i - 1))
        fail("height of " + m.product.label(e));
      if (hat_depth(m.product, e) != hat_depth(p, x) + (r - i - 1))
        fail("depth of " + m.product.label(e));
    }
  if (hat_rank(m.product) != hat_rank(p) + (r - 2)) fail("rank");
  return rep;
}

TypeComparison compare_types(const Poset& p, int r, std::uint64_t budget) {
  const auto m = multichain_poset(p, r);
  const auto g = minimal_generators(p, {std::nullopt, budget});
  const auto gr = minimal_generators(m.product, {std::nullopt, budget});
  TypeComparison c;
  c.type_L = g.cm_type();
  c.type_Lr = gr.cm_type();
  c.pseudo_gorenstein_L = g.degrees.begin()->second == 1;
  c.pseudo_gorenstein_Lr = gr.degrees.begin()->second == 1;
  c.level_L = g.gamma() == hat_rank(p);
  c.level_Lr = gr.gamma() == hat_rank(m.product);

  std::set<GradedFunction> targets(gr.generators.begin(), gr.generators.end());
  std::set<GradedFunction> images;
  c.iota_preserves_generators = true;
  for (const auto& v : g.generators) {
    auto w = iota(m, v);
    if (!targets.count(w) || !images.insert(w).second) c.iota_preserves_generators = false;
  }

  if (c.type_L > c.type_Lr)
    throw Error(ErrorKind::ConsistencyFailure, "type decreased on the product poset");
  if (c.pseudo_gorenstein_L != c.pseudo_gorenstein_Lr)
    throw Error(ErrorKind::ConsistencyFailure, "pseudo-Gorenstein property not preserved");
  if (c.level_Lr && !c.level_L)
    throw Error(ErrorKind::ConsistencyFailure, "product is level but the base is not");
  if (!c.iota_preserves_generators)
    throw Error(ErrorKind::ConsistencyFailure, "iota does not map T0 into T0 of the product");
  return c;
}

}  // namespace hibi
