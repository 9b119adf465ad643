#include "hibi/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hibi/error.hpp"

namespace hibi {

namespace {

std::vector<std::pair<Element, Element>> relations_of(const Poset& p, Element offset = 0) {
  std::vector<std::pair<Element, Element>> rel;
  for (const auto& c : p.cover_pairs()) rel.emplace_back(c.lower + offset, c.upper + offset);
  return rel;
}

}  // namespace

Poset chain_poset(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "chain length must be positive");
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> rel;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return Poset::from_relations(std::move(labels), rel);
}

Poset antichain_poset(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "antichain size must be positive");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return Poset::from_relations(std::move(labels), {});
}

Poset dual(const Poset& p) {
  std::vector<std::pair<Element, Element>> rel;
  for (const auto& c : p.cover_pairs()) rel.emplace_back(c.upper, c.lower);
  return Poset::from_relations(p.labels(), rel);
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::set<std::string> left(a.labels().begin(), a.labels().end());
  bool clash = std::any_of(b.labels().begin(), b.labels().end(),
                           [&](const std::string& l) { return left.count(l) > 0; });
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(clash ? "1:" + l : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? "2:" + l : l);
  auto rel = relations_of(a);
  auto rb = relations_of(b, a.size());
  rel.insert(rel.end(), rb.begin(), rb.end());
  return Poset::from_relations(std::move(labels), rel);
}

Poset direct_product(const Poset& a, const Poset& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> labels;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  std::vector<std::pair<Element, Element>> rel;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < nb; ++y) {
      for (Element x2 : a.upper_covers(x)) rel.emplace_back(x * nb + y, x2 * nb + y);
      for (Element y2 : b.upper_covers(y)) rel.emplace_back(x * nb + y, x * nb + y2);
    }
  return Poset::from_relations(std::move(labels), rel);
}

Poset make_butterfly(int p, int q) {
  if (p < 2 || q < p)
    throw Error(ErrorKind::ParameterOutOfRange, "butterfly needs 2 <= p <= q");
  std::vector<std::string> labels;
  for (int i = 1; i <= p; ++i) labels.push_back("a" + std::to_string(i));
  for (int j = 1; j <= q; ++j) labels.push_back("b" + std::to_string(j));
  std::vector<std::pair<Element, Element>> rel;
  const Element P = p;
  for (Element i = 0; i + 1 < P; ++i) rel.emplace_back(i, i + 1);
  for (Element j = 0; j + 1 < Element(q); ++j) rel.emplace_back(P + j, P + j + 1);
  rel.emplace_back(P, P - 1);      // max(C1) covers min(C2)
  rel.emplace_back(0, P + q - 1);  // max(C2) covers min(C1)
  return Poset::from_relations(std::move(labels), rel);
}

Poset make_diagonal_poset(int a, int b, int c, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw Error(ErrorKind::ParameterOutOfRange, "diagonal poset parameters must be positive");
  std::vector<std::string> labels;
  auto chain = [&](const std::string& name, int below, int above) {
    for (int k = below; k >= 1; --k) labels.push_back(name + "-" + std::to_string(k));
    labels.push_back(name);
    for (int k = 1; k <= above; ++k) labels.push_back(name + "+" + std::to_string(k));
  };
  chain("x", b - 1, a - 1);
  chain("y", d - 1, c - 1);
  const Element len1 = a + b - 1;
  const Element len2 = c + d - 1;
  std::vector<std::pair<Element, Element>> rel;
  for (Element i = 0; i + 1 < len1; ++i) rel.emplace_back(i, i + 1);
  for (Element j = 0; j + 1 < len2; ++j) rel.emplace_back(len1 + j, len1 + j + 1);
  const Element x = b - 1;
  const Element y = len1 + d - 1;
  rel.emplace_back(y, x);
  return Poset::from_relations(std::move(labels), rel);
}

DiagonalParameters one_corner_ladder_parameters(int m, int n, int s, int t) {
  DiagonalParameters p{s, m + 1 - s, n + 1 - t, t};
  if (p.a < 1 || p.b < 1 || p.c < 1 || p.d < 1)
    throw Error(ErrorKind::ParameterOutOfRange,
                "one-corner ladder needs 1 <= s <= m and 1 <= t <= n");
  return p;
}

Poset make_one_corner_ladder_poset(int m, int n, int s, int t) {
  auto p = one_corner_ladder_parameters(m, n, s, t);
  return make_diagonal_poset(p.a, p.b, p.c, p.d);
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const Poset& p, Element x) {
    return std::tuple(popcount(p.above(x)), popcount(p.below(x)), p.height(x), p.depth(x));
  };
  {
    std::multiset<std::tuple<int, int, int, int>> sa, sb;
    for (Element x = 0; x < n; ++x) {
      sa.insert(signature(a, x));
      sb.insert(signature(b, x));
    }
    if (sa != sb) return std::nullopt;
  }
  std::vector<Element> map(n);
  Mask used = 0;
  std::function<bool(Element)> extend = [&](Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (has(used, y) || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (Element z = 0; z < x && ok; ++z)
        ok = a.less(z, x) == b.less(map[z], y) && a.less(x, z) == b.less(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      used |= bit(y);
      if (extend(x + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  };
  if (extend(0)) return map;
  return std::nullopt;
}

Poset induced_subposet(const Poset& p, const std::vector<Element>& keep) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> rel;
  for (Element i = 0; i < keep.size(); ++i) {
    labels.push_back(p.label(keep[i]));
    for (Element j = 0; j < keep.size(); ++j)
      if (p.less(keep[i], keep[j])) rel.emplace_back(i, j);
  }
  return Poset::from_relations(std::move(labels), rel);
}

}  // namespace hibi
