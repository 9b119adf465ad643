#pragma once

#include <optional>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// Chain 1 < 2 < ... < n, labels "1".."n".
Poset chain_poset(int n);
Poset antichain_poset(int n);

// Same elements and labels, order reversed.
Poset dual(const Poset& p);

// Elements of `a` first, then `b`; no relations across. Labels colliding
// between the two sides are disambiguated with "1:" / "2:" prefixes.
Poset disjoint_union(const Poset& a, const Poset& b);

// Product order on pairs, element (x, y) at index x * |b| + y, label "(x,y)".
Poset direct_product(const Poset& a, const Poset& b);

// Two chains C1 (p elements, labels a1..ap) and C2 (q elements, b1..bq)
// whose only cross covers are max(C1) > min(C2) and max(C2) > min(C1).
Poset make_butterfly(int p, int q);

// Two chains meeting in the single cover x > y. C1 carries b-1 elements
// below x and a-1 above; C2 carries d-1 below y and c-1 above.
// Labels: x, x+k above x, x-k below x, same scheme for y.
Poset make_diagonal_poset(int a, int b, int c, int d);

// The diagonal poset whose ideal lattice is the one-corner ladder with
// extents (m, n) and corner parameters (s, t): a=s, d=t, b=m+1-s, c=n+1-t.
Poset make_one_corner_ladder_poset(int m, int n, int s, int t);

struct DiagonalParameters {
  int a, b, c, d;
};
DiagonalParameters one_corner_ladder_parameters(int m, int n, int s, int t);

// Order isomorphism a -> b by backtracking, if one exists. Intended for
// fixture-sized posets only.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);
inline bool is_isomorphic(const Poset& a, const Poset& b) {
  return find_isomorphism(a, b).has_value();
}

// Subposet induced on `keep` (sorted indices), labels preserved.
Poset induced_subposet(const Poset& p, const std::vector<Element>& keep);

}  // namespace hibi
