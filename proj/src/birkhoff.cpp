#include "hibi/birkhoff.hpp"

#include <algorithm>
#include <deque>

#include "hibi/error.hpp"
#include "hibi/predicates.hpp"

namespace hibi {

namespace {

bool ideal_order(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  Mask diff = a ^ b;
  if (diff == 0) return false;
  // First differing element: absent sorts first.
  return has(b, std::countr_zero(diff));
}

Mask addable(const Poset& p, Mask ideal) {
  Mask out = 0;
  for (Element x = 0; x < p.size(); ++x)
    if (!has(ideal, x) && (p.below(x) & ~ideal) == 0) out |= bit(x);
  return out;
}

}  // namespace

bool is_down_set(const Poset& p, Mask m) {
  for (Mask r = m; r; r &= r - 1)
    if ((p.below(std::countr_zero(r)) & ~m) != 0) return false;
  return true;
}

std::optional<std::size_t> DistributiveLattice::index_of(Mask members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DistributiveLattice ideals(const Poset& p, LatticeOptions options) {
  DistributiveLattice lat(p);
  std::unordered_map<Mask, std::size_t> seen;
  std::vector<Mask> found{0};
  seen.emplace(0, 0);
  std::deque<Mask> frontier{0};
  while (!frontier.empty()) {
    Mask cur = frontier.front();
    frontier.pop_front();
    for (Mask a = addable(p, cur); a; a &= a - 1) {
      Mask next = cur | bit(std::countr_zero(a));
      if (seen.emplace(next, found.size()).second) {
        found.push_back(next);
        if (found.size() > options.max_ideals)
          throw Error(ErrorKind::TooLarge, "more than " + std::to_string(options.max_ideals) +
                                               " poset ideals");
        frontier.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end(), ideal_order);
  for (std::size_t i = 0; i < found.size(); ++i) {
    lat.ideals_.push_back({found[i]});
    lat.index_.emplace(found[i], i);
  }
  lat.up_.assign(found.size(), {});
  lat.down_.assign(found.size(), {});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Mask a = addable(p, found[i]); a; a &= a - 1) {
      std::size_t j = lat.index_.at(found[i] | bit(std::countr_zero(a)));
      lat.covers_.emplace_back(i, j);
      lat.up_[i].push_back(j);
      lat.down_[j].push_back(i);
    }
  }
  std::sort(lat.covers_.begin(), lat.covers_.end());
  for (auto& v : lat.up_) std::sort(v.begin(), v.end());
  for (auto& v : lat.down_) std::sort(v.begin(), v.end());
  return lat;
}

Poset join_irreducibles(const DistributiveLattice& lattice) {
  const Poset& src = lattice.source();
  std::vector<std::size_t> ji;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.lower_covers(i).size() == 1) ji.push_back(i);

  // Top element of a principal ideal: the member whose strict down-set is
  // the rest of the ideal.
  std::vector<std::string> labels;
  for (std::size_t i : ji) {
    Mask m = lattice.elements()[i].members;
    for (Mask r = m; r; r &= r - 1) {
      Element x = std::countr_zero(r);
      if (src.principal_ideal(x) == m) {
        labels.push_back(src.label(x));
        break;
      }
    }
  }
  if (labels.size() != ji.size())
    throw Error(ErrorKind::ConsistencyFailure, "join-irreducible ideal is not principal");
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t a = 0; a < ji.size(); ++a)
    for (std::size_t b = 0; b < ji.size(); ++b) {
      Mask ma = lattice.elements()[ji[a]].members, mb = lattice.elements()[ji[b]].members;
      if (a != b && (ma & ~mb) == 0) rel.emplace_back(a, b);
    }
  return Poset::from_relations(std::move(labels), rel);
}

bool has_bridge_cover(const DistributiveLattice& lattice) {
  const auto& el = lattice.elements();
  for (auto [lo, up] : lattice.covers()) {
    Mask beta = el[lo].members, alpha = el[up].members;
    bool bridge = true;
    for (std::size_t g = 0; g < el.size() && bridge; ++g) {
      if (g == lo || g == up) continue;
      Mask gamma = el[g].members;
      bool above = (alpha & ~gamma) == 0 && gamma != alpha;
      bool below = (gamma & ~beta) == 0 && gamma != beta;
      bridge = above || below;
    }
    if (bridge) return true;
  }
  return false;
}

bool is_simple_lattice(const DistributiveLattice& lattice) {
  bool direct = !has_bridge_cover(lattice);
  bool via_poset = is_simple(join_irreducibles(lattice));
  if (direct != via_poset)
    throw Error(ErrorKind::ConsistencyFailure,
                "lattice simplicity disagrees with simplicity of its join-irreducibles");
  return direct;
}

std::vector<BigInt> order_polynomial_values(const Poset& p, unsigned upto) {
  // H(i) counts multichains D_i <= ... <= D_1 of ideals. Iterated zeta
  // transform over the ideal lattice; elements are peeled in reverse linear
  // extension so that removing x together with everything above it stays
  // inside the lattice.
  const auto lat = ideals(p);
  const std::size_t L = lat.size();
  std::vector<BigInt> g(L, BigInt(1));
  std::vector<BigInt> out{BigInt(1)};
  std::vector<std::size_t> order(p.linear_extension().rbegin(), p.linear_extension().rend());
  std::vector<std::vector<std::ptrdiff_t>> drop(order.size(), std::vector<std::ptrdiff_t>(L, -1));
  for (std::size_t k = 0; k < order.size(); ++k) {
    Element x = order[k];
    for (std::size_t d = 0; d < L; ++d) {
      Mask m = lat.elements()[d].members;
      if (has(m, x)) drop[k][d] = static_cast<std::ptrdiff_t>(*lat.index_of(m & ~p.principal_filter(x)));
    }
  }
  for (unsigned level = 1; level <= upto; ++level) {
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t d = 0; d < L; ++d)
        if (drop[k][d] >= 0) g[d] += g[static_cast<std::size_t>(drop[k][d])];
    out.push_back(g[lat.top()]);
  }
  return out;
}

BigInt order_polynomial_value(const Poset& p, unsigned i) {
  return order_polynomial_values(p, i).back();
}

HVector h_vector(const Poset& p) {
  const std::size_t dim = p.size() + 1;
  const auto H = order_polynomial_values(p, static_cast<unsigned>(dim));
  std::vector<BigInt> binom(dim + 1);
  binom[0] = 1;
  for (std::size_t k = 1; k <= dim; ++k) binom[k] = binom[k - 1] * (dim - k + 1) / k;

  std::vector<BigInt> h(dim + 1);
  for (std::size_t j = 0; j <= dim; ++j) {
    BigInt s = 0;
    for (std::size_t k = 0; k <= j; ++k) {
      BigInt term = binom[k] * H[j - k];
      if (k % 2) s -= term;
      else s += term;
    }
    h[j] = s;
  }
  const int expected = expected_h_degree(p);
  for (std::size_t j = 0; j <= dim; ++j) {
    if (h[j] < 0) throw Error(ErrorKind::ConsistencyFailure, "negative h-vector entry");
    if (static_cast<int>(j) > expected && h[j] != 0)
      throw Error(ErrorKind::ConsistencyFailure, "h-vector longer than |P| + 1 - rank");
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  if (h[0] != 1) throw Error(ErrorKind::ConsistencyFailure, "h_0 differs from 1");
  return HVector{std::move(h), dim};
}

std::size_t Ladder::point_count() const {
  std::size_t c = 0;
  for (int i = 0; i <= m; ++i) c += static_cast<std::size_t>(upper[i] - lower[i] + 1);
  return c;
}

Ladder make_ladder(int m, int n, std::vector<int> lower, std::vector<int> upper) {
  Ladder lad{m, n, std::move(lower), std::move(upper), {}, {}};
  for (int i = 1; i <= m; ++i) {
    if (lad.lower[i] > lad.lower[i - 1]) lad.lower_corners.push_back({i - 1, lad.lower[i]});
    if (lad.upper[i] > lad.upper[i - 1]) lad.upper_corners.push_back({i, lad.upper[i - 1]});
  }
  return lad;
}

Ladder ladder_of_planar(const Poset& p, const ChainDecomposition& dec) {
  if (dec.size() != 2) throw Error(ErrorKind::NotPlanar, "need a decomposition into two chains");
  if (!is_canonical(p, dec))
    throw Error(ErrorKind::DecompositionMismatch, "not a canonical chain decomposition");
  const auto* c1 = &dec.chains[0];
  const auto* c2 = &dec.chains[1];
  if (c2->size() > c1->size()) std::swap(c1, c2);
  Mask m1 = 0, m2 = 0;
  for (Element x : *c1) m1 |= bit(x);
  for (Element x : *c2) m2 |= bit(x);
  const int m = static_cast<int>(c1->size()), n = static_cast<int>(c2->size());
  std::vector<int> lo(m + 1, n + 1), hi(m + 1, -1);
  const auto lat = ideals(p);
  for (const auto& id : lat.elements()) {
    int i = popcount(id.members & m1), j = popcount(id.members & m2);
    lo[i] = std::min(lo[i], j);
    hi[i] = std::max(hi[i], j);
  }
  auto lad = make_ladder(m, n, std::move(lo), std::move(hi));
  if (lad.point_count() != lat.size())
    throw Error(ErrorKind::ConsistencyFailure, "ideal lattice is not a ladder region");
  return lad;
}

Poset poset_from_ladder(const Ladder& lad) {
  const int m = lad.m, n = lad.n;
  auto bad = [](const std::string& why) { return Error(ErrorKind::ParameterOutOfRange, why); };
  if (m < 1 || n < 1 || lad.lower.size() != std::size_t(m + 1) ||
      lad.upper.size() != std::size_t(m + 1))
    throw bad("ladder extents");
  if (lad.lower[0] != 0 || lad.upper[m] != n) throw bad("ladder must span (0,0) to (m,n)");
  for (int i = 0; i <= m; ++i) {
    if (lad.lower[i] > lad.upper[i]) throw bad("empty ladder column");
    if (i > 0 && (lad.lower[i] < lad.lower[i - 1] || lad.upper[i] < lad.upper[i - 1]))
      throw bad("ladder borders must be monotone");
    if (i > 0 && lad.lower[i] > lad.upper[i - 1]) throw bad("ladder columns must overlap");
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (int j = 1; j <= n; ++j) labels.push_back("y" + std::to_string(j));
  std::vector<std::pair<Element, Element>> rel;
  auto X = [](int i) { return Element(i - 1); };
  auto Y = [m](int j) { return Element(m + j - 1); };
  for (int i = 1; i < m; ++i) rel.emplace_back(X(i), X(i + 1));
  for (int j = 1; j < n; ++j) rel.emplace_back(Y(j), Y(j + 1));
  // x_i needs the first lower[i] elements of the second chain.
  for (int i = 1; i <= m; ++i)
    if (lad.lower[i] >= 1) rel.emplace_back(Y(lad.lower[i]), X(i));
  // y_j needs the first r elements of the first chain, r = min{i : upper[i] >= j}.
  for (int j = 1; j <= n; ++j) {
    int r = 0;
    while (lad.upper[r] < j) ++r;
    if (r >= 1) rel.emplace_back(X(r), Y(j));
  }
  return Poset::from_relations(std::move(labels), rel);
}

bool corners_cross_diagonal(const Ladder& lad) {
  for (const auto& c : lad.lower_corners)
    if (c.i < c.j) return true;
  for (const auto& c : lad.upper_corners)
    if (c.i > c.j) return true;
  return false;
}

}  // namespace hibi
