#include "hibi/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "hibi/error.hpp"
#include "hibi/predicates.hpp"

namespace hibi {

std::vector<std::size_t> ChainDecomposition::chain_of(std::size_t n) const {
  std::vector<std::size_t> out(n, chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (Element x : chains[i])
      if (x < n) out[x] = i;
  return out;
}

std::vector<int> ChainDecomposition::position_of(std::size_t n) const {
  std::vector<int> out(n, -1);
  for (const auto& c : chains)
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] < n) out[c[k]] = static_cast<int>(k);
  return out;
}

std::vector<int> ChainDecomposition::lengths() const {
  std::vector<int> out;
  for (const auto& c : chains) out.push_back(static_cast<int>(c.size()) - 1);
  return out;
}

bool is_canonical(const Poset& p, const ChainDecomposition& dec) {
  Mask seen = 0;
  for (const auto& c : dec.chains) {
    if (c.empty()) return false;
    for (Element x : c) {
      if (x >= p.size() || has(seen, x)) return false;
      seen |= bit(x);
    }
    if (!p.is_minimal(c.front()) || !p.is_maximal(c.back())) return false;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      if (!p.covers(c[k + 1], c[k])) return false;
  }
  return seen == p.all();
}

std::vector<ChainDecomposition> canonical_chain_decompositions(const Poset& p) {
  const auto tops = p.maximal_elements();
  std::vector<ChainDecomposition> out;
  std::vector<std::vector<Element>> chains(tops.size());
  Mask used = 0;

  // Chain `i` currently ends (at the bottom) in chains[i].back().
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i == tops.size()) {
      if (used == p.all()) {
        ChainDecomposition d;
        for (auto c : chains) {
          std::reverse(c.begin(), c.end());
          d.chains.push_back(std::move(c));
        }
        out.push_back(std::move(d));
      }
      return;
    }
    if (chains[i].empty()) {
      chains[i].push_back(tops[i]);
      used |= bit(tops[i]);
      grow(i);
      used &= ~bit(tops[i]);
      chains[i].clear();
      return;
    }
    Element bottom = chains[i].back();
    if (p.is_minimal(bottom)) {
      grow(i + 1);
      return;
    }
    for (Element c : p.lower_covers(bottom)) {
      if (has(used, c)) continue;
      chains[i].push_back(c);
      used |= bit(c);
      grow(i);
      used &= ~bit(c);
      chains[i].pop_back();
    }
  };
  grow(0);
  return out;
}

bool is_hyper_planar(const Poset& p) { return !canonical_chain_decompositions(p).empty(); }

bool is_planar(const Poset& p) {
  return p.maximal_elements().size() == 2 && is_hyper_planar(p);
}

std::vector<CoverPair> diagonals(const Poset& p, const ChainDecomposition& dec) {
  if (!is_canonical(p, dec))
    throw Error(ErrorKind::DecompositionMismatch, "not a canonical chain decomposition");
  const auto owner = dec.chain_of(p.size());
  std::vector<CoverPair> out;
  for (const auto& c : p.cover_pairs())
    if (owner[c.upper] != owner[c.lower]) out.push_back(c);
  return out;
}

bool is_regular_for(const Poset& p, const ChainDecomposition& dec) {
  const auto pos = dec.position_of(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Mask m = p.above(x); m; m &= m - 1)
      if (pos[x] >= pos[std::countr_zero(m)]) return false;
  return true;
}

RegularityReport regularity(const Poset& p) {
  const auto decs = canonical_chain_decompositions(p);
  if (decs.empty()) throw Error(ErrorKind::NotHyperPlanar, "no canonical chain decomposition");
  RegularityReport r;
  r.regular = true;
  for (const auto& d : decs) {
    bool ok = is_regular_for(p, d);
    r.per_decomposition.push_back(ok);
    r.regular = r.regular && ok;
  }
  return r;
}

std::optional<ButterflyWitness> is_butterfly(const Poset& p) {
  for (const auto& d : canonical_chain_decompositions(p)) {
    if (d.size() != 2) continue;
    const auto diag = diagonals(p, d);
    for (int flip = 0; flip < 2; ++flip) {
      const auto& c1 = d.chains[flip];
      const auto& c2 = d.chains[1 - flip];
      if (c1.size() < 2 || c1.size() > c2.size()) continue;
      std::vector<CoverPair> expected{{c1.back(), c2.front()}, {c2.back(), c1.front()}};
      auto got = diag;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (got == expected) return ButterflyWitness{c1, c2};
    }
  }
  return std::nullopt;
}

std::optional<CoverPair> single_diagonal(const Poset& p) {
  for (const auto& d : canonical_chain_decompositions(p)) {
    if (d.size() != 2) continue;
    auto diag = diagonals(p, d);
    if (diag.size() == 1) return diag.front();
  }
  return std::nullopt;
}

}  // namespace hibi
