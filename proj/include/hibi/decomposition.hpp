#pragma once

#include <optional>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// Partition of P into pairwise disjoint chains, each listed bottom to top.
struct ChainDecomposition {
  std::vector<std::vector<Element>> chains;

  std::size_t size() const { return chains.size(); }
  // Chain index of every element.
  std::vector<std::size_t> chain_of(std::size_t n) const;
  // Position (0-based height inside its chain) of every element.
  std::vector<int> position_of(std::size_t n) const;
  std::vector<int> lengths() const;  // chain lengths |C| - 1

  friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

// Each chain is a maximal chain of P and the chains partition P.
bool is_canonical(const Poset& p, const ChainDecomposition& dec);

// All canonical chain decompositions: chain i is topped by the i-th maximal
// element (index order), lower covers are tried in index order.
std::vector<ChainDecomposition> canonical_chain_decompositions(const Poset& p);
bool is_hyper_planar(const Poset& p);
bool is_planar(const Poset& p);  // hyper-planar with exactly two chains

// Covers x > y whose endpoints lie in different chains of `dec`.
// Throws DecompositionMismatch if `dec` is not canonical for P.
std::vector<CoverPair> diagonals(const Poset& p, const ChainDecomposition& dec);

// x < y with x in C_i, y in C_j implies pos(x) < pos(y).
bool is_regular_for(const Poset& p, const ChainDecomposition& dec);

struct RegularityReport {
  bool regular = false;
  std::vector<bool> per_decomposition;
};
// Regularity over every canonical decomposition. Throws NotHyperPlanar.
RegularityReport regularity(const Poset& p);
inline bool is_regular(const Poset& p) { return regularity(p).regular; }

struct ButterflyWitness {
  std::vector<Element> c1;  // the shorter chain, 2 <= |c1| <= |c2|
  std::vector<Element> c2;
};
std::optional<ButterflyWitness> is_butterfly(const Poset& p);

// The diagonal of the first canonical 2-chain decomposition that has
// exactly one diagonal.
std::optional<CoverPair> single_diagonal(const Poset& p);

}  // namespace hibi
