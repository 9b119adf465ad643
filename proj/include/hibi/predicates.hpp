#pragma once

#include <optional>

#include "hibi/poset.hpp"

namespace hibi {

// All maximal chains of P have the same length.
bool is_pure(const Poset& p);

// No element is comparable with every element of P.
bool is_simple(const Poset& p);

enum class MiyazakiDirection { None, Ascending, Descending, Both };

// Ascending: every x has all maximal ascending chains in the extension of
// equal length. Descending: the same for descending chains.
struct MiyazakiWitness {
  bool ascending = false;
  bool descending = false;

  bool holds() const { return ascending || descending; }
  MiyazakiDirection direction() const;
};

// Cover form: depth(y) = depth(x)+1 for all covers x > y (ascending),
// height(x) = height(y)+1 for all covers (descending).
MiyazakiWitness miyazaki(const Poset& p);
inline bool is_miyazaki(const Poset& p) { return miyazaki(p).holds(); }

// Chain-length form of the same two predicates, computed from the shortest
// and longest maximal chains through each element. Kept separate from the
// cover form so the two can be compared.
MiyazakiWitness miyazaki_by_chain_lengths(const Poset& p);

// First cover x > y with height(x) + depth(y) > rank(P^) + 1, if any
// (heights and depths in the extension).
std::optional<CoverPair> cover_inequality_violation(const Poset& p);
inline bool cover_inequalities_hold(const Poset& p) {
  return !cover_inequality_violation(p).has_value();
}

// Every cover x > y has depth(y) = depth(x)+1 or height(x) = height(y)+1.
bool cover_equalities_hold(const Poset& p);
bool cover_equality_holds(const Poset& p, const CoverPair& c);
bool cover_inequality_holds(const Poset& p, const CoverPair& c);

// height + depth = rank(P^) for every element.
bool all_elements_on_longest_chains(const Poset& p);

}  // namespace hibi
