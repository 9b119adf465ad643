#include "hibi/predicates.hpp"

#include <algorithm>
#include <limits>

namespace hibi {

bool is_pure(const Poset& p) {
  // Shortest and longest saturated chains from a minimal element up to x.
  const std::size_t n = p.size();
  std::vector<int> shortest(n, 0), longest(n, 0);
  for (Element x : p.linear_extension()) {
    if (p.is_minimal(x)) continue;
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (Element y : p.lower_covers(x)) {
      lo = std::min(lo, shortest[y] + 1);
      hi = std::max(hi, longest[y] + 1);
    }
    shortest[x] = lo;
    longest[x] = hi;
  }
  int lo = std::numeric_limits<int>::max(), hi = 0;
  for (Element m : p.maximal_elements()) {
    lo = std::min(lo, shortest[m]);
    hi = std::max(hi, longest[m]);
  }
  return lo == hi;
}

bool is_simple(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if ((p.above(x) | p.below(x) | bit(x)) == p.all()) return false;
  return true;
}

MiyazakiDirection MiyazakiWitness::direction() const {
  if (ascending && descending) return MiyazakiDirection::Both;
  if (ascending) return MiyazakiDirection::Ascending;
  if (descending) return MiyazakiDirection::Descending;
  return MiyazakiDirection::None;
}

MiyazakiWitness miyazaki(const Poset& p) {
  MiyazakiWitness w{true, true};
  for (const auto& c : p.cover_pairs()) {
    if (p.depth(c.lower) != p.depth(c.upper) + 1) w.ascending = false;
    if (p.height(c.upper) != p.height(c.lower) + 1) w.descending = false;
  }
  return w;
}

MiyazakiWitness miyazaki_by_chain_lengths(const Poset& p) {
  const std::size_t n = p.size();
  const auto& order = p.linear_extension();
  // Shortest/longest maximal chains ascending from x (to a maximal element).
  std::vector<int> up_lo(n, 0), up_hi(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    if (p.is_maximal(x)) continue;
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (Element y : p.upper_covers(x)) {
      lo = std::min(lo, up_lo[y] + 1);
      hi = std::max(hi, up_hi[y] + 1);
    }
    up_lo[x] = lo;
    up_hi[x] = hi;
  }
  std::vector<int> down_lo(n, 0), down_hi(n, 0);
  for (Element x : order) {
    if (p.is_minimal(x)) continue;
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (Element y : p.lower_covers(x)) {
      lo = std::min(lo, down_lo[y] + 1);
      hi = std::max(hi, down_hi[y] + 1);
    }
    down_lo[x] = lo;
    down_hi[x] = hi;
  }
  MiyazakiWitness w{true, true};
  for (Element x = 0; x < n; ++x) {
    if (up_lo[x] != up_hi[x]) w.ascending = false;
    if (down_lo[x] != down_hi[x]) w.descending = false;
  }
  return w;
}

bool cover_inequality_holds(const Poset& p, const CoverPair& c) {
  return hat_height(p, c.upper) + hat_depth(p, c.lower) <= hat_rank(p) + 1;
}

bool cover_equality_holds(const Poset& p, const CoverPair& c) {
  return p.depth(c.lower) == p.depth(c.upper) + 1 || p.height(c.upper) == p.height(c.lower) + 1;
}

std::optional<CoverPair> cover_inequality_violation(const Poset& p) {
  for (const auto& c : p.cover_pairs())
    if (!cover_inequality_holds(p, c)) return c;
  return std::nullopt;
}

bool cover_equalities_hold(const Poset& p) {
  const auto cs = p.cover_pairs();
  return std::all_of(cs.begin(), cs.end(),
                     [&](const CoverPair& c) { return cover_equality_holds(p, c); });
}

bool all_elements_on_longest_chains(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (hat_height(p, x) + hat_depth(p, x) != hat_rank(p)) return false;
  return true;
}

}  // namespace hibi
