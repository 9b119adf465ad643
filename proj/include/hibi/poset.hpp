#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hibi {

using Element = std::size_t;

// Packed membership vector over element indices; bit x set iff x is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Element x) { return Mask{1} << x; }
constexpr bool has(Mask m, Element x) { return (m >> x) & 1U; }
inline int popcount(Mask m) { return std::popcount(m); }

// `upper` covers `lower`.
struct CoverPair {
  Element upper;
  Element lower;

  friend auto operator<=>(const CoverPair&, const CoverPair&) = default;
};

// A finite, nonempty poset on elements 0..n-1 (input order). Immutable.
//
// The full order is stored as one "strictly above" and one "strictly below"
// mask per element; covers are the transitive reduction of that order.
class Poset {
 public:
  // Labelled construction. Covers implied by transitivity are dropped and
  // reported through warnings().
  static Poset build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& covers);

  // Index-based construction: `relations` holds (lower, upper) pairs whose
  // transitive closure is the order. Redundant pairs are fine here.
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<Element, Element>>& relations);

  std::size_t size() const { return labels_.size(); }
  Mask all() const { return size() == 64 ? ~Mask{0} : (bit(size()) - 1); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const;
  std::optional<Element> find(const std::string& label) const;
  Element index_of(const std::string& label) const;  // throws UnknownLabel

  bool less(Element x, Element y) const { return has(above_[x], y); }
  bool leq(Element x, Element y) const { return x == y || less(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  bool covers(Element upper, Element lower) const;

  // Strict up-set / down-set of x as masks.
  Mask above(Element x) const { return above_[x]; }
  Mask below(Element x) const { return below_[x]; }
  Mask principal_ideal(Element x) const { return below_[x] | bit(x); }
  Mask principal_filter(Element x) const { return above_[x] | bit(x); }

  const std::vector<Element>& upper_covers(Element x) const { return upper_covers_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_covers_[x]; }

  // All cover pairs, sorted by (lower, upper).
  std::vector<CoverPair> cover_pairs() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  bool is_minimal(Element x) const { return lower_covers_[x].empty(); }
  bool is_maximal(Element x) const { return upper_covers_[x].empty(); }

  // Lexicographically smallest topological order of the cover DAG.
  const std::vector<Element>& linear_extension() const { return linear_extension_; }

  // Longest chain descending (height) / ascending (depth) from x inside P.
  int height(Element x) const;
  int depth(Element x) const;
  // Length of the longest chain of P.
  int rank() const { return rank_; }

  const std::vector<std::string>& warnings() const { return warnings_; }

  // Same labels in the same order and the same relation.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.above_ == b.above_;
  }

 private:
  Poset() = default;
  void finish();

  std::vector<std::string> labels_;
  std::vector<Mask> above_;
  std::vector<Mask> below_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<Element> linear_extension_;
  std::vector<int> height_;
  std::vector<int> depth_;
  int rank_ = 0;
  std::vector<std::string> warnings_;
};

// P with an adjoined bottom (-inf) and top (+inf). Nodes 0..n-1 are the
// elements of the base poset, node n is the bottom, node n+1 is the top.
class ExtendedPoset {
 public:
  explicit ExtendedPoset(Poset base);

  using Node = std::size_t;

  const Poset& base() const { return base_; }
  std::size_t node_count() const { return base_.size() + 2; }
  Node bottom() const { return base_.size(); }
  Node top() const { return base_.size() + 1; }

  bool less(Node a, Node b) const;
  bool leq(Node a, Node b) const { return a == b || less(a, b); }

  int height(Node a) const;
  int depth(Node a) const;
  int rank() const { return base_.rank() + 2; }

 private:
  Poset base_;
};

// Shorthands for heights/depths in the extension, taken on base elements.
inline int hat_height(const Poset& p, Element x) { return p.height(x) + 1; }
inline int hat_depth(const Poset& p, Element x) { return p.depth(x) + 1; }
inline int hat_rank(const Poset& p) { return p.rank() + 2; }

}  // namespace hibi
