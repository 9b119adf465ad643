#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hibi/decomposition.hpp"
#include "hibi/poset.hpp"

namespace hibi {

using BigInt = boost::multiprecision::cpp_int;

// Downward closed subset of a poset.
struct PosetIdeal {
  Mask members = 0;

  bool contains(Element x) const { return has(members, x); }
  int size() const { return popcount(members); }
  friend bool operator==(const PosetIdeal&, const PosetIdeal&) = default;
};

bool is_down_set(const Poset& p, Mask m);

struct LatticeOptions {
  std::size_t max_ideals = std::size_t{1} << 20;
};

// The lattice of poset ideals of `source`, ordered by cardinality and then
// by membership vector (element 0 most significant, absent before present).
class DistributiveLattice {
 public:
  const Poset& source() const { return source_; }
  const std::vector<PosetIdeal>& elements() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }

  // Hasse diagram as (lower, upper) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }

  std::optional<std::size_t> index_of(Mask members) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return ideals_.size() - 1; }

 private:
  friend DistributiveLattice ideals(const Poset& p, LatticeOptions options);
  explicit DistributiveLattice(Poset p) : source_(std::move(p)) {}

  Poset source_;
  std::vector<PosetIdeal> ideals_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<Mask, std::size_t> index_;
};

// Throws TooLarge past options.max_ideals.
DistributiveLattice ideals(const Poset& p, LatticeOptions options = {});

// Ideals covering exactly one ideal (the principal ideals), ordered by
// inclusion, each labelled by the source label of its top element.
Poset join_irreducibles(const DistributiveLattice& lattice);

// No cover beta < alpha such that every other lattice element lies above
// alpha or below beta. Computed on the lattice directly, then compared
// against simplicity of the join-irreducible poset (ConsistencyFailure on
// disagreement).
bool is_simple_lattice(const DistributiveLattice& lattice);
bool has_bridge_cover(const DistributiveLattice& lattice);

// Number of order-reversing maps P -> {0..i}.
BigInt order_polynomial_value(const Poset& p, unsigned i);
// Values H(0..upto) in one pass.
std::vector<BigInt> order_polynomial_values(const Poset& p, unsigned upto);

struct HVector {
  std::vector<BigInt> coefficients;  // h_0 .. h_s, trailing zeros stripped
  std::size_t dimension = 0;         // |P| + 1

  std::size_t degree() const { return coefficients.size() - 1; }
  const BigInt& leading() const { return coefficients.back(); }
};

// Numerator of the Hilbert series of the Hibi ring. ConsistencyFailure if
// an entry is negative or the degree exceeds |P| + 1 - rank(P^).
HVector h_vector(const Poset& p);
// |P| + 1 - rank(P^): the degree the numerator must have.
inline int expected_h_degree(const Poset& p) {
  return static_cast<int>(p.size()) + 1 - hat_rank(p);
}

struct GridPoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Staircase region of the m x n grid. Column i holds the points
// (i, lower[i]) .. (i, upper[i]).
struct Ladder {
  int m = 0;
  int n = 0;
  std::vector<int> lower;
  std::vector<int> upper;
  std::vector<GridPoint> lower_corners;
  std::vector<GridPoint> upper_corners;

  bool contains(int i, int j) const {
    return i >= 0 && i <= m && j >= lower[i] && j <= upper[i];
  }
  std::size_t point_count() const;
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

// Builds corners from the column bounds.
Ladder make_ladder(int m, int n, std::vector<int> lower, std::vector<int> upper);

// Embeds the ideals of a planar poset via alpha -> (|alpha & C1|, |alpha & C2|),
// with the longer chain on the first axis. Throws NotPlanar.
Ladder ladder_of_planar(const Poset& p, const ChainDecomposition& dec);

// Inverse direction: a poset on chains x1..xm, y1..yn whose ideal lattice is
// the given ladder. Throws ParameterOutOfRange for malformed bounds.
Poset poset_from_ladder(const Ladder& ladder);

// Some lower inside corner (i, j) has i < j or some upper one has i > j.
bool corners_cross_diagonal(const Ladder& ladder);

}  // namespace hibi
