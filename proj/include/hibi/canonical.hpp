#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// A function on P^ with v(top) = 0. `values[x]` is v(x) for x in P and
// `degree` is v(bottom).
struct GradedFunction {
  int degree = 0;
  std::vector<int> values;

  friend auto operator<=>(const GradedFunction&, const GradedFunction&) = default;
};

// Counts enumerated nodes; throws BudgetExceeded once `limit` is passed.
class SearchBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 5'000'000;

  explicit SearchBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}
  void charge(std::uint64_t n = 1);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Order-reversing (S) and strictly order-reversing (T) on P^, checked on
// covers of P^ including the two adjoined elements.
bool is_in_S(const Poset& p, const GradedFunction& v);
bool is_in_T(const Poset& p, const GradedFunction& v);

// All members of degree d, sorted by value vector.
std::vector<GradedFunction> enumerate_T(const Poset& p, int d, SearchBudget* budget = nullptr);
std::vector<GradedFunction> enumerate_S(const Poset& p, int d, SearchBudget* budget = nullptr);
std::uint64_t count_T(const Poset& p, int d, SearchBudget* budget = nullptr);

// v(x) = depth(x) and v(x) = rank(P^) - height(x), both in P^.
GradedFunction depth_function(const Poset& p);
GradedFunction coheight_function(const Poset& p);

// For v in T: the down-set D of P (as a mask) such that v - 1_{D + bottom}
// is again in T, if there is one. Such a D exists exactly when v is not a
// minimal generator. The returned D is the smallest one.
std::optional<Mask> reduction_set(const Poset& p, const GradedFunction& v);
bool is_minimal_generator(const Poset& p, const GradedFunction& v);

// The maximum over simple paths bottom -> top in the cover graph of P^ of
// (#upward steps - #downward steps). Bounds the degree of every minimal
// generator. Falls back to |P| + 1 above `max_exact` elements.
int zigzag_degree_bound(const Poset& p, std::size_t max_exact = 18);

struct GeneratorOptions {
  // Highest degree searched. Defaults to the zigzag bound, never below
  // rank(P^).
  std::optional<int> max_degree;
  std::uint64_t budget = SearchBudget::kDefaultLimit;
};

struct GeneratorSet {
  std::vector<GradedFunction> generators;  // sorted by (degree, values)
  std::map<int, std::size_t> degrees;      // degree -> count
  int min_degree = 0;
  int max_searched_degree = 0;
  std::uint64_t work = 0;

  std::size_t cm_type() const { return generators.size(); }
  int gamma() const { return generators.back().degree; }
};

GeneratorSet minimal_generators(const Poset& p, const GeneratorOptions& options = {});
inline std::size_t cm_type(const Poset& p, const GeneratorOptions& options = {}) {
  return minimal_generators(p, options).cm_type();
}
inline int gamma(const Poset& p, const GeneratorOptions& options = {}) {
  return minimal_generators(p, options).gamma();
}

// First minimal generator of degree > rank(P^), searching degrees upward.
// Cheaper than the full generator set when only levelness is wanted.
std::optional<GradedFunction> generator_above_min_degree(const Poset& p,
                                                         const GeneratorOptions& options = {});

}  // namespace hibi
