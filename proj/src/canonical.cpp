#include "hibi/canonical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

#include "hibi/error.hpp"

namespace hibi {

void SearchBudget::charge(std::uint64_t n) {
  used_ += n;
  if (used_ > limit_)
    throw Error(ErrorKind::BudgetExceeded,
                "enumeration budget of " + std::to_string(limit_) + " exhausted");
}

namespace {

void charge(SearchBudget* b) {
  if (b) b->charge();
}

bool check_shape(const Poset& p, const GradedFunction& v) {
  return v.values.size() == p.size();
}

// Closure of {bottom} under tight upward covers and arbitrary downward
// covers, restricted to the assigned elements. `pending` reports an upward
// cover into an unassigned element that can still turn out tight.
struct Closure {
  Mask members = 0;
  bool reaches_top = false;
  bool pending = false;
};

Closure close_from_bottom(const Poset& p, int d, const std::vector<int>& v, Mask assigned) {
  Closure c;
  std::vector<Element> queue;
  auto visit = [&](Element x) {
    if (!has(c.members, x)) {
      c.members |= bit(x);
      queue.push_back(x);
    }
  };
  auto could_be_tight = [&](int from, Element b) {
    if (from - 1 < hat_depth(p, b)) return false;
    for (Element y : p.lower_covers(b))
      if (has(assigned, y) && v[y] < from) return false;
    return true;
  };
  for (Element m : p.minimal_elements()) {
    if (has(assigned, m)) {
      if (v[m] == d - 1) visit(m);
    } else if (could_be_tight(d, m)) {
      c.pending = true;
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element a = queue[q];
    if (p.is_maximal(a) && v[a] == 1) c.reaches_top = true;
    for (Element y : p.lower_covers(a)) visit(y);
    for (Element b : p.upper_covers(a)) {
      if (has(assigned, b)) {
        if (v[a] - v[b] == 1) visit(b);
      } else if (could_be_tight(v[a], b)) {
        c.pending = true;
      }
    }
  }
  return c;
}

// DFS over value assignments along the linear extension, bottom first.
// `strict` selects T (values in [depth^ , min lower - 1]) or S (values in
// [0, min lower]). `accept` is called after each assignment with the prefix
// length; returning false prunes the subtree.
struct Walker {
  const Poset& p;
  int d;
  bool strict;
  SearchBudget* budget;
  std::function<bool(std::size_t)> accept;
  std::function<void()> leaf;
  std::vector<int> v;
  const std::vector<Element>& order;

  Walker(const Poset& p_, int d_, bool strict_, SearchBudget* b)
      : p(p_), d(d_), strict(strict_), budget(b), v(p_.size(), 0), order(p_.linear_extension()) {}

  void run(std::size_t k) {
    if (k == order.size()) {
      leaf();
      return;
    }
    Element x = order[k];
    int hi = strict ? d - 1 : d;
    for (Element y : p.lower_covers(x)) hi = std::min(hi, strict ? v[y] - 1 : v[y]);
    int lo = strict ? hat_depth(p, x) : 0;
    for (int val = lo; val <= hi; ++val) {
      charge(budget);
      v[x] = val;
      if (accept && !accept(k + 1)) continue;
      run(k + 1);
    }
  }
};

std::vector<GradedFunction> enumerate(const Poset& p, int d, bool strict, SearchBudget* budget) {
  std::vector<GradedFunction> out;
  if (d < 0) return out;
  Walker w(p, d, strict, budget);
  w.leaf = [&] { out.push_back({d, w.v}); };
  w.run(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GradedFunction> generators_of_degree(const Poset& p, int d, SearchBudget* budget,
                                                 bool stop_at_first) {
  std::vector<GradedFunction> out;
  Walker w(p, d, true, budget);
  const auto& order = p.linear_extension();
  // Depth at which the full closure is known to reach the top; every
  // completion below that point is a generator.
  std::size_t settled = order.size() + 1;
  bool done = false;
  w.accept = [&](std::size_t k) {
    if (done) return false;
    if (k <= settled) settled = order.size() + 1;
    if (settled < k) return true;
    Mask assigned = 0;
    for (std::size_t i = 0; i < k; ++i) assigned |= bit(order[i]);
    auto c = close_from_bottom(p, d, w.v, assigned);
    if (c.reaches_top) {
      settled = k;
      return true;
    }
    return c.pending;
  };
  w.leaf = [&] {
    out.push_back({d, w.v});
    if (stop_at_first) done = true;
  };
  w.run(0);
  std::sort(out.begin(), out.end());
  return out;
}

int default_max_degree(const Poset& p) { return zigzag_degree_bound(p); }

}  // namespace

bool is_in_S(const Poset& p, const GradedFunction& v) {
  if (!check_shape(p, v)) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (v.values[x] < 0 || v.values[x] > v.degree) return false;
    for (Element y : p.lower_covers(x))
      if (v.values[x] > v.values[y]) return false;
  }
  return v.degree >= 0;
}

bool is_in_T(const Poset& p, const GradedFunction& v) {
  if (!check_shape(p, v)) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (v.values[x] < 1 || v.values[x] >= v.degree) return false;
    for (Element y : p.lower_covers(x))
      if (v.values[x] >= v.values[y]) return false;
  }
  return true;
}

std::vector<GradedFunction> enumerate_T(const Poset& p, int d, SearchBudget* budget) {
  return enumerate(p, d, true, budget);
}

std::vector<GradedFunction> enumerate_S(const Poset& p, int d, SearchBudget* budget) {
  return enumerate(p, d, false, budget);
}

std::uint64_t count_T(const Poset& p, int d, SearchBudget* budget) {
  std::uint64_t n = 0;
  Walker w(p, d, true, budget);
  w.leaf = [&] { ++n; };
  w.run(0);
  return n;
}

GradedFunction depth_function(const Poset& p) {
  GradedFunction v{hat_rank(p), std::vector<int>(p.size())};
  for (Element x = 0; x < p.size(); ++x) v.values[x] = hat_depth(p, x);
  return v;
}

GradedFunction coheight_function(const Poset& p) {
  GradedFunction v{hat_rank(p), std::vector<int>(p.size())};
  for (Element x = 0; x < p.size(); ++x) v.values[x] = hat_rank(p) - hat_height(p, x);
  return v;
}

std::optional<Mask> reduction_set(const Poset& p, const GradedFunction& v) {
  if (!is_in_T(p, v))
    throw Error(ErrorKind::NotStrictlyOrderReversing, "function is not in T");
  auto c = close_from_bottom(p, v.degree, v.values, p.all());
  if (c.reaches_top) return std::nullopt;
  return c.members;
}

bool is_minimal_generator(const Poset& p, const GradedFunction& v) {
  return !reduction_set(p, v).has_value();
}

int zigzag_degree_bound(const Poset& p, std::size_t max_exact) {
  const std::size_t n = p.size();
  if (n > max_exact) return std::max(hat_rank(p), static_cast<int>(n) + 1);
  constexpr std::int16_t kUnset = std::numeric_limits<std::int16_t>::min();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int16_t> dp(states * n, kUnset);
  for (Element m : p.minimal_elements()) dp[bit(m) * n + m] = 1;
  int best = std::numeric_limits<int>::min();
  for (std::size_t mask = 1; mask < states; ++mask) {
    for (Element last = 0; last < n; ++last) {
      std::int16_t cur = dp[mask * n + last];
      if (cur == kUnset) continue;
      if (p.is_maximal(last)) best = std::max(best, cur + 1);
      auto step = [&](Element next, int w) {
        if (has(mask, next)) return;
        auto& slot = dp[(mask | bit(next)) * n + next];
        slot = std::max<std::int16_t>(slot, static_cast<std::int16_t>(cur + w));
      };
      for (Element b : p.upper_covers(last)) step(b, 1);
      for (Element b : p.lower_covers(last)) step(b, -1);
    }
  }
  return best;
}

GeneratorSet minimal_generators(const Poset& p, const GeneratorOptions& options) {
  SearchBudget budget(options.budget);
  const int lo = hat_rank(p);
  const int hi = std::max(lo, options.max_degree ? *options.max_degree : default_max_degree(p));
  GeneratorSet out;
  out.min_degree = lo;
  out.max_searched_degree = hi;
  for (int d = lo; d <= hi; ++d) {
    auto g = generators_of_degree(p, d, &budget, false);
    if (!g.empty()) out.degrees[d] = g.size();
    out.generators.insert(out.generators.end(), g.begin(), g.end());
  }
  out.work = budget.used();
  if (out.generators.empty() || out.generators.front().degree != lo)
    throw Error(ErrorKind::ConsistencyFailure, "no minimal generator in degree rank(P^)");
  return out;
}

std::optional<GradedFunction> generator_above_min_degree(const Poset& p,
                                                         const GeneratorOptions& options) {
  SearchBudget budget(options.budget);
  const int lo = hat_rank(p);
  const int hi = std::max(lo, options.max_degree ? *options.max_degree : default_max_degree(p));
  for (int d = lo + 1; d <= hi; ++d) {
    auto g = generators_of_degree(p, d, &budget, true);
    if (!g.empty()) return g.front();
  }
  return std::nullopt;
}

}  // namespace hibi
