// One line per acceptance criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hibi/birkhoff.hpp"
#include "hibi/canonical.hpp"
#include "hibi/classify.hpp"
#include "hibi/decomposition.hpp"
#include "hibi/error.hpp"
#include "hibi/families.hpp"
#include "hibi/fixtures.hpp"
#include "hibi/generalized.hpp"
#include "hibi/predicates.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::uint64_t kRetryBudget = 200'000'000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = o.ok && secs < limit_seconds;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs, limit_seconds);
  std::fflush(stdout);
}

Poset fixture(const std::string& name) { return find_fixture(name)->document.poset(); }

const std::vector<Poset>& corpus() {
  static const auto c = oracle::random_corpus(1000, 7, kCorpusSeed);
  return c;
}

bool equal_lengths(const ChainDecomposition& d) {
  auto l = d.lengths();
  return std::adjacent_find(l.begin(), l.end(), std::not_equal_to<>()) == l.end();
}

// Planar posets from random staircase regions of an m x n grid.
std::vector<Poset> ladder_posets(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  while (out.size() < count) {
    int m = 1 + static_cast<int>(uniform_below(rng, 6));
    int n = 1 + static_cast<int>(uniform_below(rng, 6));
    std::vector<int> upper(m + 1), lower(m + 1, 0);
    for (int i = 0; i <= m; ++i) {
      int lo = i == 0 ? 0 : upper[i - 1];
      upper[i] = i == m ? n : lo + static_cast<int>(uniform_below(rng, n - lo + 1));
    }
    for (int i = 1; i <= m; ++i) {
      int hi = upper[i - 1];
      lower[i] = lower[i - 1] + static_cast<int>(uniform_below(rng, hi - lower[i - 1] + 1));
    }
    out.push_back(poset_from_ladder(make_ladder(m, n, lower, upper)));
  }
  return out;
}

std::vector<Poset> family_posets() {
  std::vector<Poset> out;
  for (int p = 2; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) out.push_back(make_butterfly(p, q));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d) out.push_back(make_diagonal_poset(a, b, c, d));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      out.push_back(disjoint_union(chain_poset(i), chain_poset(j)));
      out.push_back(direct_product(chain_poset(i), chain_poset(std::min(j, 2))));
    }
  return out;
}

std::vector<Poset> structured_pool() {
  std::vector<Poset> pool = family_posets();
  for (auto& p : ladder_posets(600, 7)) pool.push_back(std::move(p));
  for (auto& p : oracle::random_corpus(3000, 8, kCorpusSeed + 1)) pool.push_back(std::move(p));
  std::mt19937_64 rng(kCorpusSeed + 2);
  auto extra = ladder_posets(150, 8);
  for (std::size_t i = 0; i < extra.size(); ++i)
    pool.push_back(disjoint_union(extra[i], chain_poset(1 + int(uniform_below(rng, 4)))));
  return pool;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main() {
  run(1, "types of P and P_3", 60, [] {
    auto types = [](std::uint64_t budget, std::string& note) {
      auto p = fixture("fig9_type");
      auto p3 = multichain_poset(p, 3).product;
      std::size_t a = cm_type(p, {std::nullopt, budget}), b = cm_type(p3, {std::nullopt, budget});
      note = fmt("|P| = %zu, |P_3| = %zu", p.size(), p3.size());
      return std::pair{a, b};
    };
    std::string note;
    std::pair<std::size_t, std::size_t> t;
    try {
      t = types(SearchBudget::kDefaultLimit, note);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      t = types(kRetryBudget, note);
      note += ", retried with larger budget";
    }
    return Outcome{t.first == 2 && t.second == 3,
                   fmt("type(L) = %zu, type(L_3) = %zu, %s", t.first, t.second, note.c_str())};
  });

  run(2, "one-corner ladders", 120, [] {
    int cases = 0, bad = 0;
    std::string first;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c)
          for (int d = 1; d <= 4; ++d) {
            int m = a + b - 1, n = c + d - 1, s = a, t = d;
            auto p = make_one_corner_ladder_poset(m, n, s, t);
            bool level = is_level_oracle(p);
            ++cases;
            if (level != (std::min(m, n) <= s + t)) {
              if (!bad++) first = fmt(" first m=%d n=%d s=%d t=%d", m, n, s, t);
            }
          }
    return Outcome{bad == 0, fmt("%d ladders, %d mismatches%s", cases, bad, first.c_str())};
  });

  run(3, "butterflies", 60, [] {
    int cases = 0, bad = 0;
    for (int p = 2; p <= 5; ++p)
      for (int q = p; q <= 5; ++q) {
        auto P = make_butterfly(p, q);
        bool b = is_level_oracle(P);
        bool c = cover_inequalities_hold(P);
        bool d = cover_equalities_hold(P);
        auto w = is_butterfly(P);
        bool e = w && w->c1.size() == 2;
        ++cases;
        if (!w || b != c || c != d || d != e || e != (p == 2)) ++bad;
      }
    return Outcome{bad == 0, fmt("%d butterflies, level = ineq = eq = (|C1| = 2) failed on %d", cases, bad)};
  });

  run(4, "pseudo-Gorenstein paths", 300, [] {
    std::size_t cases = 0, bad = 0, pg = 0;
    auto check = [&](const Poset& p) {
      bool crit = all_elements_on_longest_chains(p);
      SearchBudget budget;
      bool unique = count_T(p, hat_rank(p), &budget) == 1;
      bool lead = h_vector(p).leading() == 1;
      ++cases;
      pg += crit;
      if (crit != unique || unique != lead) ++bad;
    };
    for (const auto& f : fixture_catalog()) check(f.document.poset());
    for (const auto& p : corpus()) check(p);
    return Outcome{bad == 0, fmt("%zu posets (%zu pseudo-Gorenstein), %zu disagreements", cases, pg, bad)};
  });

  run(5, "fixture predicates", 60, [] {
    std::ostringstream out;
    bool ok = true;
    auto note = [&](const char* what, bool v) {
      if (!v) {
        ok = false;
        out << " failed:" << what;
      }
    };
    {
      auto p = fixture("fig4_notvalid");
      note("fig4", is_pseudo_gorenstein(p) && !is_regular(p));
    }
    {
      auto p = fixture("fig6_counter");
      note("fig6", !is_pseudo_gorenstein(p) && is_simple(p) && !is_regular(p));
    }
    {
      auto p = fixture("fig5_butterfly");
      note("fig5", is_level_oracle(p) && !is_miyazaki(p) && is_regular(p));
    }
    auto p = fixture("fig1_different");
    auto decs = canonical_chain_decompositions(p);
    std::set<std::multiset<int>> classes;
    const Element b = *p.find("b"), i = *p.find("i");
    bool diag55 = false, plain46 = false;
    for (const auto& d : decs) {
      auto l = d.lengths();
      std::multiset<int> ms(l.begin(), l.end());
      classes.insert(ms);
      auto dg = diagonals(p, d);
      bool has = std::any_of(dg.begin(), dg.end(),
                             [&](const CoverPair& c) { return c.upper == i && c.lower == b; });
      if (ms == std::multiset<int>{5, 5}) diag55 = diag55 || has;
      if (ms == std::multiset<int>{4, 6}) plain46 = plain46 || !has;
    }
    note("fig1 classes", classes == std::set<std::multiset<int>>{{5, 5}, {4, 6}});
    note("fig1 diagonal", diag55 && plain46);
    out << (ok ? "fig4 fig5 fig6 as stated; " : "; ") << "fig1 has " << decs.size()
        << " canonical decompositions in " << classes.size()
        << " length classes; a {5,5} one has b<i as a diagonal, a {4,6} one does not";
    return Outcome{ok, out.str()};
  });

  run(6, "level implies cover inequalities", 300, [] {
    std::size_t level = 0, bad = 0;
    for (const auto& p : corpus()) {
      bool l = is_level_oracle(p);
      level += l;
      if (l && !cover_inequalities_hold(p)) ++bad;
    }
    return Outcome{bad == 0, fmt("%zu posets, %zu level, %zu violations", corpus().size(), level, bad)};
  });

  static const auto pool = structured_pool();

  run(7, "regular planar levelness", 300, [] {
    std::size_t cases = 0, bad = 0, level = 0;
    for (const auto& p : pool) {
      if (!is_planar(p) || !is_regular(p)) continue;
      bool a = is_level_oracle(p);
      bool b = cover_inequalities_hold(p);
      bool c = cover_equalities_hold(p);
      ++cases;
      level += a;
      if (a != b || b != c) ++bad;
    }
    return Outcome{bad == 0 && cases >= 200,
                   fmt("%zu regular planar posets (%zu level), %zu mismatches", cases, level, bad)};
  });

  run(8, "equal lengths and simple planar", 300, [] {
    std::size_t reg = 0, eq = 0, simple = 0, bad_len = 0, bad_easy = 0, bad_simple = 0;
    for (const auto& p : pool) {
      auto decs = canonical_chain_decompositions(p);
      if (decs.empty()) continue;
      bool pg = is_pseudo_gorenstein(p);
      if (is_regular(p)) {
        ++reg;
        for (const auto& d : decs) {
          bool same = equal_lengths(d);
          if (pg != same) ++bad_len;
          if (same) {
            ++eq;
            bool gor = is_pure(p), lev = is_level_oracle(p), miy = is_miyazaki(p);
            if (gor != lev || lev != miy) ++bad_easy;
          }
        }
      }
      if (decs.front().size() == 2 && is_simple(p)) {
        ++simple;
        bool regular = is_regular(p);
        for (const auto& d : decs)
          if (pg != (regular && equal_lengths(d))) ++bad_simple;
      }
    }
    bool ok = reg >= 200 && simple >= 200 && !bad_len && !bad_easy && !bad_simple;
    return Outcome{ok, fmt("%zu regular hyper-planar (%zu mismatches), %zu equal-length decompositions "
                           "(%zu mismatches), %zu simple planar (%zu mismatches)",
                           reg, bad_len, eq, bad_easy, simple, bad_simple)};
  });

  run(9, "multichain products", 600, [] {
    auto posets = oracle::random_corpus(200, 6, kCorpusSeed + 3);
    std::size_t bad = 0, strict = 0;
    std::string first;
    for (const auto& p : posets) {
      try {
        auto f = verify_product_formulas(p, 3);
        if (!f.ok) throw Error(ErrorKind::ConsistencyFailure, f.first_violation);
        auto t = compare_types(p, 3);
        strict += t.type_L < t.type_Lr;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ConsistencyFailure) throw;
        if (!bad++) first = std::string(", first: ") + e.what();
      }
    }
    return Outcome{bad == 0, fmt("200 posets, r = 3, %zu with type increase, %zu violations%s", strict,
                                 bad, first.c_str())};
  });

  run(10, "Birkhoff round trip and h-vectors", 120, [] {
    std::size_t cases = 0, bad = 0;
    for (const auto& f : fixture_catalog()) {
      auto p = f.document.poset();
      auto lat = ideals(p);
      auto h = h_vector(p);
      ++cases;
      bool ok = is_isomorphic(join_irreducibles(lat), p) && order_polynomial_value(p, 1) == lat.size() &&
                h.coefficients.front() == 1 &&
                static_cast<int>(h.degree()) == static_cast<int>(p.size()) - (p.rank() + 1);
      bad += !ok;
    }
    return Outcome{bad == 0, fmt("%zu fixtures, h-degree = |P| - (elements in a longest chain), %zu failures",
                                 cases, bad)};
  });

  run(11, "generator degree bound", 300, [] {
    std::size_t above = 0, chains_at_rank = 0, differ = 0;
    for (const auto& p : corpus()) {
      int n = static_cast<int>(p.size());
      auto g = minimal_generators(p);
      auto wide = minimal_generators(p, {n + 2, SearchBudget::kDefaultLimit});
      if (g.generators != wide.generators) ++differ;
      bool chain = p.rank() + 1 == n;
      for (const auto& v : g.generators)
        if (v.degree > n) {
          if (chain && v.degree == hat_rank(p)) ++chains_at_rank;
          else ++above;
        }
    }
    return Outcome{above == 0 && differ == 0,
                   fmt("%zu posets: %zu non-chain generators above |P|; %zu chains whose only generator "
                       "sits at rank P^ = |P| + 1; bound |P| + 2 changed %zu generator sets",
                       corpus().size(), above, chains_at_rank, differ)};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
