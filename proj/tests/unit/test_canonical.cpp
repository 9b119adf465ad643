#include <doctest.h>

#include <set>

#include "hibi/canonical.hpp"
#include "hibi/error.hpp"
#include "hibi/families.hpp"
#include "hibi/fixtures.hpp"
#include "hibi/predicates.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

Poset fixture(const std::string& name) { return find_fixture(name)->document.poset(); }

}  // namespace

TEST_CASE("T on small posets") {
  auto a2 = antichain_poset(2);
  auto t2 = enumerate_T(a2, 2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].values == std::vector<int>{1, 1});
  CHECK(enumerate_T(a2, 3).size() == 4);
  CHECK(enumerate_T(a2, 1).empty());
  for (int n = 1; n <= 5; ++n) {
    auto c = chain_poset(n);
    auto t = enumerate_T(c, n + 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == depth_function(c));
    CHECK(enumerate_T(c, n).empty());
  }
}

TEST_CASE("T and S enumeration agree with exhaustive filtering") {
  for (const auto& p : oracle::random_corpus(120, 5, 41)) {
    for (int d = 0; d <= hat_rank(p) + 2; ++d) {
      CHECK(enumerate_T(p, d) == oracle::brute_T(p, d));
      CHECK(enumerate_S(p, d) == oracle::brute_S(p, d));
      CHECK(count_T(p, d) == oracle::brute_T(p, d).size());
    }
    CHECK(enumerate_T(p, hat_rank(p) - 1).empty());
    CHECK_FALSE(enumerate_T(p, hat_rank(p)).empty());
  }
}

TEST_CASE("membership predicates") {
  auto c = chain_poset(2);
  CHECK(is_in_T(c, {3, {2, 1}}));
  CHECK_FALSE(is_in_T(c, {3, {1, 1}}));
  CHECK(is_in_S(c, {3, {1, 1}}));
  CHECK_FALSE(is_in_S(c, {3, {1, 2}}));
  CHECK_FALSE(is_in_T(c, {3, {3, 1}}));
  CHECK_FALSE(is_in_T(c, {3, {2}}));
}

TEST_CASE("minimal generators agree with the definition") {
  for (const auto& p : oracle::random_corpus(120, 5, 42)) {
    const int top = static_cast<int>(p.size()) + 2;
    auto brute = oracle::brute_generators(p, top);
    auto g = minimal_generators(p);
    CHECK(g.generators == brute);
    CHECK(minimal_generators(p, {top, SearchBudget::kDefaultLimit}).generators == brute);
    const int zig = zigzag_degree_bound(p);
    for (const auto& v : brute) CHECK(v.degree <= zig);
    CHECK(g.min_degree == hat_rank(p));
    CHECK(g.generators.front().degree == hat_rank(p));
  }
}

TEST_CASE("reduction witnesses") {
  for (const auto& p : oracle::random_corpus(80, 5, 43)) {
    for (int d = hat_rank(p); d <= static_cast<int>(p.size()) + 1; ++d) {
      for (const auto& v : enumerate_T(p, d)) {
        auto D = reduction_set(p, v);
        if (D) {
          CHECK(is_down_set(p, *D));
          GradedFunction w{v.degree - 1, v.values};
          for (Element x = 0; x < p.size(); ++x)
            if (has(*D, x)) --w.values[x];
          CHECK(is_in_T(p, w));
        } else {
          // no down-set works
          for (Mask m = 0; m <= p.all(); ++m) {
            if (!is_down_set(p, m)) continue;
            GradedFunction w{v.degree - 1, v.values};
            for (Element x = 0; x < p.size(); ++x)
              if (has(m, x)) --w.values[x];
            CHECK_FALSE(is_in_T(p, w));
            if (m == p.all()) break;
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(reduction_set(chain_poset(2), {3, {1, 1}}), Error);
}

TEST_CASE("generator examples") {
  auto g = minimal_generators(antichain_poset(2));
  CHECK(g.cm_type() == 1);
  CHECK(g.gamma() == 2);
  CHECK(cm_type(fixture("fig9_type")) == 2);
  CHECK(cm_type(fixture("fig9_type_p3")) == 3);
  for (int n = 1; n <= 5; ++n) {
    auto c = chain_poset(n);
    CHECK(cm_type(c) == 1);
    CHECK(gamma(c) == hat_rank(c));
  }
  auto b33 = make_butterfly(3, 3);
  CHECK(gamma(b33) > hat_rank(b33));
  CHECK(generator_above_min_degree(b33).has_value());
  CHECK_FALSE(generator_above_min_degree(make_butterfly(2, 4)).has_value());
}

TEST_CASE("zigzag bound") {
  CHECK(zigzag_degree_bound(chain_poset(4)) == 5);
  CHECK(zigzag_degree_bound(antichain_poset(3)) == 2);
  for (const auto& p : oracle::random_corpus(100, 8, 44)) {
    int z = zigzag_degree_bound(p);
    CHECK(z >= hat_rank(p));
    CHECK(z <= static_cast<int>(p.size()) + 1);
    CHECK(zigzag_degree_bound(p, 0) >= z);
  }
}

TEST_CASE("depth and coheight functions") {
  for (const auto& p : oracle::random_corpus(200, 8, 45)) {
    auto v = depth_function(p), w = coheight_function(p);
    CHECK(is_in_T(p, v));
    CHECK(is_in_T(p, w));
    CHECK(v.degree == hat_rank(p));
    CHECK((v == w) == all_elements_on_longest_chains(p));
  }
  CHECK(depth_function(chain_poset(3)) == coheight_function(chain_poset(3)));
  CHECK(depth_function(antichain_poset(2)) == coheight_function(antichain_poset(2)));
  auto f6 = fixture("fig6_counter");
  auto v = depth_function(f6), w = coheight_function(f6);
  CHECK(v != w);
  // L2 lies on no longest chain
  Element l2 = f6.index_of("L2");
  CHECK(v.values[l2] == 3);
  CHECK(w.values[l2] == 4);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(minimal_generators(make_butterfly(4, 5), {std::nullopt, 50}), Error);
  try {
    minimal_generators(make_butterfly(4, 5), {std::nullopt, 50});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  SearchBudget b(3);
  CHECK_THROWS_AS(enumerate_T(antichain_poset(3), 4, &b), Error);
}
