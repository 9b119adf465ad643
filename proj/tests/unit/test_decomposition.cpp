#include <doctest.h>

#include <algorithm>

#include "hibi/decomposition.hpp"
#include "hibi/error.hpp"
#include "hibi/families.hpp"
#include "hibi/fixtures.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

Poset fixture(const std::string& name) { return find_fixture(name)->document.poset(); }

std::vector<Element> chain_of_labels(const Poset& p, std::initializer_list<const char*> ls) {
  std::vector<Element> out;
  for (auto l : ls) out.push_back(p.index_of(l));
  return out;
}

// Partitions of P into maximal chains, found by trying every subset as a
// chain. Independent of the top-down construction in the library.
std::size_t brute_decomposition_count(const Poset& p) {
  std::vector<Mask> chains;
  for (Mask m = 1; m <= p.all(); ++m) {
    bool chain = true;
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        if (has(m, x) && has(m, y) && x != y && !p.comparable(x, y)) chain = false;
    if (!chain) continue;
    bool maximal = true;
    for (Element z = 0; z < p.size() && maximal; ++z) {
      if (has(m, z)) continue;
      bool fits = true;
      for (Element x = 0; x < p.size(); ++x)
        if (has(m, x) && !p.comparable(x, z)) fits = false;
      if (fits) maximal = false;
    }
    if (maximal) chains.push_back(m);
    if (m == p.all()) break;
  }
  std::function<std::size_t(Mask, std::size_t)> rec = [&](Mask left, std::size_t from) -> std::size_t {
    if (left == 0) return 1;
    Element x = std::countr_zero(left);
    std::size_t n = 0;
    for (std::size_t i = from; i < chains.size(); ++i)
      if (has(chains[i], x) && (chains[i] & ~left) == 0) n += rec(left & ~chains[i], 0);
    return n;
  };
  return rec(p.all(), 0);
}

}  // namespace

TEST_CASE("fig1: four canonical decompositions, two length multisets") {
  auto p = fixture("fig1_different");
  auto decs = canonical_chain_decompositions(p);
  CHECK(decs.size() == 4);
  CHECK(brute_decomposition_count(p) == 4);
  ChainDecomposition C{{chain_of_labels(p, {"a", "b", "c", "d", "e", "f"}),
                        chain_of_labels(p, {"g", "h", "i", "j", "k", "l"})}};
  ChainDecomposition D{{chain_of_labels(p, {"a", "b", "i", "e", "f"}),
                        chain_of_labels(p, {"g", "h", "c", "d", "j", "k", "l"})}};
  CHECK(is_canonical(p, C));
  CHECK(is_canonical(p, D));
  CHECK(std::find(decs.begin(), decs.end(), C) != decs.end());
  CHECK(std::find(decs.begin(), decs.end(), D) != decs.end());
  CHECK(C.lengths() == std::vector<int>{5, 5});
  CHECK(D.lengths() == std::vector<int>{4, 6});
  CoverPair ib{p.index_of("i"), p.index_of("b")};
  auto dc = diagonals(p, C), dd = diagonals(p, D);
  CHECK(std::find(dc.begin(), dc.end(), ib) != dc.end());
  CHECK(std::find(dd.begin(), dd.end(), ib) == dd.end());
  CHECK_FALSE(is_regular(p));
}

TEST_CASE("canonical decompositions match a brute-force partition count") {
  for (const auto& p : oracle::random_corpus(150, 7, 21)) {
    auto decs = canonical_chain_decompositions(p);
    CHECK(decs.size() == brute_decomposition_count(p));
    for (const auto& d : decs) {
      CHECK(is_canonical(p, d));
      CHECK(d.size() == p.maximal_elements().size());
    }
  }
}

TEST_CASE("fig4: unique decomposition, unequal lengths, not regular") {
  auto p = fixture("fig4_notvalid");
  auto decs = canonical_chain_decompositions(p);
  REQUIRE(decs.size() == 1);
  auto l = decs[0].lengths();
  std::sort(l.begin(), l.end());
  CHECK(l == std::vector<int>{1, 2, 2});
  CHECK(is_hyper_planar(p));
  CHECK_FALSE(is_planar(p));
  CHECK_FALSE(is_regular(p));
}

TEST_CASE("fig6: two diagonals, not regular") {
  auto p = fixture("fig6_counter");
  auto decs = canonical_chain_decompositions(p);
  REQUIRE(decs.size() == 1);
  CHECK(diagonals(p, decs[0]).size() == 2);
  CHECK(is_planar(p));
  CHECK_FALSE(is_regular(p));
}

TEST_CASE("regularity consequences") {
  std::size_t regular = 0;
  for (const auto& p : oracle::random_corpus(400, 8, 22)) {
    if (!is_hyper_planar(p) || !is_regular(p)) continue;
    ++regular;
    auto decs = canonical_chain_decompositions(p);
    std::vector<std::vector<int>> multisets;
    for (const auto& d : decs) {
      auto pos = d.position_of(p.size());
      for (Element x = 0; x < p.size(); ++x) CHECK(pos[x] == p.height(x));
      auto l = d.lengths();
      std::sort(l.begin(), l.end());
      multisets.push_back(l);
      CHECK(*std::max_element(l.begin(), l.end()) == p.rank());
    }
    for (const auto& m : multisets) CHECK(m == multisets.front());
  }
  CHECK(regular > 20);
}

TEST_CASE("butterflies are regular and hyper-planar") {
  for (int p = 2; p <= 6; ++p)
    for (int q = p; q <= 6; ++q) {
      auto b = make_butterfly(p, q);
      CHECK(is_hyper_planar(b));
      CHECK(is_regular(b));
      auto w = is_butterfly(b);
      REQUIRE(w);
      CHECK(static_cast<int>(w->c1.size()) == p);
    }
  CHECK_FALSE(is_butterfly(chain_poset(3)));
  CHECK_FALSE(is_butterfly(make_diagonal_poset(2, 2, 2, 2)));
}

TEST_CASE("single diagonal and errors") {
  auto g = make_diagonal_poset(2, 2, 2, 2);
  auto d = single_diagonal(g);
  REQUIRE(d);
  CHECK(g.label(d->upper) == "x");
  CHECK(g.label(d->lower) == "y");
  ChainDecomposition bogus{{{0}}};
  CHECK_THROWS_AS(diagonals(g, bogus), Error);
}

TEST_CASE("non hyper-planar: the crown with a shared middle") {
  // two minima below two maxima plus a fifth element below one maximum:
  // no partition into maximal chains exists
  auto p = Poset::build({"a", "b", "c", "x", "y"},
                        {{"a", "x"}, {"b", "x"}, {"a", "y"}, {"b", "y"}, {"c", "y"}});
  CHECK_FALSE(is_hyper_planar(p));
  CHECK_THROWS_AS(regularity(p), Error);
}
