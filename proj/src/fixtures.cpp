#include "hibi/fixtures.hpp"

#include "hibi/birkhoff.hpp"
#include "hibi/families.hpp"
#include "hibi/generalized.hpp"

namespace hibi {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;
using nlohmann::json;

Fixture explicit_fixture(std::string name, std::string note, std::vector<std::string> elements,
                         Covers covers, json expected) {
  PosetDocument doc{name, std::move(elements), std::move(covers), std::move(expected)};
  return {std::move(name), std::move(note), std::move(doc)};
}

Fixture generated_fixture(std::string name, std::string note, const Poset& p, json expected) {
  auto doc = document_of(p, name);
  doc.expected = std::move(expected);
  return {std::move(name), std::move(note), std::move(doc)};
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;

  out.push_back(explicit_fixture(
      "fig1_different",
      "two chains a..f and g..l with cross covers b<i, i<e, h<c, d<j; canonical "
      "decompositions with length multisets {5,5} and {4,6}",
      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"},
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"},
       {"g", "h"}, {"h", "i"}, {"i", "j"}, {"j", "k"}, {"k", "l"},
       {"b", "i"}, {"i", "e"}, {"h", "c"}, {"d", "j"}},
      {{"is_hyper_planar", true}, {"is_planar", true}, {"is_regular", false},
       {"num_canonical_decompositions", 4},
       {"chain_lengths", json::array({json::array({5, 5}), json::array({5, 5}),
                                      json::array({4, 6}), json::array({4, 6})})}}));

  {
    auto lad = make_ladder(7, 5, {0, 0, 0, 1, 2, 2, 2, 3}, {3, 3, 4, 5, 5, 5, 5, 5});
    out.push_back(generated_fixture(
        "fig3_ladder",
        "poset whose ideal lattice is the two-sided ladder in a 7 x 5 rectangle; the "
        "cyclic-sublattice count read off this ladder is carried by the h-vector leading "
        "coefficient instead",
        poset_from_ladder(lad),
        {{"is_planar", true}, {"num_ideals", lad.point_count()}}));
  }

  out.push_back(explicit_fixture(
      "fig4_notvalid",
      "three chains, hyper-planar but not planar: pseudo-Gorenstein with unequal chain "
      "lengths and not regular",
      {"L0", "L1", "L2", "M0", "M2", "R0", "R1", "R2"},
      {{"L0", "L1"}, {"L1", "L2"}, {"M0", "M2"}, {"R0", "R1"}, {"R1", "R2"},
       {"M0", "L1"}, {"R1", "M2"}},
      {{"is_pseudo_gorenstein", true}, {"is_regular", false}, {"is_hyper_planar", true},
       {"num_canonical_decompositions", 1}}));

  out.push_back(explicit_fixture(
      "fig5_butterfly",
      "butterfly with |C1| = 2: regular simple planar, level, not Miyazaki",
      {"y1", "x1", "y2", "z", "x2"},
      {{"y1", "x1"}, {"y2", "z"}, {"z", "x2"}, {"y1", "x2"}, {"y2", "x1"}},
      {{"is_level", true}, {"is_miyazaki", false}, {"is_regular", true},
       {"is_butterfly", true}, {"is_gorenstein", false}, {"num_ideals", 10}}));

  out.push_back(explicit_fixture(
      "fig6_counter",
      "two chains of five with diagonals L1<R1 and R2<L3: non-regular simple planar, "
      "not pseudo-Gorenstein",
      {"L0", "L1", "L2", "L3", "L4", "R0", "R1", "R2", "R3", "R4"},
      {{"L0", "L1"}, {"L1", "L2"}, {"L2", "L3"}, {"L3", "L4"},
       {"R0", "R1"}, {"R1", "R2"}, {"R2", "R3"}, {"R3", "R4"},
       {"L1", "R1"}, {"R2", "L3"}},
      {{"is_pseudo_gorenstein", false}, {"is_simple", true}, {"is_regular", false},
       {"is_planar", true}}));

  out.push_back(generated_fixture(
      "fig7_diagonal",
      "single-diagonal poset with (a,b,c,d) = (1,3,3,1); the family is "
      "make_diagonal_poset(a,b,c,d), level iff b <= d+1 or c <= a+1",
      make_diagonal_poset(1, 3, 3, 1),
      {{"is_level", false}, {"is_planar", true}, {"is_simple", true}}));

  out.push_back(generated_fixture(
      "fig8_ladder",
      "one-corner ladder (m,n,s,t) = (5,4,1,1); the family is "
      "make_one_corner_ladder_poset(m,n,s,t), level iff min(m,n) <= s+t",
      make_one_corner_ladder_poset(5, 4, 1, 1), {{"is_level", false}}));

  out.push_back(generated_fixture(
      "fig8_ladder_level", "one-corner ladder (m,n,s,t) = (2,2,1,1)",
      make_one_corner_ladder_poset(2, 2, 1, 1), {{"is_level", true}}));

  {
    auto p = Poset::build({"a", "b", "c"}, {{"a", "b"}});
    out.push_back(generated_fixture("fig9_type", "a 2-chain next to an isolated point", p,
                                    {{"cm_type", 2}, {"is_gorenstein", false}}));
    out.push_back(generated_fixture("fig9_type_p3",
                                    "the product poset P x chain(2) of fig9_type",
                                    multichain_poset(p, 3).product,
                                    {{"cm_type", 3}, {"size", 6}}));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace hibi
