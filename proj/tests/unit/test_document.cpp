#include <doctest.h>

#include "hibi/document.hpp"
#include "hibi/dot.hpp"
#include "hibi/error.hpp"
#include "hibi/families.hpp"
#include "hibi/fixtures.hpp"
#include "hibi/random_poset.hpp"
#include "hibi/search.hpp"

using namespace hibi;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ConsistencyFailure;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse documents") {
  auto p = parse_poset(R"({"name": "v", "elements": ["a", "b", "c"], "covers": [["a", "b"], ["a", "c"]]})");
  CHECK(p.size() == 3);
  CHECK(p.covers(1, 0));
  CHECK(p.maximal_elements().size() == 2);

  auto fig5 = find_fixture("fig5_butterfly")->document;
  auto again = parse_document(to_json(fig5).dump());
  CHECK(again.elements == fig5.elements);
  CHECK(again.covers == fig5.covers);
  CHECK(again.expected == fig5.expected);
  CHECK(again.poset() == fig5.poset());

  std::string msg;
  CHECK(kind_of([] { parse_poset(R"({"elements": ["a"], "covers": [["a", "q"]]})"); }, &msg) ==
        ErrorKind::ParseError);
  CHECK(msg.find("covers[0][1]") != std::string::npos);
  CHECK(kind_of([] { parse_poset(R"({"elements": [], "covers": []})"); }) == ErrorKind::EmptyPoset);
  CHECK(kind_of([] { parse_poset("{\n  \"elements\": [\"a\",\n}"); }, &msg) == ErrorKind::ParseError);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(kind_of([] { parse_poset(R"({"elements": ["a", 3]})"); }, &msg) == ErrorKind::ParseError);
  CHECK(msg.find("elements[1]") != std::string::npos);
  CHECK(kind_of([] { parse_poset(R"({"elements": ["a"], "colour": 1})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_poset(R"({"name": "cyc", "elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"); }, &msg) ==
        ErrorKind::CycleDetected);
  CHECK(msg.find("cyc") != std::string::npos);
  CHECK(kind_of([] { load_document("/nonexistent/x.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("document_of round trip") {
  auto p = make_butterfly(2, 3);
  auto doc = document_of(p, "b23");
  CHECK(doc.poset() == p);
}

TEST_CASE("DOT export") {
  auto c = to_dot(chain_poset(2), "c2");
  CHECK(count(c, "->") == 1);
  CHECK(count(c, "[label=") == 2);

  auto fig1 = find_fixture("fig1_different")->document.poset();
  auto decs = canonical_chain_decompositions(fig1);
  auto d = to_dot(fig1, "fig1", decs.front());
  CHECK(count(d, "style=dashed") == diagonals(fig1, decs.front()).size());
  CHECK(to_dot(fig1, "fig1", decs.front()) == d);

  auto fig9 = find_fixture("fig9_type_p3")->document.poset();
  auto nine = to_dot(fig9, "p3");
  CHECK(count(nine, "->") == 5);
}

TEST_CASE("probabilities and random posets") {
  CHECK(parse_probability("0.3").num == 3);
  CHECK(parse_probability("0.3").den == 10);
  CHECK(parse_probability("2/4").num == 1);
  CHECK(parse_probability("1").den == 1);
  CHECK_THROWS_AS(parse_probability("1.5"), Error);
  CHECK_THROWS_AS(parse_probability("x"), Error);
  CHECK_THROWS_AS(parse_probability("1/0"), Error);

  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 20; ++i) CHECK(random_poset(6, {3, 10}, a) == random_poset(6, {3, 10}, b));
  std::mt19937_64 z(3);
  CHECK(random_poset(5, {0, 1}, z).cover_pairs().empty());
  CHECK(random_poset(5, {1, 1}, z).rank() == 4);
}

TEST_CASE("search harness") {
  SearchOptions o;
  o.target = SearchTarget::PlanarInequalityVsLevel;
  o.max_size = 7;
  o.count = 80;
  auto r1 = run_search(o);
  auto r2 = run_search(o);
  CHECK(r1.counterexamples.empty());
  CHECK(r1.examined > 10);
  CHECK(r1.examined == r2.examined);
  CHECK(r1.out_of_scope == r2.out_of_scope);

  SearchOptions t;
  t.target = SearchTarget::TypeMonotonicity;
  t.inputs.push_back(find_fixture("fig9_type")->document);
  auto tr = run_search(t);
  CHECK(tr.counterexamples.empty());
  REQUIRE(tr.notes.size() == 1);
  CHECK(tr.notes[0].detail == "type 2 -> 3");

  CHECK(parse_search_target("miyazaki-product") == SearchTarget::MiyazakiProduct);
  CHECK_THROWS_AS(parse_search_target("nonsense"), Error);
}
