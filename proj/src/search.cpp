#include "hibi/search.hpp"

#include "hibi/classify.hpp"
#include "hibi/error.hpp"
#include "hibi/families.hpp"
#include "hibi/fixtures.hpp"
#include "hibi/generalized.hpp"

namespace hibi {

namespace {

struct Candidate {
  std::string name;
  Poset poset;
};

std::vector<Candidate> candidates(const SearchOptions& o) {
  std::vector<Candidate> out;
  if (!o.inputs.empty()) {
    for (const auto& d : o.inputs) out.push_back({d.name, d.poset()});
    return out;
  }
  auto fits = [&](const Poset& p) { return p.size() <= o.max_size; };
  if (o.include_fixtures) {
    for (const auto& f : fixture_catalog()) {
      auto p = f.document.poset();
      if (fits(p)) out.push_back({f.name, p});
    }
    for (int p = 2; p <= 6; ++p)
      for (int q = p; q <= 6; ++q) {
        auto b = make_butterfly(p, q);
        if (fits(b)) out.push_back({"butterfly(" + std::to_string(p) + "," + std::to_string(q) + ")", b});
      }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (int c = 1; c <= 3; ++c)
          for (int d = 1; d <= 3; ++d) {
            auto g = make_diagonal_poset(a, b, c, d);
            if (fits(g))
              out.push_back({"diagonal(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + "," + std::to_string(d) + ")",
                             g});
          }
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    std::size_t n = 1 + uniform_below(rng, o.max_size);
    out.push_back({"random-" + std::to_string(i), random_poset(n, o.edge_probability, rng)});
  }
  return out;
}

bool level_of(const Poset& p, std::uint64_t budget) { return is_level_oracle(p, budget); }

}  // namespace

SearchTarget parse_search_target(const std::string& name) {
  if (name == "planar-inequality-vs-level") return SearchTarget::PlanarInequalityVsLevel;
  if (name == "level-implies-level-r") return SearchTarget::LevelImpliesLevelR;
  if (name == "miyazaki-product") return SearchTarget::MiyazakiProduct;
  if (name == "type-monotonicity") return SearchTarget::TypeMonotonicity;
  throw Error(ErrorKind::ParseError, "unknown search target '" + name + "'");
}

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::PlanarInequalityVsLevel: return "planar-inequality-vs-level";
    case SearchTarget::LevelImpliesLevelR: return "level-implies-level-r";
    case SearchTarget::MiyazakiProduct: return "miyazaki-product";
    case SearchTarget::TypeMonotonicity: return "type-monotonicity";
  }
  return "";
}

SearchResult run_search(const SearchOptions& o) {
  SearchResult res;
  const auto cands = candidates(o);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& [name, p] = cands[i];
    auto report = [&](std::vector<SearchFinding>& into, std::string detail) {
      into.push_back({i, document_of(p, name), std::move(detail)});
    };
    try {
      switch (o.target) {
        case SearchTarget::PlanarInequalityVsLevel: {
          if (!is_planar(p)) {
            ++res.out_of_scope;
            continue;
          }
          ++res.examined;
          bool ineq = cover_inequalities_hold(p);
          bool level = level_of(p, o.budget);
          if (ineq != level)
            report(res.counterexamples, std::string("cover inequalities ") +
                                            (ineq ? "hold" : "fail") + " but level is " +
                                            (level ? "true" : "false"));
          break;
        }
        case SearchTarget::LevelImpliesLevelR: {
          if (!level_of(p, o.budget)) {
            ++res.out_of_scope;
            continue;
          }
          ++res.examined;
          auto m = multichain_poset(p, o.r);
          if (!level_of(m.product, o.budget))
            report(res.counterexamples, "level but P_" + std::to_string(o.r) + " is not");
          break;
        }
        case SearchTarget::MiyazakiProduct: {
          ++res.examined;
          auto m = multichain_poset(p, o.r);
          bool a = is_miyazaki(p), b = is_miyazaki(m.product);
          if (a != b)
            report(res.counterexamples, std::string("Miyazaki(P) = ") + (a ? "true" : "false") +
                                            ", Miyazaki(P_r) = " + (b ? "true" : "false"));
          break;
        }
        case SearchTarget::TypeMonotonicity: {
          ++res.examined;
          try {
            auto c = compare_types(p, o.r, o.budget);
            if (c.type_L < c.type_Lr)
              report(res.notes, "type " + std::to_string(c.type_L) + " -> " +
                                    std::to_string(c.type_Lr));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::ConsistencyFailure) throw;
            report(res.counterexamples, e.what());
          }
          break;
        }
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::TooLarge) {
        ++res.skipped;
        continue;
      }
      throw;
    }
  }
  return res;
}

}  // namespace hibi
