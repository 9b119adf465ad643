#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hibi/document.hpp"
#include "hibi/random_poset.hpp"

namespace hibi {

enum class SearchTarget {
  PlanarInequalityVsLevel,  // cover inequalities <=> level on planar posets
  LevelImpliesLevelR,       // level(P) => level(P_r)
  MiyazakiProduct,          // Miyazaki(P) <=> Miyazaki(P_r)
  TypeMonotonicity,         // type(L) <= type(L_r), with strictness logged
};

// Throws ParseError for an unknown name.
SearchTarget parse_search_target(const std::string& name);
std::string to_string(SearchTarget t);

struct SearchOptions {
  SearchTarget target = SearchTarget::PlanarInequalityVsLevel;
  std::size_t max_size = 7;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  Probability edge_probability;
  int r = 3;
  std::uint64_t budget = 5'000'000;
  bool include_fixtures = true;
  // When nonempty, these are the only candidates.
  std::vector<PosetDocument> inputs;
};

struct SearchFinding {
  std::size_t candidate = 0;
  PosetDocument document;
  std::string detail;
};

struct SearchResult {
  std::size_t examined = 0;     // candidates in scope for the target
  std::size_t skipped = 0;      // budget exhausted
  std::size_t out_of_scope = 0; // e.g. not planar
  std::vector<SearchFinding> counterexamples;
  std::vector<SearchFinding> notes;  // e.g. strict type increases
};

// Candidates: fixtures and parametric families (when enabled) followed by
// `count` random posets of size 1..max_size. Deterministic for a seed.
SearchResult run_search(const SearchOptions& options);

}  // namespace hibi
