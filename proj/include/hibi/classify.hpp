#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hibi/birkhoff.hpp"
#include "hibi/canonical.hpp"
#include "hibi/decomposition.hpp"
#include "hibi/predicates.hpp"

namespace hibi {

struct ClassifyOptions {
  std::uint64_t budget = SearchBudget::kDefaultLimit;
  // Generator searches and the isomorphism round trip run only when
  // |P| <= oracle_threshold; above it only the fast paths are used.
  std::size_t oracle_threshold = 10;

  bool oracle_allowed(const Poset& p) const { return p.size() <= oracle_threshold; }
};

// The three pseudo-Gorenstein computations. Only `criterion` is filled
// above the oracle threshold.
struct PseudoGorensteinEvidence {
  bool criterion = false;                  // height + depth = rank(P^) everywhere
  std::optional<bool> unique_min_degree;   // |T_{rank P^}| = 1
  std::optional<bool> h_leading_one;       // leading h-vector coefficient = 1
};
PseudoGorensteinEvidence pseudo_gorenstein_evidence(const Poset& p,
                                                    const ClassifyOptions& options = {});
// ConsistencyFailure when the computed paths disagree.
bool is_pseudo_gorenstein(const Poset& p, const ClassifyOptions& options = {});

// Purity, cross-checked against cm_type = 1 within the oracle threshold.
bool is_gorenstein(const Poset& p, const ClassifyOptions& options = {});

// Fast-path verdicts, each tagged with the rule that produced it.
struct LevelRule {
  std::string rule;
  bool level;
};
std::vector<LevelRule> level_fast_paths(const Poset& p);

struct LevelVerdict {
  std::optional<bool> oracle;
  std::vector<LevelRule> fast_paths;
  std::optional<bool> value;  // oracle if run, otherwise the fast paths
  bool fast_path_only = false;
};
// ConsistencyFailure when a fast path contradicts the oracle or another
// fast path.
LevelVerdict level_verdict(const Poset& p, const ClassifyOptions& options = {});
// Empty when above the oracle threshold and no fast path applies.
std::optional<bool> is_level(const Poset& p, const ClassifyOptions& options = {});
// Oracle only: no minimal generator above degree rank(P^).
bool is_level_oracle(const Poset& p, std::uint64_t budget = SearchBudget::kDefaultLimit);

struct ConsistencyFlag {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ClassificationReport {
  std::size_t size = 0;
  int rank = 0;
  int rank_hat = 0;

  bool is_pure = false;
  bool is_simple = false;
  bool is_miyazaki = false;
  MiyazakiDirection miyazaki_direction = MiyazakiDirection::None;
  bool is_hyper_planar = false;
  bool is_planar = false;
  std::optional<bool> is_regular;  // only for hyper-planar posets
  bool is_butterfly = false;
  bool cover_inequalities_hold = false;
  std::size_t num_canonical_decompositions = 0;
  std::vector<std::vector<int>> chain_lengths;  // sorted per decomposition

  std::optional<bool> is_pseudo_gorenstein;
  std::optional<bool> is_gorenstein;
  std::optional<bool> is_level;
  std::vector<std::string> level_rules;
  bool fast_path_only = false;

  std::optional<std::size_t> cm_type;
  std::optional<int> gamma;
  std::optional<std::map<int, std::size_t>> generator_degrees;
  std::optional<std::vector<BigInt>> h_vector;
  std::optional<std::size_t> num_ideals;

  std::vector<ConsistencyFlag> consistency;
  std::vector<std::string> errors;  // "Kind: message" of sub-computations that failed

  bool consistent() const;
  bool budget_exceeded() const;
};

// Runs every predicate and numeric with all cross-checks. Sub-errors are
// recorded instead of aborting unrelated checks.
ClassificationReport classify(const Poset& p, const ClassifyOptions& options = {});

}  // namespace hibi
