#include "hibi/classify.hpp"

#include <algorithm>

#include "hibi/error.hpp"
#include "hibi/families.hpp"

namespace hibi {

namespace {

bool equal_lengths(const ChainDecomposition& d) {
  auto l = d.lengths();
  return std::adjacent_find(l.begin(), l.end(), std::not_equal_to<>()) == l.end();
}

}  // namespace

PseudoGorensteinEvidence pseudo_gorenstein_evidence(const Poset& p, const ClassifyOptions& options) {
  PseudoGorensteinEvidence ev;
  ev.criterion = all_elements_on_longest_chains(p);
  if (options.oracle_allowed(p)) {
    SearchBudget budget(options.budget);
    ev.unique_min_degree = count_T(p, hat_rank(p), &budget) == 1;
    ev.h_leading_one = h_vector(p).leading() == 1;
  }
  return ev;
}

bool is_pseudo_gorenstein(const Poset& p, const ClassifyOptions& options) {
  auto ev = pseudo_gorenstein_evidence(p, options);
  if (ev.unique_min_degree && *ev.unique_min_degree != ev.criterion)
    throw Error(ErrorKind::ConsistencyFailure,
                "pseudo-Gorenstein criterion disagrees with the minimum-degree count");
  if (ev.h_leading_one && *ev.h_leading_one != ev.criterion)
    throw Error(ErrorKind::ConsistencyFailure,
                "pseudo-Gorenstein criterion disagrees with the h-vector");
  return ev.criterion;
}

bool is_gorenstein(const Poset& p, const ClassifyOptions& options) {
  bool pure = is_pure(p);
  if (options.oracle_allowed(p)) {
    bool type_one = cm_type(p, {std::nullopt, options.budget}) == 1;
    if (type_one != pure)
      throw Error(ErrorKind::ConsistencyFailure, "purity disagrees with cm_type = 1");
  }
  return pure;
}

std::vector<LevelRule> level_fast_paths(const Poset& p) {
  std::vector<LevelRule> out;
  if (miyazaki(p).holds()) out.push_back({"miyazaki", true});
  const bool inequalities = cover_inequalities_hold(p);
  if (!inequalities) out.push_back({"cover-inequalities", false});
  const bool planar = is_planar(p);
  if (planar && is_regular(p)) out.push_back({"regular-planar", inequalities});
  if (auto b = is_butterfly(p)) out.push_back({"butterfly", b->c1.size() == 2});
  if (planar && is_simple(p))
    if (auto diag = single_diagonal(p)) out.push_back({"single-diagonal", cover_inequality_holds(p, *diag)});
  return out;
}

bool is_level_oracle(const Poset& p, std::uint64_t budget) {
  return !generator_above_min_degree(p, {std::nullopt, budget}).has_value();
}

LevelVerdict level_verdict(const Poset& p, const ClassifyOptions& options) {
  LevelVerdict v;
  v.fast_paths = level_fast_paths(p);
  for (const auto& r : v.fast_paths)
    if (r.level != v.fast_paths.front().level)
      throw Error(ErrorKind::ConsistencyFailure,
                  "level rules '" + r.rule + "' and '" + v.fast_paths.front().rule + "' disagree");
  if (options.oracle_allowed(p)) {
    v.oracle = is_level_oracle(p, options.budget);
    for (const auto& r : v.fast_paths)
      if (r.level != *v.oracle)
        throw Error(ErrorKind::ConsistencyFailure,
                    "level rule '" + r.rule + "' contradicts the generator search");
    v.value = v.oracle;
  } else {
    v.fast_path_only = true;
    if (!v.fast_paths.empty()) v.value = v.fast_paths.front().level;
  }
  return v;
}

std::optional<bool> is_level(const Poset& p, const ClassifyOptions& options) {
  return level_verdict(p, options).value;
}

bool ClassificationReport::consistent() const {
  return std::all_of(consistency.begin(), consistency.end(),
                     [](const ConsistencyFlag& f) { return f.ok; });
}

bool ClassificationReport::budget_exceeded() const {
  return std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
    return e.rfind(to_string(ErrorKind::BudgetExceeded), 0) == 0;
  });
}

ClassificationReport classify(const Poset& p, const ClassifyOptions& options) {
  ClassificationReport r;
  auto flag = [&](std::string name, bool ok, std::string detail = {}) {
    r.consistency.push_back({std::move(name), ok, std::move(detail)});
  };
  auto attempt = [&](const char* what, auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      r.errors.push_back(e.what());
      if (e.kind() == ErrorKind::ConsistencyFailure) flag(what, false, e.what());
    }
  };

  r.size = p.size();
  r.rank = p.rank();
  r.rank_hat = hat_rank(p);
  r.is_pure = is_pure(p);
  r.is_simple = is_simple(p);
  const auto mw = miyazaki(p);
  r.is_miyazaki = mw.holds();
  r.miyazaki_direction = mw.direction();
  {
    const auto alt = miyazaki_by_chain_lengths(p);
    flag("miyazaki.cover_form_matches_chain_form",
         alt.ascending == mw.ascending && alt.descending == mw.descending);
  }
  r.cover_inequalities_hold = cover_inequalities_hold(p);

  const auto decs = canonical_chain_decompositions(p);
  r.num_canonical_decompositions = decs.size();
  r.is_hyper_planar = !decs.empty();
  r.is_planar = r.is_hyper_planar && p.maximal_elements().size() == 2;
  for (const auto& d : decs) {
    auto l = d.lengths();
    std::sort(l.begin(), l.end());
    r.chain_lengths.push_back(std::move(l));
  }
  r.is_butterfly = is_butterfly(p).has_value();
  if (r.is_hyper_planar) {
    r.is_regular = regularity(p).regular;
    if (*r.is_regular) {
      bool heights = true;
      for (const auto& d : decs) {
        auto pos = d.position_of(p.size());
        for (Element x = 0; x < p.size(); ++x) heights = heights && pos[x] == p.height(x);
      }
      flag("regular.chain_positions_are_heights", heights);
      flag("regular.same_length_multisets",
           std::adjacent_find(r.chain_lengths.begin(), r.chain_lengths.end(),
                              std::not_equal_to<>()) == r.chain_lengths.end());
    }
  }

  const bool oracle = options.oracle_allowed(p);
  r.fast_path_only = !oracle;

  attempt("pseudo_gorenstein", [&] {
    auto ev = pseudo_gorenstein_evidence(p, options);
    r.is_pseudo_gorenstein = ev.criterion;
    if (ev.unique_min_degree)
      flag("pseudo_gorenstein.unique_min_degree", *ev.unique_min_degree == ev.criterion);
    if (ev.h_leading_one) flag("pseudo_gorenstein.h_leading_one", *ev.h_leading_one == ev.criterion);
    flag("pseudo_gorenstein.depth_equals_coheight",
         (depth_function(p) == coheight_function(p)) == ev.criterion);
  });

  r.is_gorenstein = r.is_pure;
  if (oracle) {
    attempt("generators", [&] {
      auto g = minimal_generators(p, {std::nullopt, options.budget});
      r.cm_type = g.cm_type();
      r.gamma = g.gamma();
      r.generator_degrees = g.degrees;
      flag("gorenstein.type_one", (g.cm_type() == 1) == r.is_pure);
    });
  }
  attempt("hilbert", [&] {
    auto lat = ideals(p);
    r.num_ideals = lat.size();
    auto h = h_vector(p);
    r.h_vector = h.coefficients;
    flag("hilbert.h0_is_one", h.coefficients.front() == 1);
    flag("hilbert.degree", static_cast<int>(h.degree()) == expected_h_degree(p));
    flag("hilbert.h1_equals_ideal_count", order_polynomial_value(p, 1) == lat.size());
    if (!oracle) return;
    SearchBudget budget(options.budget);
    flag("hilbert.leading_equals_min_degree_count", h.leading() == count_T(p, hat_rank(p), &budget));
    flag("birkhoff.round_trip", is_isomorphic(join_irreducibles(lat), p));
    flag("birkhoff.simple_lattice", is_simple_lattice(lat) == r.is_simple);
  });

  attempt("level", [&] {
    auto v = level_verdict(p, options);
    r.is_level = v.value;
    for (const auto& rule : v.fast_paths) r.level_rules.push_back(rule.rule);
    if (v.oracle) {
      for (const auto& rule : v.fast_paths) flag("level." + rule.rule, rule.level == *v.oracle);
      if (r.gamma) flag("level.gamma_is_rank", (*r.gamma == r.rank_hat) == *v.oracle);
    }
  });

  // Cross-module implications.
  if (r.is_level) {
    if (r.is_miyazaki) flag("implication.miyazaki_implies_level", *r.is_level);
    if (*r.is_level) flag("implication.level_implies_cover_inequalities", r.cover_inequalities_hold);
    if (r.is_pseudo_gorenstein)
      flag("implication.gorenstein_iff_level_and_pseudo_gorenstein",
           r.is_pure == (*r.is_level && *r.is_pseudo_gorenstein));
  }
  if (r.is_pseudo_gorenstein && r.is_regular && *r.is_regular) {
    bool same = equal_lengths(decs.front());
    flag("decomposition.regular_pseudo_gorenstein_iff_equal_lengths", same == *r.is_pseudo_gorenstein);
    if (same && r.is_level)
      flag("decomposition.regular_equal_lengths_gorenstein_level_miyazaki",
           r.is_pure == *r.is_level && r.is_pure == r.is_miyazaki);
  }
  if (r.is_pseudo_gorenstein && r.is_planar && r.is_simple) {
    bool rhs = *r.is_regular && equal_lengths(decs.front());
    flag("decomposition.simple_planar_pseudo_gorenstein", rhs == *r.is_pseudo_gorenstein);
  }
  return r;
}

}  // namespace hibi
