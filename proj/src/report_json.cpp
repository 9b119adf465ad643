#include "hibi/report_json.hpp"

#include <sstream>

namespace hibi {

std::string decimal(const BigInt& n) { return n.str(); }

std::string to_string(MiyazakiDirection d) {
  switch (d) {
    case MiyazakiDirection::None: return "none";
    case MiyazakiDirection::Ascending: return "ascending";
    case MiyazakiDirection::Descending: return "descending";
    case MiyazakiDirection::Both: return "both";
  }
  return "none";
}

namespace {

nlohmann::json big(const BigInt& n) {
  if (n >= 0 && n <= BigInt(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<std::uint64_t>(n);
  return decimal(n);
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

nlohmann::json to_json(const HVector& h) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : h.coefficients) a.push_back(big(c));
  return a;
}

nlohmann::json to_json(const GradedFunction& v, const Poset& p) {
  nlohmann::json values = nlohmann::json::object();
  for (Element x = 0; x < p.size(); ++x) values[p.label(x)] = v.values[x];
  return {{"degree", v.degree}, {"values", values}};
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["size"] = r.size;
  j["rank"] = r.rank;
  j["rank_hat"] = r.rank_hat;
  j["is_pure"] = r.is_pure;
  j["is_simple"] = r.is_simple;
  j["is_miyazaki"] = r.is_miyazaki;
  j["miyazaki_direction"] = to_string(r.miyazaki_direction);
  j["is_hyper_planar"] = r.is_hyper_planar;
  j["is_planar"] = r.is_planar;
  j["is_regular"] = opt(r.is_regular);
  j["is_butterfly"] = r.is_butterfly;
  j["cover_inequalities_hold"] = r.cover_inequalities_hold;
  j["num_canonical_decompositions"] = r.num_canonical_decompositions;
  j["chain_lengths"] = r.chain_lengths;
  j["is_pseudo_gorenstein"] = opt(r.is_pseudo_gorenstein);
  j["is_gorenstein"] = opt(r.is_gorenstein);
  j["is_level"] = opt(r.is_level);
  j["level_rules"] = r.level_rules;
  j["fast_path_only"] = r.fast_path_only;
  j["cm_type"] = opt(r.cm_type);
  j["gamma"] = opt(r.gamma);
  if (r.generator_degrees) {
    nlohmann::json d = nlohmann::json::object();
    for (auto [deg, n] : *r.generator_degrees) d[std::to_string(deg)] = n;
    j["generator_degrees"] = d;
  } else {
    j["generator_degrees"] = nullptr;
  }
  if (r.h_vector) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : *r.h_vector) a.push_back(big(c));
    j["h_vector"] = a;
  } else {
    j["h_vector"] = nullptr;
  }
  j["num_ideals"] = opt(r.num_ideals);
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& f : r.consistency) {
    nlohmann::json e{{"name", f.name}, {"ok", f.ok}};
    if (!f.detail.empty()) e["detail"] = f.detail;
    flags.push_back(e);
  }
  j["consistency"] = flags;
  j["consistent"] = r.consistent();
  j["errors"] = r.errors;
  return j;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  auto tri = [](const std::optional<bool>& b) { return !b ? std::string("unknown") : *b ? "yes" : "no"; };
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "size              " << r.size << "\n";
  out << "rank P / rank P^  " << r.rank << " / " << r.rank_hat << "\n";
  out << "gorenstein        " << tri(r.is_gorenstein) << "\n";
  out << "pseudo-gorenstein " << tri(r.is_pseudo_gorenstein) << "\n";
  out << "level             " << tri(r.is_level);
  if (r.fast_path_only) out << " (fast-path only)";
  out << "\n";
  out << "pure              " << yn(r.is_pure) << "\n";
  out << "simple            " << yn(r.is_simple) << "\n";
  out << "miyazaki          " << yn(r.is_miyazaki) << " (" << to_string(r.miyazaki_direction) << ")\n";
  out << "hyper-planar      " << yn(r.is_hyper_planar) << "\n";
  out << "planar            " << yn(r.is_planar) << "\n";
  out << "regular           " << (r.is_regular ? yn(*r.is_regular) : "n/a") << "\n";
  out << "butterfly         " << yn(r.is_butterfly) << "\n";
  out << "cover inequality  " << yn(r.cover_inequalities_hold) << "\n";
  out << "decompositions    " << r.num_canonical_decompositions << "\n";
  if (r.cm_type) out << "cm type           " << *r.cm_type << "\n";
  if (r.gamma) out << "gamma             " << *r.gamma << "\n";
  if (r.h_vector) {
    out << "h-vector          (";
    for (std::size_t i = 0; i < r.h_vector->size(); ++i)
      out << (i ? ", " : "") << decimal((*r.h_vector)[i]);
    out << ")\n";
  }
  if (r.num_ideals) out << "ideals            " << *r.num_ideals << "\n";
  std::size_t bad = 0;
  for (const auto& f : r.consistency)
    if (!f.ok) {
      ++bad;
      out << "INCONSISTENT      " << f.name << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
    }
  out << "cross-checks      " << r.consistency.size() - bad << "/" << r.consistency.size()
      << " agree\n";
  for (const auto& e : r.errors) out << "error             " << e << "\n";
  return out.str();
}

std::vector<ExpectationMismatch> check_expected(const ClassificationReport& r,
                                                const nlohmann::json& expected) {
  std::vector<ExpectationMismatch> out;
  const auto actual = to_json(r);
  for (const auto& [key, value] : expected.items()) {
    auto it = actual.find(key);
    nlohmann::json got = it == actual.end() ? nlohmann::json() : *it;
    if (got != value) out.push_back({key, value, got});
  }
  return out;
}

}  // namespace hibi
