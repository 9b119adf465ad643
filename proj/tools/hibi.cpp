#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hibi/birkhoff.hpp"
#include "hibi/canonical.hpp"
#include "hibi/classify.hpp"
#include "hibi/document.hpp"
#include "hibi/dot.hpp"
#include "hibi/error.hpp"
#include "hibi/fixtures.hpp"
#include "hibi/generalized.hpp"
#include "hibi/report_json.hpp"
#include "hibi/search.hpp"

using namespace hibi;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kConsistency = 2, kBudget = 3 };

struct Common {
  std::string input = "-";
  std::string format = "text";
  std::uint64_t budget = SearchBudget::kDefaultLimit;
};

// "-" reads stdin, "@name" picks a catalog fixture, anything else is a path.
PosetDocument read_input(const std::string& input) {
  if (input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_document(text, "<stdin>");
  }
  if (!input.empty() && input[0] == '@') {
    const Fixture* f = find_fixture(input.substr(1));
    if (!f) throw Error(ErrorKind::ParseError, "no fixture named '" + input.substr(1) + "'");
    return f->document;
  }
  return load_document(input);
}

void add_common(CLI::App* cmd, Common& c, bool with_budget = true) {
  cmd->add_option("input", c.input, "poset document path, '-' for stdin, '@name' for a fixture");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_budget) cmd->add_option("--budget", c.budget, "enumeration budget");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Common& c, std::size_t threshold) {
  auto doc = read_input(c.input);
  auto p = doc.poset();
  ClassifyOptions opt{c.budget, threshold};
  auto r = classify(p, opt);
  auto mism = check_expected(r, doc.expected);
  if (c.format == "json") {
    auto j = to_json(r);
    j["name"] = doc.name;
    j["warnings"] = p.warnings();
    json m = json::array();
    for (const auto& e : mism) m.push_back({{"key", e.key}, {"expected", e.expected}, {"actual", e.actual}});
    j["expectation_mismatches"] = m;
    print(j);
  } else {
    if (!doc.name.empty()) std::cout << "name              " << doc.name << "\n";
    for (const auto& w : p.warnings()) std::cout << "warning           " << w << "\n";
    std::cout << to_text(r);
    for (const auto& e : mism)
      std::cout << "EXPECTATION       " << e.key << ": expected " << e.expected.dump()
                << ", got " << e.actual.dump() << "\n";
  }
  // Values left unset by an exhausted budget are not mismatches.
  bool real_mismatch = std::any_of(mism.begin(), mism.end(),
                                   [&](const auto& e) { return !(e.actual.is_null() && r.budget_exceeded()); });
  if (!r.consistent() || real_mismatch) return kConsistency;
  if (r.budget_exceeded()) return kBudget;
  return kOk;
}

int cmd_hilbert(const Common& c) {
  auto p = read_input(c.input).poset();
  auto h = h_vector(p);
  auto H = order_polynomial_values(p, static_cast<unsigned>(h.dimension));
  if (c.format == "json") {
    json hs = json::array();
    for (const auto& v : H) hs.push_back(decimal(v));
    print({{"dimension", h.dimension}, {"h_vector", to_json(h)}, {"order_polynomial", hs},
           {"num_ideals", decimal(H[1])}});
  } else {
    std::cout << "dimension " << h.dimension << "\n";
    std::cout << "h-vector ";
    for (std::size_t i = 0; i < h.coefficients.size(); ++i)
      std::cout << (i ? " " : "") << decimal(h.coefficients[i]);
    std::cout << "\n";
    for (std::size_t i = 0; i < H.size(); ++i) std::cout << "H(" << i << ") = " << decimal(H[i]) << "\n";
  }
  return kOk;
}

int cmd_canonical(const Common& c, std::optional<int> max_degree, std::optional<int> list_degree) {
  auto p = read_input(c.input).poset();
  if (list_degree) {
    SearchBudget budget(c.budget);
    auto t = enumerate_T(p, *list_degree, &budget);
    if (c.format == "json") {
      json a = json::array();
      for (const auto& v : t) a.push_back(to_json(v, p));
      print({{"degree", *list_degree}, {"functions", a}});
    } else {
      std::cout << "T_" << *list_degree << ": " << t.size() << " functions\n";
      for (const auto& v : t) {
        for (Element x = 0; x < p.size(); ++x) std::cout << (x ? " " : "") << p.label(x) << "=" << v.values[x];
        std::cout << (is_minimal_generator(p, v) ? "  [generator]" : "") << "\n";
      }
    }
    return kOk;
  }
  auto g = minimal_generators(p, {max_degree, c.budget});
  if (c.format == "json") {
    json a = json::array();
    for (const auto& v : g.generators) a.push_back(to_json(v, p));
    json d = json::object();
    for (auto [deg, n] : g.degrees) d[std::to_string(deg)] = n;
    print({{"cm_type", g.cm_type()}, {"gamma", g.gamma()}, {"rank_hat", hat_rank(p)},
           {"searched_degrees", {g.min_degree, g.max_searched_degree}},
           {"generator_degrees", d}, {"generators", a}, {"work", g.work}});
  } else {
    std::cout << "cm type " << g.cm_type() << ", gamma " << g.gamma() << ", rank P^ "
              << hat_rank(p) << ", degrees searched " << g.min_degree << ".."
              << g.max_searched_degree << "\n";
    for (const auto& v : g.generators) {
      std::cout << "deg " << v.degree << ":";
      for (Element x = 0; x < p.size(); ++x) std::cout << " " << p.label(x) << "=" << v.values[x];
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_product(const Common& c, int r) {
  auto doc = read_input(c.input);
  auto p = doc.poset();
  auto m = multichain_poset(p, r);
  auto formulas = verify_product_formulas(p, r);
  auto cmp = compare_types(p, r, c.budget);
  auto prod = document_of(m.product, doc.name + "_r" + std::to_string(r));
  if (c.format == "json") {
    print({{"r", r},
           {"product", to_json(prod)},
           {"product_formulas", formulas.ok},
           {"type_L", cmp.type_L},
           {"type_Lr", cmp.type_Lr},
           {"pseudo_gorenstein_L", cmp.pseudo_gorenstein_L},
           {"pseudo_gorenstein_Lr", cmp.pseudo_gorenstein_Lr},
           {"level_L", cmp.level_L},
           {"level_Lr", cmp.level_Lr},
           {"iota_preserves_generators", cmp.iota_preserves_generators}});
  } else {
    std::cout << "P_" << r << ": " << m.product.size() << " elements\n";
    std::cout << "product formulas " << (formulas.ok ? "hold" : "FAIL: " + formulas.first_violation) << "\n";
    std::cout << "type L " << cmp.type_L << ", type L_r " << cmp.type_Lr << "\n";
    std::cout << "pseudo-gorenstein " << cmp.pseudo_gorenstein_L << " / " << cmp.pseudo_gorenstein_Lr << "\n";
    std::cout << "level " << cmp.level_L << " / " << cmp.level_Lr << "\n";
  }
  return formulas.ok ? kOk : kConsistency;
}

int cmd_export_dot(const Common& c, int decomposition) {
  auto doc = read_input(c.input);
  auto p = doc.poset();
  std::optional<ChainDecomposition> dec;
  if (decomposition >= 0) {
    auto all = canonical_chain_decompositions(p);
    if (static_cast<std::size_t>(decomposition) >= all.size())
      throw Error(ErrorKind::ParameterOutOfRange,
                  "poset has " + std::to_string(all.size()) + " canonical decompositions");
    dec = all[decomposition];
  }
  std::cout << to_dot(p, doc.name.empty() ? "P" : doc.name, dec);
  return kOk;
}

int cmd_search(SearchOptions o, const std::string& input, const std::string& format,
               const std::string& probability) {
  o.edge_probability = parse_probability(probability);
  if (!input.empty()) o.inputs.push_back(read_input(input));
  auto res = run_search(o);
  if (format == "json") {
    auto list = [](const std::vector<SearchFinding>& v) {
      json a = json::array();
      for (const auto& f : v)
        a.push_back({{"candidate", f.candidate}, {"detail", f.detail}, {"poset", to_json(f.document)}});
      return a;
    };
    print({{"target", to_string(o.target)}, {"seed", o.seed}, {"examined", res.examined},
           {"skipped", res.skipped}, {"out_of_scope", res.out_of_scope},
           {"counterexamples", list(res.counterexamples)}, {"notes", list(res.notes)}});
  } else {
    std::cout << "target " << to_string(o.target) << ", seed " << o.seed << "\n";
    std::cout << "examined " << res.examined << ", out of scope " << res.out_of_scope
              << ", skipped (budget) " << res.skipped << "\n";
    for (const auto& f : res.notes)
      std::cout << "note #" << f.candidate << " " << f.document.name << ": " << f.detail << "\n";
    std::cout << "counterexamples " << res.counterexamples.size() << "\n";
    for (const auto& f : res.counterexamples)
      std::cout << "#" << f.candidate << " " << f.detail << "\n" << to_json(f.document).dump() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hibi rings of finite distributive lattices: classification and search"};
  app.require_subcommand(1);

  Common c;
  std::size_t threshold = 10;
  auto* classify_cmd = app.add_subcommand("classify", "classify the ideal lattice of a poset");
  add_common(classify_cmd, c);
  classify_cmd->add_option("--oracle-threshold", threshold, "largest |P| for oracle runs");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "order polynomial values and h-vector");
  add_common(hilbert_cmd, c, false);

  std::optional<int> max_degree, list_degree;
  auto* canonical_cmd = app.add_subcommand("canonical", "minimal generators of the canonical module");
  add_common(canonical_cmd, c);
  canonical_cmd->add_option("--max-degree", max_degree, "highest degree searched");
  canonical_cmd->add_option("--list-degree", list_degree, "list all strictly order-reversing functions of this degree");

  int r = 3;
  auto* product_cmd = app.add_subcommand("product", "the product poset P x chain(r-1)");
  add_common(product_cmd, c);
  product_cmd->add_option("--r", r, "r >= 2")->required();

  int decomposition = -1;
  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot_cmd->add_option("input", c.input, "poset document path, '-' for stdin, '@name' for a fixture");
  dot_cmd->add_option("--decomposition", decomposition, "color by this canonical decomposition (0-based)");

  auto* figures_cmd = app.add_subcommand("figures", "the fixture catalog");
  figures_cmd->require_subcommand(1);
  auto* list_cmd = figures_cmd->add_subcommand("list", "list fixture names");
  std::string figure;
  auto* show_cmd = figures_cmd->add_subcommand("show", "print a fixture document");
  show_cmd->add_option("name", figure)->required();

  SearchOptions so;
  std::string target = "planar-inequality-vs-level", probability = "0.3", search_input;
  bool no_fixtures = false;
  auto* search_cmd = app.add_subcommand("search", "look for counterexamples to open questions");
  search_cmd->add_option("--target", target, "planar-inequality-vs-level | level-implies-level-r | "
                                             "miyazaki-product | type-monotonicity");
  search_cmd->add_option("--max-size", so.max_size, "largest random poset");
  search_cmd->add_option("--count", so.count, "number of random posets");
  search_cmd->add_option("--seed", so.seed, "random seed");
  search_cmd->add_option("--edge-probability", probability, "e.g. 0.3 or 3/10");
  search_cmd->add_option("--r", so.r, "r for product targets");
  search_cmd->add_option("--budget", so.budget, "enumeration budget per candidate");
  search_cmd->add_flag("--no-fixtures", no_fixtures, "skip fixtures and parametric families");
  search_cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  search_cmd->add_option("input", search_input, "search only this poset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(c, threshold);
    if (*hilbert_cmd) return cmd_hilbert(c);
    if (*canonical_cmd) return cmd_canonical(c, max_degree, list_degree);
    if (*product_cmd) return cmd_product(c, r);
    if (*dot_cmd) return cmd_export_dot(c, decomposition);
    if (*list_cmd) {
      for (const auto& f : fixture_catalog()) std::cout << f.name << "  " << f.note << "\n";
      return kOk;
    }
    if (*show_cmd) {
      const Fixture* f = find_fixture(figure);
      if (!f) throw Error(ErrorKind::ParseError, "no fixture named '" + figure + "'");
      print(to_json(f->document));
      return kOk;
    }
    if (*search_cmd) {
      so.target = parse_search_target(target);
      so.include_fixtures = !no_fixtures;
      return cmd_search(so, search_input, c.format, probability);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ConsistencyFailure: return kConsistency;
      case ErrorKind::BudgetExceeded: return kBudget;
      default: return kInput;
    }
  }
  return kOk;
}
