#include "hibi/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hibi/error.hpp"

namespace hibi {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Poset PosetDocument::poset() const {
  try {
    return Poset::build(elements, covers);
  } catch (const Error& e) {
    std::string msg = e.what();
    // Keep the kind, drop its "Kind: " prefix from the message.
    std::string detail = msg.substr(msg.find(": ") + 2);
    throw Error(e.kind(), (name.empty() ? std::string("document") : name) + ": " + detail);
  }
}

PosetDocument parse_document(const std::string& text, const std::string& source) {
  using nlohmann::json;
  auto fail = [&](const std::string& where, const std::string& what) {
    return Error(ErrorKind::ParseError, source + ": " + where + ": " + what);
  };
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw fail(line_column(text, e.byte), "malformed JSON");
  }
  if (!j.is_object()) throw fail("document", "expected a JSON object");

  PosetDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw fail("name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("elements") || !j["elements"].is_array())
    throw fail("elements", "expected an array of labels");
  std::set<std::string> known;
  for (std::size_t i = 0; i < j["elements"].size(); ++i) {
    const auto& e = j["elements"][i];
    if (!e.is_string()) throw fail("elements[" + std::to_string(i) + "]", "expected a string");
    doc.elements.push_back(e.get<std::string>());
    known.insert(doc.elements.back());
  }
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw fail("covers", "expected an array of [lower, upper] pairs");
    for (std::size_t i = 0; i < j["covers"].size(); ++i) {
      const auto& c = j["covers"][i];
      const std::string where = "covers[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw fail(where, "expected [lower, upper] labels");
      for (int k = 0; k < 2; ++k)
        if (!known.count(c[k].get<std::string>()))
          throw fail(where + "[" + std::to_string(k) + "]",
                     "unknown label '" + c[k].get<std::string>() + "'");
      doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  if (j.contains("expected")) {
    if (!j["expected"].is_object()) throw fail("expected", "expected an object");
    doc.expected = j["expected"];
  }
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "elements" && key != "covers" && key != "expected")
      throw fail(key, "unknown field");
  return doc;
}

PosetDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Poset parse_poset(const std::string& text, const std::string& source) {
  return parse_document(text, source).poset();
}

nlohmann::json to_json(const PosetDocument& doc) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, up] : doc.covers) covers.push_back({lo, up});
  nlohmann::json j{{"name", doc.name}, {"elements", doc.elements}, {"covers", covers}};
  if (!doc.expected.empty()) j["expected"] = doc.expected;
  return j;
}

PosetDocument document_of(const Poset& p, std::string name) {
  PosetDocument doc;
  doc.name = std::move(name);
  doc.elements = p.labels();
  for (const auto& c : p.cover_pairs()) doc.covers.emplace_back(p.label(c.lower), p.label(c.upper));
  return doc;
}

}  // namespace hibi
