#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "hibi/poset.hpp"

namespace hibi {

// {"name": ..., "elements": [...], "covers": [[lower, upper], ...],
//  "expected": {...}}; `expected` is optional.
struct PosetDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
  nlohmann::json expected = nlohmann::json::object();

  // Throws the build errors of Poset::build with the document name attached.
  Poset poset() const;
};

// ParseError for malformed JSON (with line and column), wrong field types
// or unknown labels in covers (with the offending field path).
PosetDocument parse_document(const std::string& text, const std::string& source = "<input>");
PosetDocument load_document(const std::string& path);
Poset parse_poset(const std::string& text, const std::string& source = "<input>");

nlohmann::json to_json(const PosetDocument& doc);
PosetDocument document_of(const Poset& p, std::string name);

}  // namespace hibi
