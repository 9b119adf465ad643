#pragma once

#include <json.hpp>
#include <string>

#include "hibi/classify.hpp"

namespace hibi {

nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const GradedFunction& v, const Poset& p);
nlohmann::json to_json(const HVector& h);
std::string to_text(const ClassificationReport& r);
std::string decimal(const BigInt& n);
std::string to_string(MiyazakiDirection d);

// Keys of `expected` whose values differ from the report, with both values.
struct ExpectationMismatch {
  std::string key;
  nlohmann::json expected;
  nlohmann::json actual;
};
std::vector<ExpectationMismatch> check_expected(const ClassificationReport& r,
                                                const nlohmann::json& expected);

}  // namespace hibi
