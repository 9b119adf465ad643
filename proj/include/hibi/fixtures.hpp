#pragma once

#include <string>
#include <vector>

#include "hibi/document.hpp"

namespace hibi {

struct Fixture {
  std::string name;
  std::string note;
  PosetDocument document;
};

// Named example posets, each with known facts in its `expected` block.
// Order is stable.
const std::vector<Fixture>& fixture_catalog();
const Fixture* find_fixture(const std::string& name);

}  // namespace hibi
