#include "hibi/dot.hpp"

#include <sstream>

namespace hibi {

namespace {

const char* const kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& name,
                   const std::optional<ChainDecomposition>& dec) {
  std::vector<std::size_t> owner;
  if (dec) {
    diagonals(p, *dec);  // validates the decomposition
    owner = dec->chain_of(p.size());
  }
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  out << "  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=" << quoted(p.label(x));
    if (dec) out << ", color=" << kPalette[owner[x] % std::size(kPalette)];
    out << "];\n";
  }
  for (const auto& c : p.cover_pairs()) {
    out << "  n" << c.lower << " -> n" << c.upper;
    if (dec) {
      if (owner[c.lower] != owner[c.upper]) out << " [style=dashed]";
      else out << " [color=" << kPalette[owner[c.lower] % std::size(kPalette)] << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hibi
