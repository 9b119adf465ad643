#include "hibi/random_poset.hpp"

#include <numeric>

#include "hibi/error.hpp"

namespace hibi {

Probability parse_probability(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad probability '" + text + "'"); };
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
      throw bad();
    return std::stoull(s);
  };
  Probability p;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    p = {digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::string whole = dot == 0 ? "0" : text.substr(0, dot);
    p = {digits(whole) * den + (frac.empty() ? 0 : digits(frac)), den};
  } else {
    p = {digits(text), 1};
  }
  if (p.den == 0 || p.num > p.den) throw bad();
  std::uint64_t g = std::gcd(p.num, p.den);
  if (g > 1) p = {p.num / g, p.den / g};
  return p;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits, to avoid modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return x % bound;
}

Poset random_poset(std::size_t n, Probability p, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::EmptyPoset, "random poset of size 0");
  if (n > kMaxElements) throw Error(ErrorKind::TooLarge, "random poset too large");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (uniform_below(rng, p.den) < p.num) rel.emplace_back(perm[k], perm[l]);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return Poset::from_relations(std::move(labels), rel);
}

}  // namespace hibi
