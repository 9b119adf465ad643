#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hibi/poset.hpp"

namespace hibi {

// Exact probability num/den, 0 <= num <= den.
struct Probability {
  std::uint64_t num = 3;
  std::uint64_t den = 10;
};

// Parses "0.3", "3/10" or "1" without floating point. Throws ParseError.
Probability parse_probability(const std::string& text);

// Uniform integer in [0, bound) by rejection; stable across standard
// libraries since only mt19937_64 output is consumed.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Shuffles 0..n-1, then relates the k-th and l-th entries (k < l) with
// probability p; the order is the transitive closure. Labels v1..vn.
Poset random_poset(std::size_t n, Probability p, std::mt19937_64& rng);

}  // namespace hibi
