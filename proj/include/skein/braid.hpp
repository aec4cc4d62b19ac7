#pragma once

// Braid words and their closures. Letter +i is the generator sigma_i (strand
// i crosses over strand i+1, a positive crossing); -i is its inverse.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// "3: 1 -2 1 -2" -> 3 strands, sigma_1 sigma_2^-1 sigma_1 sigma_2^-1.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

/// Planar closure. Strands that meet no crossing become free loops.
Diagram braid_closure(const BraidWord& b);

struct RandomBraidOptions {
  int max_crossings = 8;
  int min_strands = 2;
  int max_strands = 4;
};

/// Uniform strand count, uniform length in [1, max_crossings], then uniform
/// letters among the generators and their inverses.
BraidWord random_braid(std::mt19937_64& rng, const RandomBraidOptions& options);

}  // namespace skein
