#include "skein/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace skein {

BraidWord parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("braid word must look like '<strands>: <letters>'", 0, 1);

  auto read_int = [&](std::size_t& pos, std::size_t end) {
    while (pos < end && text[pos] == ' ') ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{}) throw ParseError("expected an integer", 0, pos + 1);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  BraidWord b;
  std::size_t pos = 0;
  b.strands = read_int(pos, colon);
  if (b.strands < 1) throw ParseError("a braid needs at least one strand", 0, 1);
  pos = colon + 1;
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    const std::size_t at = pos;
    const int letter = read_int(pos, text.size());
    if (letter == 0 || std::abs(letter) >= b.strands) throw ParseError("generator out of range", 0, at + 1);
    b.letters.push_back(letter);
  }
  return b;
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands << ':';
  for (int letter : b.letters) out << ' ' << letter;
  return out.str();
}

Diagram braid_closure(const BraidWord& b) {
  // Strands run upward; positions are numbered left to right. Each crossing
  // consumes the current edges at positions i, i+1 and creates two new ones.
  const auto n = static_cast<std::size_t>(b.strands);
  std::vector<int> current(n);
  for (std::size_t p = 0; p < n; ++p) current[p] = static_cast<int>(p) + 1;
  int next_label = b.strands + 1;

  std::vector<Crossing> crossings;
  for (int letter : b.letters) {
    if (letter == 0 || std::abs(letter) >= b.strands) throw DiagramError("braid generator out of range");
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    const int in_left = current[i];
    const int in_right = current[i + 1];
    const int out_left = next_label++;
    const int out_right = next_label++;
    if (letter > 0) {
      // left strand passes over: under enters bottom-right
      crossings.push_back(Crossing{{in_right, out_right, out_left, in_left}, true});
    } else {
      // right strand passes over: under enters bottom-left
      crossings.push_back(Crossing{{in_left, in_right, out_right, out_left}, false});
    }
    current[i] = out_left;
    current[i + 1] = out_right;
  }

  // Close up: the top edge at each position continues as the bottom edge there.
  int loops = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const int top = current[p];
    const int bottom = static_cast<int>(p) + 1;
    if (top == bottom) {
      ++loops;
      continue;
    }
    for (auto& x : crossings) {
      for (auto& e : x.edges) {
        if (e == top) e = bottom;
      }
    }
  }
  return Diagram(std::move(crossings), loops);
}

BraidWord random_braid(std::mt19937_64& rng, const RandomBraidOptions& options) {
  std::uniform_int_distribution<int> strands(options.min_strands, options.max_strands);
  std::uniform_int_distribution<int> length(1, options.max_crossings);
  BraidWord b;
  b.strands = strands(rng);
  const int n = length(rng);
  std::uniform_int_distribution<int> generator(1, b.strands - 1);
  std::bernoulli_distribution inverse(0.5);
  for (int k = 0; k < n; ++k) {
    const int g = generator(rng);
    b.letters.push_back(inverse(rng) ? -g : g);
  }
  return b;
}

}  // namespace skein
