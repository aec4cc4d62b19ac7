#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/braid.hpp"
#include "skein/corpus.hpp"
#include "skein/diagram.hpp"
#include "skein/kauffman.hpp"
#include "skein/laurent.hpp"

namespace skein::testing {

Diagram corpus_diagram(std::string_view name);
std::vector<std::pair<std::string, Diagram>> corpus_diagrams();

/// Random braid closures drawn from a fixed seed.
std::vector<std::pair<BraidWord, Diagram>> random_closures(std::uint64_t seed, int count, int max_crossings);

/// Component count from the raw records alone: the strand pairs (1,3) and
/// (2,4) of every crossing glue edges together.
std::size_t oracle_component_count(const std::vector<Crossing>& crossings, int free_loops);

/// Writhe from the raw records: tag sign, negated when exactly one of the
/// two strands at a crossing is reversed.
int oracle_writhe(const Diagram& d, const OrientationMask& o);

/// Lambda evaluated towards ascending diagrams (every crossing first met as
/// an under-pass), sharing no recursion code with KauffmanEngine.
LaurentAZ ascending_lambda(const Diagram& d);

/// Inserts a one-crossing curl of the given sign into edge e.
Diagram add_kink(const Diagram& d, int edge, bool positive);

/// w with (g, -g) inserted before letter `at`.
BraidWord insert_cancelling_pair(BraidWord w, std::size_t at, int g);
/// w with the triple at position `at` replaced by the other side of a braid
/// relation, or std::nullopt when no relation applies there.
std::optional<BraidWord> apply_braid_relation(const BraidWord& w, std::size_t at);
/// Markov stabilization: adds a strand and the letter +-strands.
BraidWord stabilize(BraidWord w, bool positive);

LaurentAZ swap_a_inverse(const LaurentAZ& p);
LaurentA swap_a_inverse(const LaurentA& p);

}  // namespace skein::testing
