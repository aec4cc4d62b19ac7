#pragma once

// The transfer map (sum over all orientations of an unoriented link) composed
// with g(L) = (-1)^com a^fr. For a vertically framed diagram fr equals the
// writhe, so
//
//   g_tau(D) = sum over orientation masks o of (-1)^com a^{writhe(D, o)}.

#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/kauffman.hpp"
#include "skein/laurent.hpp"
#include "skein/report.hpp"

namespace skein {

struct OrientedFramedValue {
  int com = 1;
  int fr = 0;
};

/// (-1)^com a^fr
LaurentA g_value(const OrientedFramedValue& v);

/// All 2^com masks in binary-counter order (mask k has bit i = bit i of k).
std::vector<OrientationMask> orientations(const Diagram& d);

LaurentA g_tau(const Diagram& d);

/// g_tau(L+) + g_tau(L-) == (-a - a^-1)(g_tau(L0) + g_tau(Linf)) at crossing x.
VerificationReport check_lemma3a(const Diagram& d, std::size_t x, const std::string& subject = {});

/// g_tau(d) == -2 * Lambda(d)(a, -a - a^-1).
VerificationReport check_lemma3b(const Diagram& d, const std::string& subject = {},
                                 KauffmanEngine& engine = default_engine());

}  // namespace skein
