#pragma once

// Sublink generating function of linking numbers, and the checks tying it to
// the Kauffman polynomial at z = -a - a^-1:
//
//   F_L(a, -a - a^-1) = (-1)^{com - 1} / 2 * sum over sublinks S of a^{-4 lk(S, L - S)}

#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/kauffman.hpp"
#include "skein/laurent.hpp"
#include "skein/report.hpp"

namespace skein {

/// Right-hand side above. The halving is exact (S and its complement give the
/// same exponent); an odd coefficient raises InvariantError.
LaurentA lmt_rhs(const Diagram& d, const OrientationMask& o);

/// writhe(d, o reversed on s) - writhe(d, o) == -4 lk(s, complement).
VerificationReport check_lemma4(const Diagram& d, const OrientationMask& o, const SublinkMask& s,
                                const std::string& subject = {});

/// specialized_f(d, o) == lmt_rhs(d, o).
VerificationReport verify_theorem5(const Diagram& d, const OrientationMask& o, const std::string& subject = {},
                                   KauffmanEngine& engine = default_engine());

/// verify_theorem5 and check_lemma3b once, check_lemma3a at every crossing,
/// check_lemma4 at every sublink mask, in that order.
std::vector<VerificationReport> verify_all(const Diagram& d, const OrientationMask& o, const std::string& subject = {},
                                           KauffmanEngine& engine = default_engine());

}  // namespace skein
