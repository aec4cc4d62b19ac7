#include "skein/transfer.hpp"

namespace skein {

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::Theorem5: return "theorem5";
    case Claim::Lemma3a: return "lemma3a";
    case Claim::Lemma3b: return "lemma3b";
    case Claim::Lemma4: return "lemma4";
  }
  return "unknown";
}

LaurentA g_value(const OrientedFramedValue& v) { return a_pow(v.fr) * LaurentA(v.com % 2 == 0 ? 1 : -1); }

std::vector<OrientationMask> orientations(const Diagram& d) {
  const std::size_t com = d.component_count();
  if (com > OrientationMask::kMaxComponents) throw DiagramError("too many components to enumerate orientations");
  std::vector<OrientationMask> out;
  out.reserve(std::size_t{1} << com);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << com); ++k) out.emplace_back(com, k);
  return out;
}

LaurentA g_tau(const Diagram& d) {
  const int com = static_cast<int>(d.component_count());
  LaurentA sum;
  for (const auto& o : orientations(d)) sum += g_value({com, writhe(d, o)});
  return sum;
}

VerificationReport check_lemma3a(const Diagram& d, std::size_t x, const std::string& subject) {
  const LaurentA lhs = g_tau(d) + g_tau(switch_crossing(d, x));
  const LaurentA rhs = -(a_pow(1) + a_pow(-1)) * (g_tau(smooth(d, x, Smoothing::A)) + g_tau(smooth(d, x, Smoothing::B)));
  return {subject, Claim::Lemma3a, "crossing=" + std::to_string(x), format_poly(lhs), format_poly(rhs), lhs == rhs};
}

VerificationReport check_lemma3b(const Diagram& d, const std::string& subject, KauffmanEngine& engine) {
  const LaurentA lhs = g_tau(d);
  const LaurentA rhs = LaurentA(-2) * substitute_z(lambda_poly(d, engine));
  return {subject, Claim::Lemma3b, {}, format_poly(lhs), format_poly(rhs), lhs == rhs};
}

}  // namespace skein
