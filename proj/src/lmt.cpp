#include "skein/lmt.hpp"

#include "skein/transfer.hpp"

namespace skein {

LaurentA lmt_rhs(const Diagram& d, const OrientationMask& o) {
  const std::size_t com = d.component_count();
  if (com == 0) throw DiagramError("empty diagram");
  LaurentA sum;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << com); ++bits) {
    sum += a_pow(-4 * linking_number(d, o, SublinkMask(com, bits)));
  }
  LaurentA half;
  for (const auto& [e, c] : sum.terms()) {
    if (c % 2 != 0) throw InvariantError("odd sublink sum");
    half.add_term(e, c / 2);
  }
  return com % 2 == 1 ? half : -half;
}

VerificationReport check_lemma4(const Diagram& d, const OrientationMask& o, const SublinkMask& s,
                                const std::string& subject) {
  const int lhs = writhe(d, reverse_sublink(o, s)) - writhe(d, o);
  const int rhs = -4 * linking_number(d, o, s);
  return {subject, Claim::Lemma4, "orientation=" + o.to_string() + " sublink=" + s.to_string(),
          std::to_string(lhs), std::to_string(rhs), lhs == rhs};
}

VerificationReport verify_theorem5(const Diagram& d, const OrientationMask& o, const std::string& subject,
                                   KauffmanEngine& engine) {
  const LaurentA lhs = specialized_f(d, o, engine);
  const LaurentA rhs = lmt_rhs(d, o);
  return {subject, Claim::Theorem5, "orientation=" + o.to_string(), format_poly(lhs), format_poly(rhs), lhs == rhs};
}

std::vector<VerificationReport> verify_all(const Diagram& d, const OrientationMask& o, const std::string& subject,
                                           KauffmanEngine& engine) {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_theorem5(d, o, subject, engine));
  reports.push_back(check_lemma3b(d, subject, engine));
  for (std::size_t x = 0; x < d.crossing_count(); ++x) reports.push_back(check_lemma3a(d, x, subject));
  const std::size_t com = d.component_count();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << com); ++bits) {
    reports.push_back(check_lemma4(d, o, SublinkMask(com, bits), subject));
  }
  return reports;
}

}  // namespace skein
