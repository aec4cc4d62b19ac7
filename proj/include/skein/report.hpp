#pragma once

#include <string>
#include <string_view>

namespace skein {

enum class Claim { Theorem5, Lemma3a, Lemma3b, Lemma4 };

std::string_view claim_name(Claim c);

/// Outcome of one identity check. `lhs`/`rhs` are formatted values;
/// `detail` names the crossing or masks the check was run at.
struct VerificationReport {
  std::string subject;
  Claim claim = Claim::Theorem5;
  std::string detail;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

}  // namespace skein
