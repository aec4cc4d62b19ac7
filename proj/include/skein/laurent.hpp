#pragma once

// Sparse integer Laurent polynomials in one variable (a) and two variables
// (a, z). Coefficients are 64-bit and every operation checks for overflow.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "skein/errors.hpp"

namespace skein {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticError("coefficient overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticError("coefficient overflow in multiplication");
  return r;
}

inline int checked_exponent_add(int x, int y) {
  int r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticError("exponent overflow");
  return r;
}

}  // namespace detail

/// Element of Z[x_1^{±1}, ..., x_N^{±1}] stored as exponent-vector -> coefficient.
/// Zero coefficients are never stored, so equal polynomials have equal maps.
template <std::size_t N>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Coeff = std::int64_t;
  using TermMap = std::map<Exponent, Coeff>;

  Laurent() = default;
  Laurent(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponent{}, constant);
  }

  static Laurent monomial(const Exponent& e, Coeff c = 1) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Per-variable minimum and maximum exponent. Requires a nonzero polynomial.
  std::pair<Exponent, Exponent> exponent_box() const {
    Exponent lo = terms_.begin()->first;
    Exponent hi = lo;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return {lo, hi};
  }

  void add_term(const Exponent& e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }

  Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, detail::checked_mul(c, -1));
    return r;
  }

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }

  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
    Laurent r;
    for (const auto& [e1, c1] : lhs.terms_) {
      for (const auto& [e2, c2] : rhs.terms_) r.add_term(add_exponents(e1, e2), detail::checked_mul(c1, c2));
    }
    return r;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Multiplication by the monomial x^shift.
  Laurent shifted(const Exponent& shift) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exponents(e, shift), c);
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent result(1);
    Laurent base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  static Exponent add_exponents(const Exponent& x, const Exponent& y) {
    Exponent r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = detail::checked_exponent_add(x[i], y[i]);
    return r;
  }

 private:
  TermMap terms_;
};

using LaurentA = Laurent<1>;
using LaurentAZ = Laurent<2>;

/// Exact quotient r with r * divisor == dividend, or ArithmeticError when
/// no such r exists in the integer Laurent ring.
///
/// Leading terms are taken in lexicographic order. Every term of a true
/// quotient lies in the box [min(p) - min(q), max(p) - max(q)] (Newton polytopes
/// add under multiplication), which bounds the loop.
template <std::size_t N>
Laurent<N> divide_exact(const Laurent<N>& dividend, const Laurent<N>& divisor) {
  using Exponent = typename Laurent<N>::Exponent;
  if (divisor.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (dividend.is_zero()) return {};

  const auto [p_lo, p_hi] = dividend.exponent_box();
  const auto [q_lo, q_hi] = divisor.exponent_box();
  Exponent lo{};
  Exponent hi{};
  for (std::size_t i = 0; i < N; ++i) {
    lo[i] = p_lo[i] - q_lo[i];
    hi[i] = p_hi[i] - q_hi[i];
  }

  const auto& [q_lead_exp, q_lead_coeff] = *divisor.terms().rbegin();
  Laurent<N> remainder = dividend;
  Laurent<N> quotient;
  while (!remainder.is_zero()) {
    const auto& [r_lead_exp, r_lead_coeff] = *remainder.terms().rbegin();
    Exponent t{};
    for (std::size_t i = 0; i < N; ++i) {
      t[i] = r_lead_exp[i] - q_lead_exp[i];
      if (t[i] < lo[i] || t[i] > hi[i]) throw ArithmeticError("not divisible");
    }
    if (q_lead_coeff != -1 && r_lead_coeff % q_lead_coeff != 0) throw ArithmeticError("not divisible");
    const auto c = q_lead_coeff == -1 ? detail::checked_mul(r_lead_coeff, -1) : r_lead_coeff / q_lead_coeff;
    auto step = Laurent<N>::monomial(t, c);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

/// a^k
inline LaurentA a_pow(int k) { return LaurentA::monomial({k}); }
/// a^i z^j in the two-variable ring.
inline LaurentAZ az_pow(int i, int j) { return LaurentAZ::monomial({i, j}); }

/// Embeds a one-variable polynomial into Z[a^{±1}, z^{±1}].
LaurentAZ lift(const LaurentA& p);

/// The loop value (a + a^-1) z^-1 - 1.
LaurentAZ loop_value();

/// Evaluates at z = -a - a^-1. Negative z powers are cleared by multiplying
/// through by z^N, substituting, then dividing exactly by (-a - a^-1)^N.
/// Throws ArithmeticError("specialization not Laurent") when that division fails.
LaurentA substitute_z(const LaurentAZ& p);

/// Terms ascending by (a-exponent, z-exponent), e.g. "-2*a^-1 + z^2"; "0" for zero.
std::string format_poly(const LaurentAZ& p);
std::string format_poly(const LaurentA& p);

/// Inverse of format_poly; whitespace-insensitive. Throws ParseError.
LaurentAZ parse_poly(std::string_view text);
/// As parse_poly, rejecting any z factor with nonzero exponent.
LaurentA parse_poly_a(std::string_view text);

}  // namespace skein
