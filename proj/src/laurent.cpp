#include "skein/laurent.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <vector>

namespace skein {

LaurentAZ lift(const LaurentA& p) {
  LaurentAZ r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0], 0}, c);
  return r;
}

LaurentAZ loop_value() {
  return az_pow(1, -1) + az_pow(-1, -1) - LaurentAZ(1);
}

LaurentA substitute_z(const LaurentAZ& p) {
  if (p.is_zero()) return {};
  int min_z = 0;
  int max_z = 0;
  for (const auto& [e, c] : p.terms()) {
    min_z = std::min(min_z, e[1]);
    max_z = std::max(max_z, e[1]);
  }
  const int clear = -min_z;
  const LaurentA s = -(a_pow(1) + a_pow(-1));

  // powers[k] = s^k for k in [0, max_z + clear]
  std::vector<LaurentA> powers{LaurentA(1)};
  for (int k = 1; k <= max_z + clear; ++k) powers.push_back(powers.back() * s);

  LaurentA cleared;
  for (const auto& [e, c] : p.terms()) {
    cleared += powers[static_cast<std::size_t>(e[1] + clear)].shifted({e[0]}) * LaurentA(c);
  }
  if (clear == 0) return cleared;
  try {
    return divide_exact(cleared, powers[static_cast<std::size_t>(clear)]);
  } catch (const ArithmeticError&) {
    throw ArithmeticError("specialization not Laurent");
  }
}

namespace {

void append_factor(std::string& out, char var, int exponent) {
  if (exponent == 0) return;
  if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
  out += var;
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

template <std::size_t N>
std::string format_generic(const Laurent<N>& p) {
  if (p.is_zero()) return "0";
  static constexpr char kVars[] = {'a', 'z'};
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const auto mag = c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    bool is_constant = true;
    for (int x : e) is_constant = is_constant && x == 0;
    if (mag != 1 || is_constant) out += std::to_string(mag);
    for (std::size_t i = 0; i < N; ++i) append_factor(out, kVars[i], e[i]);
  }
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentAZ parse() {
    LaurentAZ result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = parse_term();
      result.add_term(exponent, detail::checked_mul(coeff, sign));
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<LaurentAZ::Exponent, std::int64_t> parse_term() {
    LaurentAZ::Exponent exponent{0, 0};
    std::int64_t coeff = 1;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = mul_or_fail(coeff, parse_integer());
      } else if (ch == 'a' || ch == 'z') {
        advance();
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          advance();
          skip_ws();
          int sign = 1;
          if (!at_end() && (peek() == '-' || peek() == '+')) {
            sign = peek() == '-' ? -1 : 1;
            advance();
            skip_ws();
          }
          const std::size_t at = pos_;
          const std::int64_t magnitude = parse_integer();
          if (magnitude > std::numeric_limits<int>::max()) {
            pos_ = at;
            fail("exponent out of range");
          }
          power = sign * static_cast<int>(magnitude);
        }
        auto& slot = exponent[ch == 'a' ? 0 : 1];
        slot = detail::checked_exponent_add(slot, power);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      advance();
    }
    return {exponent, coeff};
  }

  std::int64_t parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (start == pos_) fail("expected an integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  std::int64_t mul_or_fail(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) fail("coefficient out of range");
    return r;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 0, pos_ + 1); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_poly(const LaurentAZ& p) { return format_generic(p); }
std::string format_poly(const LaurentA& p) { return format_generic(p); }

LaurentAZ parse_poly(std::string_view text) { return PolyParser(text).parse(); }

LaurentA parse_poly_a(std::string_view text) {
  const LaurentAZ p = parse_poly(text);
  LaurentA r;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] != 0) throw ParseError("unexpected variable z in a one-variable polynomial", 0, 1);
    r.add_term({e[0]}, c);
  }
  return r;
}

}  // namespace skein
