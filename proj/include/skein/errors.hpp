#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Malformed textual input (polynomials, PD files, masks, braid words).
/// `line` is 1-based and 0 when the input is single-line; `column` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(locate(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string locate(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return message;
    std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                                 : "position " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid diagram data. `crossing` is the 0-based index of the
/// offending crossing record, or npos when the problem is global.
class DiagramError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit DiagramError(const std::string& message, std::size_t crossing = npos)
      : std::runtime_error(message), crossing_(crossing) {}

  std::size_t crossing() const noexcept { return crossing_; }

 private:
  std::size_t crossing_;
};

/// Coefficient overflow, failed exact division, or a specialization that does
/// not land in Z[a, a^-1].
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing one of these means a bug or
/// an input outside the supported domain (e.g. a non-classical PD code).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skein
