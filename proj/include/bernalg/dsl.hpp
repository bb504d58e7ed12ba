#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernalg/bernstein.hpp"

namespace bernalg {

// Line-oriented algebra description format:
//
//   # comment
//   algebra bdown2
//   basis e v1 u1 u2
//   weight e 1
//   prod e e = 1 e
//   prod e u1 = 1/2 u1
//   prod u2 v1 = 1 u1
//
// Omitted weights are zero and a file with no weight line is non-baric.
// Omitted products are zero and prod a b also defines b a. A linear
// combination is `[coef] id [+ [coef] id]...` or the single token 0.

using AlgebraFile = Presentation<Rational>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

AlgebraFile parse_algebra(std::string_view text);
std::string serialize_algebra(const AlgebraFile& file);

/// Parses a linear combination such as `1/2 u1 + -1 v1` or `u3`.
Vec<Rational> parse_element(std::string_view expr, const std::vector<std::string>& basis_names);

/// Parses `;`-separated linear combinations.
std::vector<Vec<Rational>> parse_elements(std::string_view text, const std::vector<std::string>& basis_names,
                                          char separator = ';');

/// Canonical rendering `c id + c id ...` in basis order, or `0`.
std::string format_element(const Vec<Rational>& x, const std::vector<std::string>& basis_names);

}  // namespace bernalg
