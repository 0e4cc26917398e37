#pragma once

#include "sltensor/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sltensor {

/// Parse failure carrying the byte offset of the offending token.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InvalidInput("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Polynomial in t1..tn:
///   expr := term (('+'|'-') term)*    term := atom ('*' atom)*
///   atom := rational | var | atom '^' nat | '(' expr ')'
/// A leading '-' is accepted. With as_g set, a nonzero constant term is rejected.
MultiPoly parse_poly_expr(const std::string& src, int n, bool as_g = false);

/// Comma-separated rationals, e.g. "1,-1/2".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace sltensor
