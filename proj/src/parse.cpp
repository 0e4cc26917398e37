#include "sltensor/parse.hpp"

#include <cctype>

namespace sltensor {

namespace {

class Parser {
 public:
  Parser(const std::string& s, int n) : s_(s), n_(n) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(n_);
    bool neg = accept('-');
    MultiPoly first = term();
    acc += neg ? first * Rational(-1) : first;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    while (accept('^')) {
      skip();
      const std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected an exponent", at);
      int e = std::stoi(digits);
      MultiPoly r = MultiPoly::constant(n_, 1);
      for (int k = 0; k < e; ++k) r = r * base;
      base = r;
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", at);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == 't') {
      ++pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected a variable index after 't'", pos_);
      int idx = std::stoi(digits);
      if (idx < 1 || idx > n_)
        throw ParseError("variable t" + digits + " outside t1..t" + std::to_string(n_), at);
      return MultiPoly::variable(n_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      Rational q{Integer(num)};
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::size_t dat = pos_;
        std::string den = read_digits();
        if (den.empty() || Integer(den) == 0) throw ParseError("expected a positive denominator", dat);
        q /= Rational(Integer(den));
      }
      return MultiPoly::constant(n_, q);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly_expr(const std::string& src, int n, bool as_g) {
  if (n < 1) throw InvalidInput("n must be positive");
  MultiPoly p = Parser(src, n).run();
  if (as_g && p.constant_term() != 0) throw ParseError("g must have zero constant term", 0);
  return p;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) throw InvalidInput("empty entry in list '" + text + "'");
    out.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace sltensor
