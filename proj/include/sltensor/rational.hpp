#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sltensor {

// Expression templates off: keeps `auto` safe and plays nicely with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exponent tuple t^m = t_1^{m_1} ... t_n^{m_n}; negative entries allowed.
using MultiIndex = std::vector<int>;

/// Thrown on malformed input: dimension mismatches, bad parameters, parse errors.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer floor_of(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer r = num / den;
  if (num < 0 && r * den != num) r -= 1;
  return r;
}

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw InvalidInput("expected an integer, got " + q.str());
  return boost::multiprecision::numerator(q).convert_to<long>();
}

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p", "p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// x (x-1) ... (x-k+1); empty product is 1.
inline Rational falling(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (x - i);
  return r;
}

inline Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Exact integer power; negative exponents require a nonzero base.
inline Rational ipow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw InvalidInput("zero raised to a negative power");
    return ipow(1 / base, -e);
  }
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

inline MultiIndex unit_index(int n, int i) {
  MultiIndex m(n, 0);
  m[i] = 1;
  return m;
}

inline MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline int total_degree(const MultiIndex& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

}  // namespace sltensor
