#pragma once

#include "sltensor/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sltensor {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are keyed by exponent tuple in lexicographic order, so iteration
/// and the text form are canonical. With `laurent` set, negative exponents
/// are admitted (C[t^{+-1}]); otherwise every stored exponent is >= 0.
/// The zero polynomial is the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars, bool laurent = false) : n_(nvars), laurent_(laurent) {}

  static MultiPoly constant(int nvars, const Rational& c, bool laurent = false);
  static MultiPoly monomial(const MultiIndex& m, const Rational& c = 1, bool laurent = false);
  /// The coordinate function t_i (0-based i).
  static MultiPoly variable(int nvars, int i, bool laurent = false);

  int nvars() const { return n_; }
  bool laurent() const { return laurent_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const MultiIndex& m) const;
  Rational constant_term() const { return coeff(MultiIndex(n_, 0)); }
  /// Adds c * t^m, dropping the term if it cancels.
  void add_term(const MultiIndex& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Partial derivative in variable i (0-based).
  MultiPoly diff(int i) const;
  /// Exact evaluation; a zero coordinate under a negative exponent is rejected.
  Rational eval(const std::vector<Rational>& point) const;
  /// p(h - shift), expanded.
  MultiPoly shifted(const MultiIndex& shift) const;
  /// Largest total degree of a stored term (-1 for zero).
  int degree() const;

  /// Canonical text form, e.g. "1/2*t1^2*t2 - t3", with variable prefix `var`.
  std::string str(const std::string& var = "t") const;

 private:
  void check_compatible(const MultiPoly& o) const;

  int n_ = 0;
  bool laurent_ = false;
  TermMap terms_;
};

/// Formats one monomial "t1^2*t3" (empty string for the constant monomial).
std::string monomial_string(const MultiIndex& m, const std::string& var);

/// Formats c*mono as a signed summand for joining into sums.
std::string format_term(const Rational& c, const std::string& mono, bool first);

}  // namespace sltensor
