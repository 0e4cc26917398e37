#pragma once

#include "sltensor/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace sltensor {

/// Element of the algebra generated by C[h_1..h_n] and sigma_i^{+-1}, where
/// sigma_i f(h) = f(h - e_i). Each key k stands for p_k(h) sigma^k, with the
/// polynomial to the left.
class ShiftOp {
 public:
  using TermMap = std::map<MultiIndex, MultiPoly>;

  ShiftOp() = default;
  explicit ShiftOp(int n) : n_(n) {}

  static ShiftOp zero(int n) { return ShiftOp(n); }
  static ShiftOp constant(int n, const Rational& c);
  static ShiftOp poly(const MultiPoly& p);
  static ShiftOp h(int n, int i);  // multiplication by h_i
  /// sigma^k.
  static ShiftOp shift(const MultiIndex& k);
  /// p(h) sigma^k.
  static ShiftOp term(const MultiPoly& p, const MultiIndex& k);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const MultiIndex& k, const MultiPoly& p);
  std::optional<Rational> as_scalar() const;

  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  ShiftOp& operator*=(const Rational& c);
  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(ShiftOp a, const Rational& c) { return a *= c; }
  friend ShiftOp operator*(const Rational& c, ShiftOp a) { return a *= c; }
  friend ShiftOp operator*(const ShiftOp& u, const ShiftOp& v);
  ShiftOp operator-() const { return *this * Rational(-1); }
  friend bool operator==(const ShiftOp& a, const ShiftOp& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Action on C[h].
  MultiPoly apply(const MultiPoly& f) const;

  /// "(h1 - 1)*s1 + s2^-1" style text.
  std::string str() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

}  // namespace sltensor
