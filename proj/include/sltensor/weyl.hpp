#pragma once

#include "sltensor/poly.hpp"
#include "sltensor/subset.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace sltensor {

/// Element of the Weyl algebra D(n) in normal order: each key (a, b)
/// stands for t^a d^b with every t to the left of every d.
class WeylOp {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using TermMap = std::map<Key, Rational>;

  WeylOp() = default;
  explicit WeylOp(int n) : n_(n) {}

  static WeylOp zero(int n) { return WeylOp(n); }
  static WeylOp constant(int n, const Rational& c);
  static WeylOp term(const MultiIndex& a, const MultiIndex& b, const Rational& c = 1);
  static WeylOp t(int n, int i);  // 0-based
  static WeylOp d(int n, int i);  // 0-based
  /// Multiplication by a polynomial.
  static WeylOp multiplication(const MultiPoly& p);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c);
  Rational coeff(const MultiIndex& a, const MultiIndex& b) const;
  /// Some c with *this == c, if the operator is a scalar.
  std::optional<Rational> as_scalar() const;

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rational& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }
  friend WeylOp operator*(const WeylOp& u, const WeylOp& v);
  WeylOp operator-() const { return *this * Rational(-1); }
  friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// "c * t^a * d^b" summands, e.g. "t1*d1 + 1".
  std::string str() const;

 private:
  void check_same(const WeylOp& o) const;

  int n_ = 0;
  TermMap terms_;
};

WeylOp commutator(const WeylOp& u, const WeylOp& v);

/// psi_S: t_i -> d_i, d_i -> -t_i for i in S; identity elsewhere.
WeylOp fourier(const WeylOp& u, const Subset& s);
/// theta_g: t_i -> t_i, d_i -> d_i + dg/dt_i. g must have zero constant term.
WeylOp exp_twist(const WeylOp& u, const MultiPoly& g);

using LaurentVec = std::map<MultiIndex, Rational>;

/// u applied to the Laurent monomial t^m. With a corner S, outputs whose
/// exponent is >= 0 at some i in S are discarded (the quotient D+_(S)).
LaurentVec apply_to_monomial(const WeylOp& u, const MultiIndex& m, const std::optional<Subset>& corner = std::nullopt);
/// Linear extension of apply_to_monomial.
LaurentVec apply_to_vector(const WeylOp& u, const LaurentVec& v, const std::optional<Subset>& corner = std::nullopt);

/// True when m_i < 0 exactly for i in S.
bool in_corner(const MultiIndex& m, const Subset& s);

}  // namespace sltensor
