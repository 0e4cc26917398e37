#pragma once

#include "sltensor/linalg.hpp"
#include "sltensor/rational.hpp"

#include <string>
#include <vector>

namespace sltensor {

/// Square matrix over an operator algebra: an element of A (x) End(V).
/// `Op` must provide zero(n), constant(n, c), n(), +, -, *, ==, is_zero, str.
template <typename Op>
class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(int n, int dim) : n_(n), dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, Op::zero(n)) {}

  static OpMatrix identity(int n, int dim) { return scalar(Op::constant(n, 1), dim); }
  /// u (x) 1.
  static OpMatrix scalar(const Op& u, int dim) {
    OpMatrix r(u.n(), dim);
    for (int i = 0; i < dim; ++i) r(i, i) = u;
    return r;
  }
  /// u (x) m.
  static OpMatrix tensor(const Op& u, const MatrixX<Rational>& m) {
    OpMatrix r(u.n(), static_cast<int>(m.rows()));
    for (int i = 0; i < r.dim_; ++i)
      for (int j = 0; j < r.dim_; ++j)
        if (m(i, j) != 0) r(i, j) = u * m(i, j);
    return r;
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  Op& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Op& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  OpMatrix& operator+=(const OpMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  OpMatrix& operator-=(const OpMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  OpMatrix& operator*=(const Rational& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }
  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(OpMatrix a, const Rational& c) { return a *= c; }
  friend OpMatrix operator*(const Rational& c, OpMatrix a) { return a *= c; }
  OpMatrix operator-() const { return *this * Rational(-1); }

  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    a.check(b);
    OpMatrix r(a.n_, a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const Op& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) {
          const Op& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }

  friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
    return a.n_ == b.n_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  /// Applies f to every entry.
  template <typename F>
  OpMatrix map(F&& f) const {
    OpMatrix r(n_, dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = f(entries_[k]);
    return r;
  }

  /// "[r,c]: op" lines for nonzero entries, or "0".
  std::string str() const {
    std::string out;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        const Op& e = (*this)(i, j);
        if (e.is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += dim_ == 1 ? e.str() : "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]: " + e.str();
      }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const OpMatrix& o) const {
    if (n_ != o.n_ || dim_ != o.dim_) throw InvalidInput("operator matrices of different shapes");
  }

  int n_ = 0;
  int dim_ = 0;
  std::vector<Op> entries_;
};

template <typename Op>
OpMatrix<Op> commutator(const OpMatrix<Op>& a, const OpMatrix<Op>& b) {
  return a * b - b * a;
}

}  // namespace sltensor
