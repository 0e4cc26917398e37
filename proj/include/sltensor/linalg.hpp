#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace sltensor {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Exact Gauss-Jordan elimination. Pivots are chosen as the first nonzero
// entry, so these are only meaningful for exact scalar types.

/// Reduced row echelon form in place; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(MatrixX<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col);
      a.row(r) -= f * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
MatrixX<Scalar> rref(MatrixX<Scalar> a) {
  rref_in_place(a);
  return a;
}

template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis of the right kernel, one vector per column of the result.
template <typename Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& a) {
  MatrixX<Scalar> r = a;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  MatrixX<Scalar> basis(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free);
    ++k;
  }
  return basis;
}

/// A particular solution of a x = b, if one exists.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(i, a.cols());
  return x;
}

/// True when every entry is zero.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Kronecker product a (x) b.
template <typename Scalar>
MatrixX<Scalar> kron(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

/// Incrementally maintained echelon basis of a subspace of Scalar^dim.
/// `insert` reports whether the vector enlarged the span.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Reduces v against the current basis; the remainder is zero iff v is in the span.
  VectorX<Scalar> reduce(VectorX<Scalar> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Scalar c = v(pivots_[k]);
      if (c != Scalar(0)) v -= c * rows_[k];
    }
    return v;
  }

  bool contains(const VectorX<Scalar>& v) const { return is_zero(reduce(v)); }

  bool insert(const VectorX<Scalar>& v) {
    VectorX<Scalar> r = reduce(v);
    Eigen::Index p = 0;
    while (p < dim_ && r(p) == Scalar(0)) ++p;
    if (p == dim_) return false;
    r /= r(p);
    for (auto& row : rows_) {
      Scalar c = row(p);
      if (c != Scalar(0)) row -= c * r;
    }
    rows_.push_back(r);
    pivots_.push_back(p);
    return true;
  }

  const std::vector<VectorX<Scalar>>& rows() const { return rows_; }
  /// Pivot coordinate of each row; a span member's k-th coefficient is v(pivots()[k]).
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

 private:
  Eigen::Index dim_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace sltensor
