#pragma once

// Exact dense linear algebra over a field. Everything here is templated on the
// scalar so the same routines serve the rational core and integer-valued
// checks; no pivoting by magnitude is ever done, only by exact non-zeroness.

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "tautilt/rational.hpp"

namespace tautilt::linalg {

using Index = Eigen::Index;

/// Horizontal concatenation; tolerates empty operands.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> hcat(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  MatrixX<Scalar> joined(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) joined.leftCols(a.cols()) = a;
  if (b.cols() > 0) joined.rightCols(b.cols()) = b;
  return joined;
}

/// Vertical concatenation; tolerates empty operands.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> vcat(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  MatrixX<Scalar> joined(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) joined.topRows(a.rows()) = a;
  if (b.rows() > 0) joined.bottomRows(b.rows()) = b;
  return joined;
}

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;    ///< reduced row echelon form, zero rows at the bottom
  std::vector<Index> pivots;  ///< pivot column of each non-zero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Echelon<typename Derived::Scalar> echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> result{input, {}};
  MatrixX<Scalar>& m = result.reduced;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < cols; ++c) {
      if (m(row, c) != 0) m(row, c) *= inv;
    }
    for (Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < cols; ++c) {
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    result.pivots.push_back(col);
    ++row;
  }
  return result;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(echelon(m).pivots.size());
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) return false;
  return true;
}

/// Columns form a basis of {x : m x = 0}; one column per free variable.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = echelon(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const Scalar& coeff = ech.reduced(static_cast<Index>(r), f);
      if (coeff != 0) basis(ech.pivots[r], static_cast<Index>(k)) = -coeff;
    }
  }
  return basis;
}

/// A basis of the column space, taken from the columns of m itself.
template <typename Derived>
MatrixX<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = echelon(m);
  MatrixX<Scalar> basis(m.rows(), static_cast<Index>(ech.pivots.size()));
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    basis.col(static_cast<Index>(k)) = m.col(ech.pivots[k]);
  return basis;
}

/// Standard unit vectors spanning a complement of the column space of m.
template <typename Derived>
MatrixX<typename Derived::Scalar> complement_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index dim = m.rows();
  // Pivots of the transposed echelon form mark coordinates already covered.
  const auto ech = echelon(MatrixX<Scalar>(m.transpose()));
  std::vector<bool> covered(static_cast<std::size_t>(dim), false);
  for (Index p : ech.pivots) covered[static_cast<std::size_t>(p)] = true;
  std::vector<Index> missing;
  for (Index r = 0; r < dim; ++r)
    if (!covered[static_cast<std::size_t>(r)]) missing.push_back(r);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(dim, static_cast<Index>(missing.size()));
  for (std::size_t k = 0; k < missing.size(); ++k)
    basis(missing[k], static_cast<Index>(k)) = Scalar(1);
  return basis;
}

/// Solves a x = b for x (any solution). Throws std::domain_error if inconsistent.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const auto ech = echelon(hcat(a, b));
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Index p = ech.pivots[r];
    if (p >= a.cols()) throw std::domain_error("linear system is inconsistent");
    x.row(p) = ech.reduced.block(static_cast<Index>(r), a.cols(), 1, b.cols());
  }
  return x;
}

/// Solves x a = b for x.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> solve_left(const Eigen::MatrixBase<DerivedA>& a,
                                              const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  return MatrixX<Scalar>(solve(MatrixX<Scalar>(a.transpose()), MatrixX<Scalar>(b.transpose()))
                             .transpose());
}

template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
  if (rank(a) != a.rows()) throw std::domain_error("matrix is singular");
  return solve(a, MatrixX<Scalar>::Identity(a.rows(), a.rows()));
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::domain_error("determinant of a non-square matrix");
  MatrixX<Scalar> m = input;
  const Index n = m.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar factor = m(r, col) / m(col, col);
      for (Index c = col; c < n; ++c)
        if (m(col, c) != 0) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

/// Columns of a basis of span(a) + span(b).
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> sum_space(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  return column_space(hcat(a, b));
}

/// Columns of a basis of span(a) ∩ span(b).
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> intersect_space(const Eigen::MatrixBase<DerivedA>& a,
                                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const MatrixX<Scalar> ca = column_space(a);
  const MatrixX<Scalar> cb = column_space(b);
  const MatrixX<Scalar> kernel = nullspace(hcat(ca, MatrixX<Scalar>(-cb)));
  return column_space(MatrixX<Scalar>(ca * kernel.topRows(ca.cols())));
}

}  // namespace tautilt::linalg
