#pragma once

#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace hslin {

/// Arbitrary-precision integer. Expression templates are disabled so the type
/// behaves as a plain value inside Eigen containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using BigMatrix = DenseMatrix<BigInt>;

/// U * A * V = D with U, V unimodular and D diagonal,
/// D(0,0) | D(1,1) | ... , all non-negative.
template <typename Scalar>
struct SmithDecomposition {
  DenseMatrix<Scalar> U;
  DenseMatrix<Scalar> D;
  DenseMatrix<Scalar> V;
  Eigen::Index rank = 0;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Derived>
void swap_rows(Eigen::MatrixBase<Derived>& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

template <typename Derived>
void swap_cols(Eigen::MatrixBase<Derived>& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}

// row(dst) += factor * row(src)
template <typename Scalar>
void add_row(DenseMatrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& factor) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

template <typename Scalar>
void add_col(DenseMatrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& factor) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

}  // namespace detail

/// Diagonalizes `a` in place by unimodular row and column operations.
/// Every row operation is replayed on the rows of `row_companion` (which must
/// have a.rows() rows) and every column operation on the columns of
/// `col_companion` (a.cols() columns). Either companion may be null.
/// Returns the rank.
///
/// Pivot: leftmost column with a nonzero entry, and within it the entry of
/// minimal absolute value.
template <typename Scalar>
Eigen::Index smith_reduce(DenseMatrix<Scalar>& a, DenseMatrix<Scalar>* row_companion,
                          DenseMatrix<Scalar>* col_companion) {
  static_assert(!std::is_floating_point_v<Scalar>, "Smith normal form needs an exact integer type");
  using detail::abs_value;
  const Scalar zero(0);
  const Eigen::Index rows = a.rows(), cols = a.cols();

  auto row_swap = [&](Eigen::Index i, Eigen::Index j) {
    detail::swap_rows(a, i, j);
    if (row_companion) detail::swap_rows(*row_companion, i, j);
  };
  auto col_swap = [&](Eigen::Index i, Eigen::Index j) {
    detail::swap_cols(a, i, j);
    if (col_companion) detail::swap_cols(*col_companion, i, j);
  };
  auto row_add = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    detail::add_row(a, dst, src, f);
    if (row_companion) detail::add_row(*row_companion, dst, src, f);
  };
  auto col_add = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    detail::add_col(a, dst, src, f);
    if (col_companion) detail::add_col(*col_companion, dst, src, f);
  };

  Eigen::Index t = 0;
  for (; t < rows && t < cols; ++t) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index c = t; c < cols && pc < 0; ++c) {
      for (Eigen::Index r = t; r < rows; ++r) {
        if (a(r, c) != zero && (pr < 0 || abs_value(a(r, c)) < abs_value(a(pr, c)))) {
          pr = r;
          pc = c;
        }
      }
      if (pr >= 0) pc = c;
    }
    if (pc < 0) break;
    row_swap(t, pr);
    col_swap(t, pc);

    while (true) {
      bool cleared = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (a(r, t) == zero) continue;
        const Scalar q = a(r, t) / a(t, t);
        if (q != zero) row_add(r, t, Scalar(-q));
        if (a(r, t) != zero) cleared = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (a(t, c) == zero) continue;
        const Scalar q = a(t, c) / a(t, t);
        if (q != zero) col_add(c, t, Scalar(-q));
        if (a(t, c) != zero) cleared = false;
      }
      if (!cleared) {
        // A remainder smaller than the pivot survived; move the smallest
        // one into the pivot position and repeat.
        Eigen::Index br = t, bc = t;
        for (Eigen::Index r = t + 1; r < rows; ++r)
          if (a(r, t) != zero && abs_value(a(r, t)) < abs_value(a(br, bc))) br = r, bc = t;
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (a(t, c) != zero && abs_value(a(t, c)) < abs_value(a(br, bc))) br = t, bc = c;
        row_swap(t, br);
        col_swap(t, bc);
        continue;
      }

      // Pivot must divide the whole trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index r = t + 1; r < rows && bad_row < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != zero) {
            bad_row = r;
            break;
          }
      if (bad_row < 0) break;
      row_add(t, bad_row, Scalar(1));
    }

    if (a(t, t) < zero) {
      for (Eigen::Index c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      if (row_companion)
        for (Eigen::Index c = 0; c < row_companion->cols(); ++c) (*row_companion)(t, c) = -(*row_companion)(t, c);
    }
  }
  return t;
}

template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const DenseMatrix<Scalar>& a) {
  SmithDecomposition<Scalar> out;
  out.D = a;
  out.U = DenseMatrix<Scalar>::Identity(a.rows(), a.rows());
  out.V = DenseMatrix<Scalar>::Identity(a.cols(), a.cols());
  out.rank = smith_reduce(out.D, &out.U, &out.V);
  return out;
}

/// Plain triple-loop product; usable with scalar types whose Eigen product
/// kernels do not instantiate.
template <typename Scalar>
DenseMatrix<Scalar> exact_product(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Entrywise equality; Eigen's operator== has the same instantiation
/// problem as its product for multiprecision scalars.
template <typename Scalar>
bool exact_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Non-negative residue of x modulo m > 0.
template <typename Scalar>
Scalar mod_floor(const Scalar& x, const Scalar& m) {
  Scalar r = x % m;
  return r < Scalar(0) ? Scalar(r + m) : r;
}

}  // namespace hslin
