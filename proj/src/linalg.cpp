#include "solenoid/linalg.hpp"

#include <stdexcept>

namespace solenoid {

MatrixS identity_matrix(int d) {
  MatrixS m = zero_matrix(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = Scalar(1);
  return m;
}

MatrixS zero_matrix(int rows, int cols) {
  MatrixS m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  }
  return m;
}

VectorS zero_vector(int d) {
  VectorS v(d);
  for (int i = 0; i < d; ++i) v(i) = Scalar(0);
  return v;
}

bool matrix_is_zero(const MatrixS& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool matrices_equal(const MatrixS& a, const MatrixS& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool vector_is_zero(const VectorS& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

std::string matrix_str(const MatrixS& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
  }
  return out + "]";
}

int rank_fraction_free(std::vector<std::vector<Polynomial>> a) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  Polynomial prev = Polynomial::constant(0, 1);
  size_t row = 0;
  int rank = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[row], a[pivot]);
    for (size_t r = row + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        const Polynomial top = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        auto q = Polynomial::divide_exact(top, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        a[r][c] = std::move(*q);
      }
      a[r][col] = Polynomial::zero(a[r][col].context());
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

int rank_fraction_free(const MatrixS& m) {
  std::vector<std::vector<Polynomial>> rows(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    // Clear denominators along the row; scaling a row by a nonzero
    // polynomial leaves the rank unchanged.
    Polynomial common = Polynomial::constant(0, 1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Polynomial& den = m(i, j).den();
      const Polynomial g = Polynomial::gcd(common, den);
      common = common * (*Polynomial::divide_exact(den, g));
    }
    rows[static_cast<size_t>(i)].reserve(static_cast<size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Scalar& entry = m(i, j);
      const Polynomial cofactor = *Polynomial::divide_exact(common, entry.den());
      rows[static_cast<size_t>(i)].push_back(entry.num() * cofactor);
    }
  }
  return rank_fraction_free(std::move(rows));
}

}  // namespace solenoid
