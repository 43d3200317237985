#include <doctest.h>

#include <vector>

#include "solenoid/linalg.hpp"
#include "solenoid/rng.hpp"

using namespace solenoid;

namespace {

// Naive rank over Q by straightforward rational elimination; used as an
// independent oracle for the fraction-free path.
int naive_rank(std::vector<std::vector<Rational>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  size_t row = 0;
  int rank = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[row][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("matrix products over the scalar field") {
  const int n = 2;
  MatrixS a = zero_matrix(2, 2);
  a(0, 0) = Scalar::mu(n, 0);
  a(0, 1) = Scalar(1);
  a(1, 1) = Scalar::alpha(n);
  const MatrixS square = a * a;
  CHECK(square(0, 0) == Scalar::mu(n, 0) * Scalar::mu(n, 0));
  CHECK(square(0, 1) == Scalar::mu(n, 0) + Scalar::alpha(n));
  CHECK(square(1, 0).is_zero());
  CHECK(square(1, 1) == Scalar::alpha(n) * Scalar::alpha(n));
  CHECK(matrices_equal(a * identity_matrix(2), a));
}

TEST_CASE("rank of symbolic matrices") {
  const int n = 2;
  CHECK(rank_fraction_free(identity_matrix(3)) == 3);
  CHECK(rank_fraction_free(zero_matrix(2, 4)) == 0);

  SUBCASE("proportional rows collapse") {
    MatrixS m = zero_matrix(2, 2);
    m(0, 0) = Scalar::mu(n, 0);
    m(0, 1) = Scalar::mu(n, 1);
    m(1, 0) = Scalar(2) * Scalar::mu(n, 0);
    m(1, 1) = Scalar(2) * Scalar::mu(n, 1);
    CHECK(rank_fraction_free(m) == 1);
  }
  SUBCASE("symbolic dependence is detected exactly") {
    MatrixS m = zero_matrix(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = Scalar::alpha(n);
    m(1, 0) = Scalar::beta(n);
    m(1, 1) = Scalar::alpha(n) * Scalar::beta(n);
    CHECK(rank_fraction_free(m) == 1);  // second row is beta times the first
    m(1, 1) = Scalar(1);
    CHECK(rank_fraction_free(m) == 2);  // det = 1 - alpha*beta != 0
  }
  SUBCASE("denominators are cleared row-wise") {
    MatrixS m = zero_matrix(2, 2);
    m(0, 0) = Scalar(1) / Scalar::mu(n, 0);
    m(0, 1) = Scalar(1) / Scalar::mu(n, 1);
    m(1, 0) = Scalar::mu(n, 1);
    m(1, 1) = Scalar::mu(n, 0);
    CHECK(rank_fraction_free(m) == 1);  // rows proportional by m1*m2
  }
}

TEST_CASE("fraction-free rank agrees with naive elimination") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = static_cast<int>(rng.uniform(1, 5));
    const int cols = static_cast<int>(rng.uniform(1, 5));
    MatrixS m = zero_matrix(rows, cols);
    std::vector<std::vector<Rational>> q(static_cast<size_t>(rows),
                                         std::vector<Rational>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        const Rational value = rng.rational(4, 1);
        q[static_cast<size_t>(i)][static_cast<size_t>(j)] = value;
        m(i, j) = Scalar(value);
      }
    }
    CHECK(rank_fraction_free(m) == naive_rank(q));
  }
}
