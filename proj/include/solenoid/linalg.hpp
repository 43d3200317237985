#pragma once

// Eigen dense types over the exact Scalar field, plus exact rank by
// Bareiss fraction-free elimination (denominators cleared row-wise, all
// divisions exact in the polynomial ring).

#include <vector>

#include <Eigen/Core>

#include "solenoid/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<solenoid::Scalar> {
  using Real = solenoid::Scalar;
  using NonInteger = solenoid::Scalar;
  using Nested = solenoid::Scalar;
  using Literal = solenoid::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return solenoid::Scalar(0); }
  static inline Real dummy_precision() { return solenoid::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace solenoid {

using MatrixS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorS = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

MatrixS identity_matrix(int d);
MatrixS zero_matrix(int rows, int cols);
VectorS zero_vector(int d);
bool matrix_is_zero(const MatrixS& m);
bool matrices_equal(const MatrixS& a, const MatrixS& b);
bool vector_is_zero(const VectorS& v);
std::string matrix_str(const MatrixS& m);

int rank_fraction_free(std::vector<std::vector<Polynomial>> rows);
int rank_fraction_free(const MatrixS& m);

}  // namespace solenoid
