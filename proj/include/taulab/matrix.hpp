#pragma once

#include "taulab/rational.hpp"

#include <vector>

namespace taulab {

// Dense matrix over exact rationals.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    DenseMatrix operator*(const DenseMatrix& other) const;
    bool operator==(const DenseMatrix& other) const;

    // Submatrix keeping the given rows/columns, in the given order.
    DenseMatrix select(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. 0x0 determinant is 1.
Scalar det(const DenseMatrix& m);

// k x k matrix whose row r is the points raised to the power r.
DenseMatrix vandermonde(const std::vector<Scalar>& points);

// Desnanot-Jacobi identity:
//   det(M) det(interior) = det(NW) det(SE) - det(NE) det(SW),
// corner minors deleting first/last row and column. Size >= 2 required.
bool desnanot_jacobi_check(const DenseMatrix& m);

// Solves X * A = B for X (A square, B with cols(A) columns is not
// required: B must have cols == rows(A)). Throws SingularMatrixError
// when A is singular.
struct SingularMatrixError : std::runtime_error {
    SingularMatrixError() : std::runtime_error("singular matrix") {}
};
DenseMatrix solve_xa_eq_b(const DenseMatrix& a, const DenseMatrix& b);

} // namespace taulab
