#pragma once

#include <optional>
#include <vector>

#include "repdim/field.hpp"

namespace repdim {

class Matrix;

struct RrefResult;
struct SolveResult;

// Dense matrix over an exact field, row-major, value semantics.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, int rows, int cols);  // zero-filled

    static Matrix identity(const FieldPtr& field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // OpenMP above a size threshold
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const;
    Matrix transpose() const;
    Scalar trace() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix columns(const std::vector<int>& idx) const;
    Matrix block(int r0, int c0, int nrows, int ncols) const;
    Matrix row(int r) const;
    Matrix col(int c) const;

    // unique reduced row echelon form; row updates run under OpenMP
    RrefResult rref() const;

    SolveResult solve(const Matrix& b) const;  // A x = b, b a column
    std::vector<Matrix> nullspace() const;
    std::optional<Matrix> inverse() const;
    int rank() const { return rref().rank; }

    const std::vector<Scalar>& data() const { return a_; }

private:
    void check_field(const Matrix& o) const;

    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

struct SolveResult {
    bool consistent = false;
    Matrix particular;           // one solution column (if consistent)
    std::vector<Matrix> kernel;  // basis of the nullspace, column vectors
};

Matrix kronecker(const Matrix& a, const Matrix& b);

// column vector helpers
Matrix column_vector(const FieldPtr& field, const std::vector<Scalar>& entries);
std::vector<Scalar> to_vector(const Matrix& column);

// Plain serial textbook kernels, kept as the reference implementations the
// parallel paths are tested against (and benchmarked against).
namespace reference {
Matrix::Rref rref(const Matrix& m);
Matrix mul(const Matrix& a, const Matrix& b);
}  // namespace reference

}  // namespace repdim
