#include "repdim/matrix.hpp"

#include "repdim/errors.hpp"

namespace repdim {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("Matrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * cols, field_->zero());
}

Matrix Matrix::identity(const FieldPtr& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

void Matrix::check_field(const Matrix& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw FieldMismatch("matrix operands lie in different fields");
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    check_field(o);
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix add: shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sub: shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_) throw ShapeError("matrix mul: inner dimensions differ");
    Matrix r(field_, rows_, o.cols_);
    const long work = static_cast<long>(rows_) * cols_ * o.cols_;
#pragma omp parallel for schedule(dynamic, 4) if (work > 32768)
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw ShapeError("trace: matrix not square");
    Scalar t = field_->zero();
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_) throw ShapeError("hstack: row counts differ");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.cols_) throw ShapeError("vstack: column counts differ");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix r(field_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeError("block: out of range");
    Matrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Matrix Matrix::row(int r) const { return block(r, 0, 1, cols_); }
Matrix Matrix::col(int c) const { return block(0, c, rows_, 1); }

namespace {

// Shared elimination core. The pivot scan is serial (deterministic); the
// row updates are independent and may run in parallel. Results are
// bit-identical either way.
Matrix::Rref rref_impl(const Matrix& in, bool allow_parallel) {
    Matrix::Rref out;
    out.reduced = in;
    Matrix& m = out.reduced;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        const long work = static_cast<long>(rows) * (cols - c);
#pragma omp parallel for schedule(dynamic, 8) if (allow_parallel && work > 16384)
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Scalar f = m.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

}  // namespace

Matrix::Rref Matrix::rref() const { return rref_impl(*this, true); }

std::vector<Matrix> Matrix::nullspace() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Matrix v(field_, cols_, 1);
        v.at(c, 0) = field_->one();
        for (int r = 0; r < rr.rank; ++r) v.at(rr.pivots[r], 0) = -rr.reduced.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix::SolveResult Matrix::solve(const Matrix& b) const {
    check_field(b);
    if (b.cols() != 1 || b.rows() != rows_) throw ShapeError("solve: b must be a column of matching height");
    Rref rr = hstack(b).rref();
    SolveResult res;
    // inconsistent iff a pivot lands in the appended column
    for (int c : rr.pivots)
        if (c == cols_) return res;
    res.consistent = true;
    res.particular = Matrix(field_, cols_, 1);
    for (int r = 0; r < rr.rank; ++r) res.particular.at(rr.pivots[r], 0) = rr.reduced.at(r, cols_);
    // kernel from the left block (which is rref(A))
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Matrix v(field_, cols_, 1);
        v.at(c, 0) = field_->one();
        for (int r = 0; r < rr.rank; ++r) v.at(rr.pivots[r], 0) = -rr.reduced.at(r, c);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse: matrix not square");
    Rref rr = hstack(identity(field_, rows_)).rref();
    if (rr.rank < rows_) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (rr.pivots[i] != i) return std::nullopt;
    return rr.reduced.block(0, rows_, rows_, rows_);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (!a.field()->same(*b.field())) throw FieldMismatch("kronecker: fields differ");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return r;
}

Matrix column_vector(const FieldPtr& field, const std::vector<Scalar>& entries) {
    Matrix v(field, static_cast<int>(entries.size()), 1);
    for (size_t i = 0; i < entries.size(); ++i) v.at(static_cast<int>(i), 0) = entries[i];
    return v;
}

std::vector<Scalar> to_vector(const Matrix& column) {
    if (column.cols() != 1) throw ShapeError("to_vector: not a column");
    std::vector<Scalar> v;
    v.reserve(column.rows());
    for (int i = 0; i < column.rows(); ++i) v.push_back(column.at(i, 0));
    return v;
}

namespace reference {

// Independent textbook Gauss-Jordan, no pragmas, no shared core: the
// production kernel must agree with this bit for bit.
Matrix::Rref rref(const Matrix& in) {
    Matrix::Rref out;
    out.reduced = in;
    Matrix& m = out.reduced;
    int lead = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (lead >= m.rows()) break;
        int i = lead;
        while (i < m.rows() && m.at(i, c).is_zero()) ++i;
        if (i == m.rows()) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(lead, j), m.at(i, j));
        Scalar inv = m.at(lead, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(lead, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            Scalar f = m.at(r, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivots.size());
    return out;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("reference::mul: inner dimensions differ");
    Matrix r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Scalar acc = a.field()->zero();
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

}  // namespace reference

}  // namespace repdim
