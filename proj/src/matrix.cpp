#include "wedderkit/matrix.hpp"

#include "wedderkit/errors.hpp"

namespace wedderkit {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& b) const {
    if (cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
    RatMatrix r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0) r.at(i, j) += a * b.at(k, j);
        }
    return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix/vector mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Row-reduce [A | B] in place; returns false at the first pivotless column.
bool eliminate(RatMatrix& a, RatMatrix& b, int* bad_col) {
    int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            if (bad_col) *bad_col = col;
            return false;
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
        }
        Rational inv = Rational(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) a.at(col, j) *= inv;
        for (int j = 0; j < b.cols(); ++j) b.at(col, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < n; ++j)
                if (a.at(col, j) != 0) a.at(i, j) -= f * a.at(col, j);
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(col, j) != 0) b.at(i, j) -= f * b.at(col, j);
        }
    }
    return true;
}

} // namespace

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw ValidationError("inverse of non-square matrix");
    RatMatrix a = *this;
    RatMatrix b = identity(rows_);
    int bad = -1;
    if (!eliminate(a, b, &bad)) throw SingularMatrixError(bad);
    return b;
}

std::vector<Rational> RatMatrix::solve(std::vector<Rational> rhs) const {
    if (rows_ != cols_) throw ValidationError("solve needs a square matrix");
    RatMatrix a = *this;
    RatMatrix b(rows_, 1);
    for (int i = 0; i < rows_; ++i) b.at(i, 0) = rhs[i];
    int bad = -1;
    if (!eliminate(a, b, &bad)) throw SingularMatrixError(bad);
    std::vector<Rational> x(rows_);
    for (int i = 0; i < rows_; ++i) x[i] = b.at(i, 0);
    return x;
}

bool RatMatrix::is_invertible() const {
    if (rows_ != cols_) return false;
    RatMatrix a = *this;
    RatMatrix b(rows_, 0);
    return eliminate(a, b, nullptr);
}

FieldMatrix::FieldMatrix(int rows, int cols, long order)
    : rows_(rows),
      cols_(cols),
      order_(order),
      data_(static_cast<size_t>(rows) * cols, Cyclotomic::zero(order)) {}

void FieldMatrix::set(int i, int j, const Cyclotomic& v) {
    at(i, j) = v.order() == order_ ? v : v.embedded(order_);
}

FieldMatrix FieldMatrix::identity(int n, long order) {
    FieldMatrix m(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& b) const {
    if (cols_ != b.rows_ || order_ != b.order_)
        throw ValidationError("field matrix mismatch in product");
    FieldMatrix r(rows_, b.cols_, order_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += at(i, k) * b.at(k, j);
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& b) const {
    if (cols_ != b.cols_ || rows_ != b.rows_ || order_ != b.order_)
        throw ValidationError("field matrix mismatch in sum");
    FieldMatrix r(rows_, cols_, order_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + b.data_[i];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& b) const {
    if (cols_ != b.cols_ || rows_ != b.rows_ || order_ != b.order_)
        throw ValidationError("field matrix mismatch in difference");
    FieldMatrix r(rows_, cols_, order_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - b.data_[i];
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& b) const {
    if (cols_ != b.cols_ || rows_ != b.rows_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == b.data_[i])) return false;
    return true;
}

namespace {

bool field_eliminate(FieldMatrix& a, FieldMatrix& b, int* bad_col) {
    int n = a.rows();
    long order = a.order();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            if (bad_col) *bad_col = col;
            return false;
        }
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
        }
        Cyclotomic inv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j)
            if (!a.at(col, j).is_zero()) a.at(col, j) = a.at(col, j) * inv;
        for (int j = 0; j < b.cols(); ++j)
            if (!b.at(col, j).is_zero()) b.at(col, j) = b.at(col, j) * inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Cyclotomic f = a.at(i, col);
            for (int j = 0; j < n; ++j)
                if (!a.at(col, j).is_zero()) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
            for (int j = 0; j < b.cols(); ++j)
                if (!b.at(col, j).is_zero()) b.at(i, j) = b.at(i, j) - f * b.at(col, j);
        }
    }
    (void)order;
    return true;
}

} // namespace

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw ValidationError("inverse of non-square matrix");
    FieldMatrix a = *this;
    FieldMatrix b = identity(rows_, order_);
    int bad = -1;
    if (!field_eliminate(a, b, &bad)) throw SingularMatrixError(bad);
    return b;
}

std::vector<Cyclotomic> matrix_solve(const FieldMatrix& m, const std::vector<Cyclotomic>& v) {
    if (m.rows() != m.cols()) throw ValidationError("matrix_solve needs a square matrix");
    if (static_cast<int>(v.size()) != m.rows())
        throw ValidationError("matrix_solve dimension mismatch");
    FieldMatrix b(m.rows(), 1, m.order());
    for (int i = 0; i < m.rows(); ++i) b.set(i, 0, v[i]);
    FieldMatrix x = matrix_solve_columns(m, b);
    std::vector<Cyclotomic> out;
    out.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) out.push_back(x.at(i, 0));
    return out;
}

FieldMatrix matrix_solve_columns(const FieldMatrix& m, const FieldMatrix& b0) {
    FieldMatrix a = m;
    FieldMatrix b = b0;
    int bad = -1;
    if (!field_eliminate(a, b, &bad)) throw SingularMatrixError(bad);
    return b;
}

} // namespace wedderkit
