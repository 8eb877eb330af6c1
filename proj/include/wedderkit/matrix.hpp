#pragma once

#include <vector>

#include "wedderkit/cyclotomic.hpp"

namespace wedderkit {

// Dense exact rational matrix with deterministic Gaussian elimination
// (pivot = first row with nonzero entry in column order).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    static RatMatrix identity(int n);
    RatMatrix operator*(const RatMatrix& b) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    // Exact inverse; throws SingularMatrixError with the failing column.
    RatMatrix inverse() const;
    std::vector<Rational> solve(std::vector<Rational> rhs) const;
    bool is_invertible() const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Rectangular matrix over a cyclotomic field; entries share one ambient order.
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0), order_(1) {}
    FieldMatrix(int rows, int cols, long order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long order() const { return order_; }
    Cyclotomic& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    void set(int i, int j, const Cyclotomic& v);

    static FieldMatrix identity(int n, long order);
    FieldMatrix operator*(const FieldMatrix& b) const;
    FieldMatrix operator+(const FieldMatrix& b) const;
    FieldMatrix operator-(const FieldMatrix& b) const;
    bool operator==(const FieldMatrix& b) const;

    FieldMatrix inverse() const;

private:
    int rows_, cols_;
    long order_;
    std::vector<Cyclotomic> data_;
};

// Exact solution of M x = v; M square and nonsingular.
std::vector<Cyclotomic> matrix_solve(const FieldMatrix& m, const std::vector<Cyclotomic>& v);

// Several right-hand sides at once (columns of B).
FieldMatrix matrix_solve_columns(const FieldMatrix& m, const FieldMatrix& b);

} // namespace wedderkit
