#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gieseker::linalg {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<mpq_class>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<mpq_class> row(std::size_t i) const;
    Matrix transpose() const;
    /// Rows [first, first + count).
    Matrix row_block(std::size_t first, std::size_t count) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix& operator*=(const mpq_class& s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

std::vector<mpq_class> row_times(const std::vector<mpq_class>& x, const Matrix& m);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan over Q.
Echelon rref(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination on the row-scaled integer matrix.
std::size_t rank(const Matrix& m);
/// Determinant by fraction-free elimination; the matrix must be square.
mpq_class determinant(const Matrix& m);

/// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
/// Rows form a basis of {x : x m = 0}.
Matrix left_nullspace(const Matrix& m);
/// Echelon basis of the row space.
Matrix row_space(const Matrix& m);

/// Rows of `a` followed by rows of `b` (same column count).
Matrix stack(const Matrix& a, const Matrix& b);

/// Coordinates c with c * basis = v, where basis is an Echelon result.
/// Throws std::domain_error when v is outside the row space.
std::vector<mpq_class> coordinates(const Echelon& basis, const std::vector<mpq_class>& v);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

std::string to_string(const mpq_class& q);

}  // namespace gieseker::linalg
