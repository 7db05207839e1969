#include "gieseker/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gieseker::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<mpq_class>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<mpq_class> Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Matrix& Matrix::operator*=(const mpq_class& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

std::vector<mpq_class> row_times(const std::vector<mpq_class>& x, const Matrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
    std::vector<mpq_class> y(m.cols());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(k, j)) != 0) y[j] += x[k] * m(k, j);
    }
    return y;
}

Echelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const mpq_class inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const mpq_class f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a.row_block(0, r), std::move(pivots)};
}

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row scale factors.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m, mpz_class& scale) {
    scale = 1;
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    return out;
}

struct BareissResult {
    std::size_t rank = 0;
    int sign = 1;
    mpz_class last_pivot = 1;
};

BareissResult bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
    BareissResult res;
    mpz_class prev = 1;
    const std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    mpz_class scale;
    auto a = integer_rows(m, scale);
    return bareiss(a, m.cols()).rank;
}

mpq_class determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
    if (m.rows() == 0) return 1;
    mpz_class scale;
    auto a = integer_rows(m, scale);
    const auto res = bareiss(a, m.cols());
    if (res.rank < m.rows()) return 0;
    mpq_class det(res.last_pivot * res.sign, scale);
    det.canonicalize();
    return det;
}

Matrix nullspace(const Matrix& m) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix basis(m.cols() - e.pivots.size(), m.cols());
    std::size_t b = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(b, free) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(b, e.pivots[i]) = -e.reduced(i, free);
        ++b;
    }
    return basis;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

Matrix row_space(const Matrix& m) { return rref(m).reduced; }

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("stack: column mismatch");
    Matrix s(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
    return s;
}

std::vector<mpq_class> coordinates(const Echelon& basis, const std::vector<mpq_class>& v) {
    std::vector<mpq_class> c(basis.pivots.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = v.at(basis.pivots[i]);
    const auto back = row_times(c, basis.reduced);
    if (back != v) throw std::domain_error("vector is not in the row space");
    return c;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

std::string to_string(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace gieseker::linalg
