#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwpair/errors.hpp"
#include "cwpair/rational.hpp"

namespace cwpair {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

/// Square matrix of arbitrary-precision integers (Seifert matrices,
/// companion matrices).
using IntMatrix = Matrix<Int>;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }

inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division; every interior division divides evenly, so the result is exact
/// for integers and for polynomials alike. Consumes a working copy.
template <typename T>
T bareiss_determinant(Matrix<T> m) {
    if (!m.square()) throw DomainError("determinant requires a square matrix");
    const size_t n = m.rows();
    if (n == 0) return T(1);

    T prev_pivot(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
            if (swap_row == n) return T();  // whole lower column zero
            for (size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev_pivot);
            }
            m(i, k) = T();
        }
        prev_pivot = m(k, k);
    }
    return negate ? T() - m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Parses "[[a,b,...],[...],...]" into a matrix; all rows must have equal
/// length. "[]" is the 0x0 matrix.
IntMatrix parse_int_matrix(std::string_view text);

/// "[[a,b],[c,d]]" form, no spaces.
std::string int_matrix_str(const IntMatrix& m);

}  // namespace cwpair
