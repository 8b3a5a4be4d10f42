#ifndef NETIDENT_MATRIX_HPP
#define NETIDENT_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netident/field.hpp"

namespace netident {

using Complex = std::complex<double>;

// Per-scalar policy for elimination: exact fields pivot on any nonzero,
// floating types pivot on the largest magnitude and treat tiny pivots as zero.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Fp> {
    static constexpr bool exact = true;
    static Fp zero() { return Fp::zero(); }
    static Fp one() { return Fp::one(); }
    static double magnitude(Fp x) { return x.is_zero() ? 0.0 : 1.0; }
    static bool negligible(Fp x, double /*scale*/) { return x.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr double rel_tol = 1e-13;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static double magnitude(Complex x) { return std::abs(x); }
    static bool negligible(Complex x, double scale) { return std::abs(x) <= rel_tol * std::max(scale, 1.0); }
};

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    using traits = ScalarTraits<T>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, traits::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
        return out;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
        return out;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T a = (*this)(i, k);
                if (a == traits::zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }
    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch in product");
        std::vector<T> out(rows_, traits::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Max absolute row sum.
    double norm_inf() const {
        double best = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) s += traits::magnitude((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Reduced row echelon form in place; returns pivot columns.
template <typename T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    using traits = ScalarTraits<T>;
    const double scale = m.norm_inf();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (traits::magnitude(m(r, col)) > traits::magnitude(m(best, col))) best = r;
            if (traits::exact && !traits::negligible(m(best, col), scale)) break;
        }
        if (traits::negligible(m(best, col), scale)) continue;
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        const T inv = traits::one() / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const T f = m(r, col);
            if (f == traits::zero()) continue;
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

// Determinant by elimination. Square matrices only.
template <typename T>
T determinant(Matrix<T> m) {
    using traits = ScalarTraits<T>;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    const double scale = m.norm_inf();
    T det = traits::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col; r < n; ++r) {
            if (traits::magnitude(m(r, col)) > traits::magnitude(m(best, col))) best = r;
            if (traits::exact && !traits::negligible(m(best, col), scale)) break;
        }
        if (traits::negligible(m(best, col), scale)) return traits::zero();
        if (best != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(best, c));
            det = -det;
        }
        det *= m(col, col);
        const T inv = traits::one() / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const T f = m(r, col) * inv;
            if (f == traits::zero()) continue;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

// Inverse by Gauss-Jordan; throws SingularMatrix.
template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = ScalarTraits<T>::one();
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix();
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

// Basis of the right null space, one vector per free column.
template <typename T>
std::vector<std::vector<T>> null_space(Matrix<T> m) {
    using traits = ScalarTraits<T>;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), traits::zero());
        v[free] = traits::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace netident

#endif
