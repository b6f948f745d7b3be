#pragma once

#include <vector>

#include "ratfunc.hpp"

namespace hyperdelta {

template <class T>
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b == T()) continue;
                    r(i, j) += a * b;
                }
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * s;
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(int i) const {
        std::vector<T> v(static_cast<size_t>(cols_));
        for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = (*this)(i, j);
        return v;
    }
    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: apply shape mismatch");
        std::vector<T> r(static_cast<size_t>(rows_), T());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return r;
    }

   private:
    int rows_, cols_;
    std::vector<T> data_;
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }
};

using MatRF = Matrix<RatFunc>;
using MatQ = Matrix<BigRat>;
using MatP = Matrix<UPoly>;

// exact_div hooks for fraction-free (Bareiss) elimination
inline BigRat exact_div(const BigRat& a, const BigRat& b) { return a / b; }
inline UPoly exact_div(const UPoly& a, const UPoly& b) { return poly_exact_div(a, b); }

// fraction-free determinant; entries must form an integral domain with exact_div
template <class T>
T bareiss_det(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("bareiss_det: non-square matrix");
    const int n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!(m(i, k) == T())) {
                piv = i;
                break;
            }
        if (piv < 0) return T();
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (sign < 0) det = T() - det;
    return det;
}

// monic lcm of all entry denominators
UPoly denom_matrix(const MatRF& m);

// exact inverse via fraction-free elimination over Q[x] after clearing denominators
MatRF mat_inverse(const MatRF& m);

// determinant over Q(x) (clears denominators, Bareiss over Q[x])
RatFunc mat_det(const MatRF& m);

// reduced row echelon data over Q
struct Echelon {
    MatQ mat;
    std::vector<int> pivot_cols;
    int rank;
};
Echelon rref_q(MatQ m);

// basis of the right kernel over Q, deterministic (one vector per free column)
std::vector<std::vector<BigRat>> nullspace_q(const MatQ& m);

// characteristic polynomial det(lambda*I - m) over Q
UPoly char_poly_q(const MatQ& m);

// minimum of entry valuations at infinity; nullopt for the zero matrix
std::optional<int> ord_inf(const MatRF& m);
std::optional<int> ord_inf_row(const MatRF& m, int i);

MatRF tau_mat(const MatRF& m, long k = 1);

}  // namespace hyperdelta
