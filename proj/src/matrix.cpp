#include "hyperdelta/matrix.hpp"

namespace hyperdelta {

UPoly denom_matrix(const MatRF& m) {
    UPoly l(1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const UPoly& d = m(i, j).den();
            if (!d.is_one()) l = poly_lcm(l, d);
        }
    return l;
}

namespace {

// fraction-free Gauss-Jordan over Q[x] on [W | I]; returns adj-style data so
// that W^{-1} = cofactor / det exactly.
struct FfInverse {
    MatP inv_num;  // W^{-1} * det
    UPoly det;
};

FfInverse ff_inverse(MatP w) {
    const int n = w.rows();
    MatP aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = w(i, j);
        aug(i, n + i) = UPoly(1);
    }
    UPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!aug(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw singular_matrix_error("matrix is singular");
        if (piv != k) {
            for (int j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(k, j));
            sign = -sign;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                aug(i, j) = poly_exact_div(aug(i, j) * aug(k, k) - aug(i, k) * aug(k, j), prev);
            }
            aug(i, k) = UPoly();
        }
        prev = aug(k, k);
    }
    UPoly det = aug(n - 1, n - 1);
    if (sign < 0) det = -det;
    FfInverse r;
    r.det = det;
    r.inv_num = MatP(n, n);
    // after full Jordan elimination every diagonal equals the (signed) determinant
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.inv_num(i, j) = sign < 0 ? -aug(i, n + j) : aug(i, n + j);
    return r;
}

}  // namespace

MatRF mat_inverse(const MatRF& m) {
    if (!m.is_square()) throw std::invalid_argument("mat_inverse: non-square matrix");
    const int n = m.rows();
    const UPoly d = denom_matrix(m);
    MatP w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& e = m(i, j);
            if (e.is_zero()) continue;
            w(i, j) = e.num() * poly_exact_div(d, e.den());
        }
    FfInverse ff = ff_inverse(std::move(w));
    MatRF inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ff.inv_num(i, j).is_zero()) continue;
            inv(i, j) = RatFunc(ff.inv_num(i, j) * d, ff.det);
        }
    return inv;
}

RatFunc mat_det(const MatRF& m) {
    if (!m.is_square()) throw std::invalid_argument("mat_det: non-square matrix");
    const int n = m.rows();
    const UPoly d = denom_matrix(m);
    MatP w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& e = m(i, j);
            if (e.is_zero()) continue;
            w(i, j) = e.num() * poly_exact_div(d, e.den());
        }
    UPoly det = bareiss_det(std::move(w));
    return RatFunc(det, d.pow(static_cast<unsigned>(n)));
}

Echelon rref_q(MatQ m) {
    const int rows = m.rows(), cols = m.cols();
    Echelon e;
    e.rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const BigRat p = m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const BigRat f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.mat = std::move(m);
    return e;
}

std::vector<std::vector<BigRat>> nullspace_q(const MatQ& m) {
    const int cols = m.cols();
    Echelon e = rref_q(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<BigRat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<BigRat> v(static_cast<size_t>(cols), BigRat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[static_cast<size_t>(e.pivot_cols[r])] = -e.mat(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

UPoly char_poly_q(const MatQ& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly_q: non-square matrix");
    const int n = m.rows();
    MatP p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            UPoly e = -UPoly(m(i, j));
            if (i == j) e += UPoly::x();
            p(i, j) = e;
        }
    return bareiss_det(std::move(p));
}

std::optional<int> ord_inf(const MatRF& m) {
    std::optional<int> v;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int o = m(i, j).ord_inf();
            if (!v || o < *v) v = o;
        }
    return v;
}

std::optional<int> ord_inf_row(const MatRF& m, int i) {
    std::optional<int> v;
    for (int j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        int o = m(i, j).ord_inf();
        if (!v || o < *v) v = o;
    }
    return v;
}

MatRF tau_mat(const MatRF& m, long k) {
    MatRF r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).tau(k);
    return r;
}

}  // namespace hyperdelta
