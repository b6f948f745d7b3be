#include "hyperdelta/wedge.hpp"

#include <algorithm>

namespace hyperdelta {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

WedgeBasisIndex::WedgeBasisIndex(int nn, int mm) : n(nn), m(mm) {
    if (m <= 0 || m >= n) throw std::invalid_argument("WedgeBasisIndex: need 0 < m < n");
    const int k = n - m;
    // recovery tuples (i, m+1, ..., n-1) first
    for (int i = 0; i <= m; ++i) {
        std::vector<int> t;
        t.push_back(i);
        for (int j = m + 1; j < n; ++j) t.push_back(j);
        ordered.push_back(std::move(t));
    }
    for (const auto& t : combinations(n, k)) {
        if (std::find(ordered.begin(), ordered.end(), t) == ordered.end()) ordered.push_back(t);
    }
}

int WedgeBasisIndex::index_of(const std::vector<int>& tuple) const {
    for (size_t i = 0; i < ordered.size(); ++i)
        if (ordered[i] == tuple) return static_cast<int>(i);
    throw std::invalid_argument("WedgeBasisIndex: unknown tuple");
}

namespace {

// wedge of distinct basis vectors e_{b_0} ^ ... ^ e_{b_{k-2}} (given sorted)
// with a general vector rho; emits (tuple, signed coefficient) pairs
template <class F>
void wedge_basis_with_vector(const std::vector<int>& sorted_basis, const std::vector<F>& rho,
                             const WedgeBasisIndex& basis, std::vector<F>& out_column) {
    const int km1 = static_cast<int>(sorted_basis.size());
    for (int j = 0; j < static_cast<int>(rho.size()); ++j) {
        const F& c = rho[static_cast<size_t>(j)];
        if (c == F()) continue;
        if (std::binary_search(sorted_basis.begin(), sorted_basis.end(), j)) continue;
        std::vector<int> tuple = sorted_basis;
        const int pos = static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), j) - tuple.begin());
        tuple.insert(tuple.begin() + pos, j);
        // e_j moves left past (km1 - pos) elements from the last slot
        const int sign = ((km1 - pos) % 2 == 0) ? 1 : -1;
        F v = c;
        if (sign < 0) v = F() - v;
        out_column[static_cast<size_t>(basis.index_of(tuple))] += v;
    }
}

template <class T, class F>
Matrix<F> action_matrix(int n, const std::vector<F>& reduction, int m, int dim_cap) {
    WedgeBasisIndex basis(n, m);
    if (basis.size() > dim_cap) throw std::invalid_argument("wedge dimension exceeds the configured cap");
    Matrix<F> t(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const auto& tuple = basis.ordered[static_cast<size_t>(col)];
        std::vector<F> column(static_cast<size_t>(basis.size()));
        if (tuple.back() != n - 1) {
            std::vector<int> shifted = tuple;
            for (auto& v : shifted) ++v;
            column[static_cast<size_t>(basis.index_of(shifted))] = F(1);
        } else {
            std::vector<int> prefix(tuple.begin(), tuple.end() - 1);
            for (auto& v : prefix) ++v;
            wedge_basis_with_vector(prefix, reduction, basis, column);
        }
        for (int row = 0; row < basis.size(); ++row) t(row, col) = column[static_cast<size_t>(row)];
    }
    return t;
}

}  // namespace

MatRF module_tau_matrix(const OrePoly& l, int m, int dim_cap) {
    const int n = l.order();
    if (m <= 0 || m >= n) throw std::invalid_argument("module_tau_matrix: m out of range");
    if (l.coeff(0).is_zero())
        throw std::invalid_argument("module_tau_matrix: trailing coefficient vanishes (tau divides L)");
    // tau * tau^{n-1} = -sum_j (a_j / a_n) tau^j
    std::vector<RatFunc> rho(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) rho[static_cast<size_t>(j)] = -(l.coeff(j) / l.coeff(n));
    return action_matrix<RatFunc, RatFunc>(n, rho, m, dim_cap);
}

MatQ module_mul_matrix(const UPoly& f, int m, int dim_cap) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("module_mul_matrix: degenerate polynomial");
    if (f.coeff(0) == 0) throw std::invalid_argument("module_mul_matrix: the variable divides f");
    const int n = f.deg();
    std::vector<BigRat> rho(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) rho[static_cast<size_t>(j)] = -(f.coeff(j) / f.lc());
    return action_matrix<BigRat, BigRat>(n, rho, m, dim_cap);
}

MatRF submodule_system(const MatRF& t) { return mat_inverse(t); }

OrePoly recover_factor(const std::vector<RatFunc>& coords, int n, int m) {
    (void)n;
    const RatFunc& norm = coords[static_cast<size_t>(m)];
    if (norm.is_zero())
        throw std::invalid_argument("recover_factor: normalizing coordinate vanishes");
    std::vector<RatFunc> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i < m; ++i) c[static_cast<size_t>(i)] = coords[static_cast<size_t>(i)] / norm;
    c[static_cast<size_t>(m)] = RatFunc(1);
    return OrePoly(std::move(c));
}

UPoly recover_poly_factor(const std::vector<BigRat>& coords, int n, int m) {
    (void)n;
    const BigRat& norm = coords[static_cast<size_t>(m)];
    if (norm == 0) throw std::invalid_argument("recover_poly_factor: normalizing coordinate vanishes");
    std::vector<BigRat> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i < m; ++i) c[static_cast<size_t>(i)] = coords[static_cast<size_t>(i)] / norm;
    c[static_cast<size_t>(m)] = 1;
    return UPoly(std::move(c));
}

namespace {

// coordinates of v wedge w for v in the base module and w in wedge^k;
// returns true when all coordinates vanish
template <class F>
bool wedge_with_form_is_zero(const std::vector<F>& v, const std::vector<F>& w, const WedgeBasisIndex& basis) {
    const int n = basis.n;
    const int k = n - basis.m;
    for (const auto& kt : combinations(n, k + 1)) {
        F acc{};
        for (size_t t = 0; t < kt.size(); ++t) {
            const F& va = v[static_cast<size_t>(kt[t])];
            if (va == F()) continue;
            std::vector<int> rest;
            for (size_t u = 0; u < kt.size(); ++u)
                if (u != t) rest.push_back(kt[u]);
            F term = va * w[static_cast<size_t>(basis.index_of(rest))];
            if (t % 2 == 1) term = F() - term;
            acc += term;
        }
        if (!(acc == F())) return false;
    }
    return true;
}

}  // namespace

bool plucker_check(const OrePoly& r, const std::vector<RatFunc>& coords, int n, int m) {
    WedgeBasisIndex basis(n, m);
    for (int i = 1; i < n - m; ++i) {
        // tau^i * R stays below order n, so no reduction is needed
        std::vector<RatFunc> v(static_cast<size_t>(n));
        for (int j = 0; j <= m; ++j) v[static_cast<size_t>(i + j)] = r.coeff(j).tau(i);
        if (!wedge_with_form_is_zero(v, coords, basis)) return false;
    }
    return true;
}

bool plucker_check_poly(const UPoly& g, const std::vector<BigRat>& coords, int n, int m) {
    WedgeBasisIndex basis(n, m);
    for (int i = 1; i < n - m; ++i) {
        std::vector<BigRat> v(static_cast<size_t>(n), BigRat(0));
        for (int j = 0; j <= std::min(m, g.deg()); ++j) v[static_cast<size_t>(i + j)] = g.coeff(j);
        if (!wedge_with_form_is_zero(v, coords, basis)) return false;
    }
    return true;
}

FactorSearch right_factors(const OrePoly& l, int m) {
    const int n = l.order();
    if (m <= 0 || m >= n) throw std::invalid_argument("right_factors: m out of range");
    if (l.coeff(0).is_zero()) throw std::invalid_argument("right_factors: trailing coefficient vanishes");
    FactorSearch out;
    MatRF t = module_tau_matrix(l, m);
    MatRF sys = submodule_system(t);
    std::vector<HyperSol> sols = hyper_solve_v3(sys, &out.warnings);
    for (const HyperSol& sol : sols) {
        std::vector<RatFunc> coords;
        coords.reserve(sol.p.size());
        for (const auto& e : sol.p) coords.push_back(RatFunc(e));
        OrePoly r;
        try {
            r = recover_factor(coords, n, m);
        } catch (const std::invalid_argument&) {
            ++out.dropped_no_prefix;
            continue;
        }
        if (!plucker_check(r, coords, n, m)) {
            ++out.dropped_plucker;
            continue;
        }
        if (!ore_right_divide(l, r).second.is_zero()) {
            ++out.dropped_division;
            continue;
        }
        if (std::find(out.factors.begin(), out.factors.end(), r) == out.factors.end())
            out.factors.push_back(std::move(r));
    }
    return out;
}

std::vector<UPoly> poly_factor_demo(const UPoly& f, int m) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("poly_factor_demo: degenerate input");
    if (f.coeff(0) == 0) throw std::invalid_argument("poly_factor_demo: the variable divides f");
    if (!poly_gcd(f, f.derivative()).is_one())
        throw std::invalid_argument("poly_factor_demo: repeated factors are not supported");
    const int n = f.deg();
    if (m <= 0 || m >= n) throw std::invalid_argument("poly_factor_demo: m out of range");
    MatQ act = module_mul_matrix(f, m);
    const int dim = act.rows();

    std::vector<UPoly> found;
    auto try_vector = [&](const std::vector<BigRat>& v) {
        UPoly g;
        try {
            g = recover_poly_factor(v, n, m);
        } catch (const std::invalid_argument&) {
            return;
        }
        if (!plucker_check_poly(g, v, n, m)) return;
        if (!poly_divmod(f.monic(), g).second.is_zero()) return;
        if (std::find(found.begin(), found.end(), g) == found.end()) found.push_back(g);
    };

    // a multi-dimensional eigenspace can hide several decomposable lines; scan
    // u + t*w symbolically and keep the rational t where the Plucker residuals
    // of the recovered factor vanish
    auto scan_pencil = [&](const std::vector<BigRat>& u, const std::vector<BigRat>& w) {
        std::vector<RatFunc> vt(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            vt[static_cast<size_t>(i)] =
                RatFunc(UPoly(u[static_cast<size_t>(i)]) + UPoly::x() * w[static_cast<size_t>(i)]);
        if (vt[static_cast<size_t>(m)].is_zero()) return;
        OrePoly g;
        try {
            g = recover_factor(vt, n, m);
        } catch (const std::invalid_argument&) {
            return;
        }
        // residual coordinates of (y^i g(t)) wedge v(t), as polynomials in t
        WedgeBasisIndex basis(n, m);
        UPoly common;
        bool have = false;
        for (int i = 1; i < n - m && (!have || !common.is_one()); ++i) {
            std::vector<RatFunc> vv(static_cast<size_t>(n));
            for (int j = 0; j <= m; ++j) vv[static_cast<size_t>(i + j)] = g.coeff(j);
            for (const auto& kt : combinations(n, n - m + 1)) {
                RatFunc acc;
                for (size_t t = 0; t < kt.size(); ++t) {
                    const RatFunc& va = vv[static_cast<size_t>(kt[t])];
                    if (va.is_zero()) continue;
                    std::vector<int> rest;
                    for (size_t uu = 0; uu < kt.size(); ++uu)
                        if (uu != t) rest.push_back(kt[uu]);
                    RatFunc term = va * vt[static_cast<size_t>(basis.index_of(rest))];
                    if (t % 2 == 1) term = -term;
                    acc += term;
                }
                if (acc.is_zero()) continue;
                common = have ? poly_gcd(common, acc.num()) : acc.num().monic();
                have = true;
            }
        }
        if (!have) return;  // every combination is decomposable; basis vectors covered it
        if (common.is_constant()) return;
        for (const auto& [tv, tm] : rational_roots(common).roots) {
            (void)tm;
            std::vector<BigRat> v(static_cast<size_t>(dim));
            for (int i = 0; i < dim; ++i)
                v[static_cast<size_t>(i)] = u[static_cast<size_t>(i)] + tv * w[static_cast<size_t>(i)];
            try_vector(v);
        }
    };

    for (const auto& [lam, mult] : rational_roots(char_poly_q(act)).roots) {
        (void)mult;
        MatQ shifted = act;
        for (int i = 0; i < dim; ++i) shifted(i, i) -= lam;
        std::vector<std::vector<BigRat>> eig = nullspace_q(shifted);
        for (const auto& v : eig) try_vector(v);
        for (size_t a = 0; a + 1 < eig.size(); ++a)
            for (size_t b = a + 1; b < eig.size(); ++b) {
                scan_pencil(eig[a], eig[b]);
                scan_pencil(eig[b], eig[a]);
            }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace hyperdelta
