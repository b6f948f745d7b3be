#include "hyperdelta/local.hpp"

#include <algorithm>
#include <climits>

#include "hyperdelta/threads.hpp"

namespace hyperdelta {

GenExp trunc_map(const Candidate& lambda) {
    const int s = (lambda.a.is_constant() ? 0 : lambda.a.deg()) - (lambda.b.is_constant() ? 0 : lambda.b.deg());
    return GenExp{s, lambda.c, slc(lambda.a) - slc(lambda.b)};
}

MatRF gauge_transform(const MatRF& mhat, const MatRF& t) { return gauge_transform(mhat, t, mat_inverse(t)); }

MatRF gauge_transform(const MatRF& mhat, const MatRF& t, const MatRF& tinv) {
    MatRF tau_tinv = tau_mat(tinv);
    MatRF delta_t = tau_mat(t) - t;
    return tau_tinv * (mhat * t - delta_t);
}

MatRF gauge_conjugate_tau(const MatRF& m, const MatRF& t) {
    return tau_mat(mat_inverse(t)) * m * t;
}

namespace {

constexpr int kZeroRowPole = INT_MIN / 4;

// pole order of row i: -ord(row), or kZeroRowPole for a zero row
std::vector<int> row_poles(const MatRF& mhat) {
    std::vector<int> n(static_cast<size_t>(mhat.rows()));
    for (int i = 0; i < mhat.rows(); ++i) {
        auto o = ord_inf_row(mhat, i);
        n[static_cast<size_t>(i)] = o ? -*o : kZeroRowPole;
    }
    return n;
}

// unified pencil at coefficient level ell (= -s for s-simple, = +1 for 0-simple):
// mu_i = min(ord_i, ell), D0 = diag[mu_i == ell], N0[i][j] = [t^{mu_i}] Mhat[i][j]
struct Pencil {
    MatQ d0;
    MatQ n0;
    UPoly det_pencil;  // det(N0 - lambda D0)
};

Pencil pencil_at(const MatRF& mhat, int ell) {
    const int n = mhat.rows();
    Pencil p{MatQ(n, n), MatQ(n, n), UPoly()};
    for (int i = 0; i < n; ++i) {
        auto oi = ord_inf_row(mhat, i);
        const int mu = oi ? std::min(*oi, ell) : ell;
        if (mu == ell) p.d0(i, i) = 1;
        for (int j = 0; j < n; ++j) {
            const RatFunc& e = mhat(i, j);
            if (e.is_zero()) continue;
            if (e.ord_inf() > mu) continue;
            p.n0(i, j) = coeff_at_infinity(e, mu);
        }
    }
    MatP pm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            UPoly e(p.n0(i, j));
            if (i == j && p.d0(i, i) == 1) e -= UPoly::x();
            pm(i, j) = e;
        }
    p.det_pencil = bareiss_det(std::move(pm));
    return p;
}

// measure vector (m_K, ..., m_LO) with m_k = sum_i max(0, n_i - k); lex order
std::vector<long> measure(const MatRF& mhat, int k_hi, int k_lo) {
    std::vector<int> n = row_poles(mhat);
    std::vector<long> m;
    for (int k = k_hi; k >= k_lo; --k) {
        long acc = 0;
        for (int ni : n)
            if (ni != kZeroRowPole && ni > k) acc += ni - k;
        m.push_back(acc);
    }
    return m;
}

RatFunc t_power(int k) {
    // t^k = x^{-k}
    if (k >= 0) return RatFunc(UPoly(1), UPoly::x().pow(static_cast<unsigned>(k)));
    return RatFunc(UPoly::x().pow(static_cast<unsigned>(-k)));
}

struct Reduction {
    MatRF mhat;
    MatRF t;
    MatRF tinv;
    int k_hi, k_lo;
    std::vector<long> omega;

    explicit Reduction(MatRF m, int hi, int lo)
        : mhat(std::move(m)),
          t(MatRF::identity(mhat.rows())),
          tinv(MatRF::identity(mhat.rows())),
          k_hi(hi),
          k_lo(lo),
          omega(measure(mhat, hi, lo)) {}

    bool commit(const MatRF& tm, const MatRF& tmi, bool require_decrease) {
        MatRF cand = gauge_transform(mhat, tm, tmi);
        std::vector<long> om = measure(cand, k_hi, k_lo);
        if (om >= omega) {
            if (require_decrease) throw internal_error("reduction move failed to decrease the measure");
            return false;
        }
        mhat = std::move(cand);
        t = t * tm;
        tinv = tmi * tinv;
        omega = std::move(om);
        return true;
    }

    // row operation killing a dependency among the leading vectors of the
    // rows with pole order above the level
    bool move_dependency(int ell) {
        const int n = mhat.rows();
        std::vector<int> poles = row_poles(mhat);
        std::vector<int> rows;
        for (int i = 0; i < n; ++i) {
            auto oi = ord_inf_row(mhat, i);
            if (oi && *oi < ell) rows.push_back(i);
        }
        if (rows.size() < 2) return false;
        MatQ lt(n, static_cast<int>(rows.size()));  // transpose of leading-vector stack
        for (size_t k = 0; k < rows.size(); ++k) {
            const int i = rows[k];
            const int oi = -poles[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) {
                const RatFunc& e = mhat(i, j);
                if (!e.is_zero() && e.ord_inf() == oi) lt(j, static_cast<int>(k)) = e.lc_inf();
            }
        }
        auto deps = nullspace_q(lt);
        if (deps.empty()) return false;
        const auto& a = deps.front();
        int pivot = -1;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (a[k] == 0) continue;
            if (pivot < 0 || poles[static_cast<size_t>(rows[k])] < poles[static_cast<size_t>(rows[pivot])])
                pivot = static_cast<int>(k);
        }
        const int istar = rows[static_cast<size_t>(pivot)];
        const int nstar = poles[static_cast<size_t>(istar)];
        MatRF e = MatRF::identity(n), einv = MatRF::identity(n);
        for (size_t k = 0; k < rows.size(); ++k) {
            if (static_cast<int>(k) == pivot || a[k] == 0) continue;
            const int i = rows[k];
            RatFunc coef = RatFunc(a[k] / a[static_cast<size_t>(pivot)]) *
                           t_power(poles[static_cast<size_t>(i)] - nstar);
            e(istar, i) = coef;
            einv(istar, i) = -coef;
        }
        // gauge with T = E^{-1} applies the row operation E on the left
        return commit(einv, e, true);
    }

    // constant column replacement from a kernel vector of the stacked pencil,
    // followed by a shear lowering the pole of the chosen column/row
    bool move_kernel_shear(const Pencil& p, bool require_stacked) {
        const int n = mhat.rows();
        std::vector<int> poles = row_poles(mhat);
        MatQ stack(require_stacked ? 2 * n : n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                stack(i, j) = p.n0(i, j);
                if (require_stacked) stack(n + i, j) = i == j ? p.d0(i, i) : BigRat(0);
            }
        auto null = nullspace_q(stack);
        for (const auto& w : null) {
            int jstar = -1;
            for (int k = 0; k < n; ++k) {
                if (w[static_cast<size_t>(k)] == 0) continue;
                if (poles[static_cast<size_t>(k)] == kZeroRowPole) continue;
                if (jstar < 0 || poles[static_cast<size_t>(k)] < poles[static_cast<size_t>(jstar)]) jstar = k;
            }
            if (jstar < 0) continue;
            // normalize so w[jstar] = 1
            std::vector<BigRat> wn(w);
            const BigRat piv = wn[static_cast<size_t>(jstar)];
            for (auto& v : wn) v /= piv;
            MatRF tc = MatRF::identity(n), tci = MatRF::identity(n);
            for (int k = 0; k < n; ++k) {
                if (k == jstar || wn[static_cast<size_t>(k)] == 0) continue;
                tc(k, jstar) = RatFunc(wn[static_cast<size_t>(k)]);
                tci(k, jstar) = RatFunc(-wn[static_cast<size_t>(k)]);
            }
            // combined with the shear diag(..., x at jstar, ...): column * t, row / t
            MatRF tm = tc, tmi = tci;
            for (int i = 0; i < n; ++i) {
                tm(i, jstar) = tm(i, jstar) * RatFunc(UPoly::x());
                tmi(jstar, i) = tmi(jstar, i) * t_power(1);
            }
            if (commit(tm, tmi, require_stacked)) return true;
        }
        return false;
    }

    bool move_column_shear() {
        const int n = mhat.rows();
        for (int j = 0; j < n; ++j) {
            for (int e : {-1, +1}) {
                MatRF tm = MatRF::identity(n), tmi = MatRF::identity(n);
                tm(j, j) = t_power(e);
                tmi(j, j) = t_power(-e);
                if (commit(tm, tmi, false)) return true;
            }
        }
        return false;
    }
};

// drive the engine until every requested level is simple
Reduction reduce_levels(const MatRF& mhat, const std::vector<int>& ells, int k_lo, int budget) {
    int q0 = 0;
    auto o = ord_inf(mhat);
    if (o && *o < 0) q0 = -*o;
    Reduction red(mhat, q0 + 2, k_lo);
    for (int iter = 0; iter < budget; ++iter) {
        int failing = INT_MAX;
        Pencil fp;
        for (int ell : ells) {
            Pencil p = pencil_at(red.mhat, ell);
            if (p.det_pencil.is_zero()) {
                failing = ell;
                fp = std::move(p);
                break;
            }
        }
        if (failing == INT_MAX) return red;
        if (red.move_dependency(failing)) continue;
        if (red.move_kernel_shear(fp, true)) continue;
        if (red.move_column_shear()) continue;
        if (red.move_kernel_shear(fp, false)) continue;
        throw budget_error("reduction stalled: no applicable move");
    }
    throw budget_error("reduction iteration budget exceeded");
}

std::vector<Warning> nonrational_root_warnings(const UPoly& e, const std::string& where) {
    std::vector<Warning> w;
    UPoly p = e;
    // strip the lambda^k part; only nonzero roots matter for completeness
    int k = 0;
    while (!p.is_zero() && p.coeff(0) == 0 && p.deg() > 0) {
        std::vector<BigRat> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = UPoly(std::move(c));
        ++k;
    }
    if (p.is_constant()) return w;
    RationalRoots rr = rational_roots(p);
    if (rr.nonrational_degree > 0)
        w.push_back(Warning{"nonrational-roots",
                            where + " has a nonrational factor of degree " +
                                std::to_string(rr.nonrational_degree) +
                                "; solutions with constants outside Q are not reported"});
    return w;
}

}  // namespace

SimpleFormData s_simple_data(const MatRF& mhat, int s) {
    if (!mhat.is_square()) throw std::invalid_argument("s_simple_data: non-square matrix");
    auto o = ord_inf(mhat);
    const int q = o ? -*o : 0;
    if (s < 1 || s > q) throw std::invalid_argument("s_simple_data: s out of range");
    Pencil p = pencil_at(mhat, -s);
    return SimpleFormData{s, std::move(p.d0), std::move(p.n0), std::move(p.det_pencil)};
}

std::pair<GaugeResult, std::vector<SimpleFormData>> super_reduce(const MatRF& mhat) {
    auto o = ord_inf(mhat);
    const int q = (o && *o < 0) ? -*o : 0;
    std::vector<int> ells;
    for (int s = q; s >= 1; --s) ells.push_back(-s);
    Reduction red = reduce_levels(mhat, ells, -2, 500);
    GaugeResult g;
    g.t = red.t;
    g.tinv = red.tinv;
    g.nhat = red.mhat;
    auto ot = ord_inf(red.t);
    g.ord_t = ot ? *ot : 0;
    std::vector<SimpleFormData> data;
    for (int s = 1; s <= q; ++s) {
        // reduction may have lowered the pole order below the input's q;
        // levels above it are trivially simple but still reported
        Pencil p = pencil_at(red.mhat, -s);
        data.push_back(SimpleFormData{s, std::move(p.d0), std::move(p.n0), std::move(p.det_pencil)});
    }
    return {std::move(g), std::move(data)};
}

ScPairs sc_pairs(const MatRF& m) {
    if (!m.is_square()) throw std::invalid_argument("sc_pairs: non-square matrix");
    ScPairs out;
    MatRF minv = mat_inverse(m);  // throws singular_matrix_error when M is not invertible
    auto oinv = ord_inf(minv);
    int p = 0;
    MatRF work = m;
    if (*oinv <= 0) {
        p = -*oinv + 1;
        const RatFunc xp = RatFunc(UPoly::x().pow(static_cast<unsigned>(p)));
        for (int i = 0; i < work.rows(); ++i)
            for (int j = 0; j < work.cols(); ++j) work(i, j) = work(i, j) * xp;
    }
    MatRF mhat = work - MatRF::identity(work.rows());
    auto [gauge, data] = super_reduce(mhat);
    (void)gauge;
    for (const auto& sd : data) {
        auto w = nonrational_root_warnings(sd.es, "E_" + std::to_string(sd.s));
        out.warnings.insert(out.warnings.end(), w.begin(), w.end());
        for (const auto& [root, mult] : rational_roots(sd.es).roots) {
            (void)mult;
            if (root != 0) out.pairs.insert({sd.s - p, root});
        }
    }
    return out;
}

IndicialData zero_simple_indicial(const MatRF& mhat_sc) {
    const int n = mhat_sc.rows();
    Reduction red = reduce_levels(mhat_sc, {+1}, -2, 500);
    Pencil p = pencil_at(red.mhat, +1);
    // E_0(lambda) = det(lambda D0 - N0) = (-1)^n det(N0 - lambda D0)
    UPoly e0 = (n % 2 == 1) ? -p.det_pencil : p.det_pencil;
    IndicialData out;
    out.e0 = std::move(e0);
    auto oti = ord_inf(red.tinv);
    auto ot = ord_inf(red.t);
    out.ord_t = oti ? *oti : 0;
    out.ord_t_hi = ot ? -*ot : 0;
    out.warnings = nonrational_root_warnings(out.e0, "E_0");
    return out;
}

bool has_formal_solution(const MatRF& m, const GenExp& g, int terms) {
    const int n = m.rows();
    const int N = std::max(terms, 1);
    auto om = ord_inf(m);
    const int v0 = std::min(-g.s, om ? *om : 0);
    const int levels = N + 1;
    // unknowns F_k[e], k = 0..N, e = 0..n-1; equations at rows i, levels j
    MatQ sys(n * levels, n * levels);
    auto unk = [&](int k, int e) { return k * n + e; };
    auto eqn = [&](int lvl, int i) { return lvl * n + i; };
    for (int k = 0; k <= N; ++k) {
        // tau-side: c * t^{k-s} (1+t)^{d-k} F_k[e] lands on row e
        for (int lvl = 0; lvl < levels; ++lvl) {
            const int j = v0 + lvl;
            const int rel = j - (k - g.s);
            if (rel < 0) continue;
            const BigRat coef = g.c * rat_binomial(g.d - BigRat(k), static_cast<unsigned long>(rel));
            if (coef == 0) continue;
            for (int e = 0; e < n; ++e) sys(eqn(lvl, e), unk(k, e)) += coef;
        }
        // matrix side: -(M[i][e]) t^k F_k[e]
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < n; ++e) {
                const RatFunc& entry = m(i, e);
                if (entry.is_zero()) continue;
                for (int lvl = 0; lvl < levels; ++lvl) {
                    const int j = v0 + lvl;
                    sys(eqn(lvl, i), unk(k, e)) -= coeff_at_infinity(entry, j - k);
                }
            }
    }
    auto null = nullspace_q(sys);
    for (const auto& v : null)
        for (int e = 0; e < n; ++e)
            if (v[static_cast<size_t>(unk(0, e))] != 0) return true;
    return false;
}

GenExpSet unramified_gen_exps(const MatRF& m) {
    GenExpSet out;
    ScPairs sc = sc_pairs(m);
    out.warnings = sc.warnings;
    const int n = m.rows();
    std::vector<std::pair<int, BigRat>> pairs(sc.pairs.begin(), sc.pairs.end());

    struct PairResult {
        std::set<GenExp> exps;
        std::vector<Warning> warnings;
    };
    // the per-(s,c) searches are independent; merging by index keeps the
    // canonical (s, c, d) order deterministic
    std::vector<PairResult> results = parallel_map<PairResult>(static_cast<int>(pairs.size()), [&](int idx) {
        const auto& [s, c] = pairs[static_cast<size_t>(idx)];
        PairResult res;
        MatRF mhat_sc = m;
        const RatFunc scale = RatFunc(BigRat(1) / c) * t_power(s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mhat_sc(i, j) = mhat_sc(i, j) * scale;
        mhat_sc = mhat_sc - MatRF::identity(n);
        IndicialData ind = zero_simple_indicial(mhat_sc);
        res.warnings = ind.warnings;
        std::set<BigRat> roots;
        for (const auto& [root, mult] : rational_roots(ind.e0).roots) {
            (void)mult;
            roots.insert(root);
        }
        const int spread = std::max(0, ind.ord_t_hi - ind.ord_t);
        const int terms = n + std::abs(s) + spread + 6;
        for (const auto& r : roots) {
            for (int shift = ind.ord_t; shift <= ind.ord_t_hi; ++shift) {
                GenExp g{s, c, r + BigRat(shift)};
                if (has_formal_solution(m, g, terms)) res.exps.insert(g);
            }
        }
        return res;
    });
    for (const auto& res : results) {
        out.exps.insert(res.exps.begin(), res.exps.end());
        out.warnings.insert(out.warnings.end(), res.warnings.begin(), res.warnings.end());
    }
    return out;
}

OrePoly cyclic_vector_operator(const MatRF& m) {
    const int n = m.rows();
    unsigned long seed = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        // candidate cyclic row vector: e_1 first, then small polynomial entries
        std::vector<RatFunc> v(static_cast<size_t>(n));
        if (attempt == 0) {
            v[0] = RatFunc(1);
        } else {
            for (int j = 0; j < n; ++j) {
                seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                long c0 = static_cast<long>((seed >> 33) % 5) - 2;
                seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
                long c1 = static_cast<long>((seed >> 33) % 3) - 1;
                v[static_cast<size_t>(j)] = RatFunc(UPoly::x() * BigRat(c1) + UPoly(c0));
            }
        }
        std::vector<std::vector<RatFunc>> rows;
        rows.push_back(v);
        for (int k = 1; k <= n; ++k) {
            std::vector<RatFunc> nxt(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                RatFunc acc;
                for (int i = 0; i < n; ++i) acc += rows.back()[static_cast<size_t>(i)].tau(1) * m(i, j);
                nxt[static_cast<size_t>(j)] = acc;
            }
            rows.push_back(std::move(nxt));
        }
        MatRF vmat(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vmat(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        MatRF vinv;
        try {
            vinv = mat_inverse(vmat);
        } catch (const singular_matrix_error&) {
            continue;
        }
        // v_n = c * V  =>  c = v_n * V^{-1}; L = tau^n - sum c_k tau^k
        std::vector<RatFunc> coeffs(static_cast<size_t>(n) + 1);
        for (int k = 0; k < n; ++k) {
            RatFunc acc;
            for (int j = 0; j < n; ++j) acc += rows[static_cast<size_t>(n)][static_cast<size_t>(j)] * vinv(j, k);
            coeffs[static_cast<size_t>(k)] = -acc;
        }
        coeffs[static_cast<size_t>(n)] = RatFunc(1);
        return OrePoly(std::move(coeffs));
    }
    throw hd_error("cyclic_vector_operator: no cyclic vector found");
}

GenExpSet operator_gen_exps(const OrePoly& l) {
    if (l.is_zero()) throw std::invalid_argument("operator_gen_exps: zero operator");
    GenExpSet out;
    const int n = l.order();
    std::vector<std::pair<int, int>> pts;  // (i, v(a_i))
    for (int i = 0; i <= n; ++i)
        if (!l.coeff(i).is_zero()) pts.emplace_back(i, l.coeff(i).ord_inf());
    // lower convex hull over increasing i
    std::vector<std::pair<int, int>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b if it lies on or above segment a-p
            long lhs = static_cast<long>(b.second - a.second) * (p.first - a.first);
            long rhs = static_cast<long>(p.second - a.second) * (b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        const auto [i1, v1] = hull[e];
        const auto [i2, v2] = hull[e + 1];
        if ((v2 - v1) % (i2 - i1) != 0) continue;  // ramified slope
        const int s = (v2 - v1) / (i2 - i1);
        // Newton polynomial: all points on the supporting line v = v1 + s (i - i1)
        UPoly np;
        for (const auto& [i, v] : pts)
            if (v == v1 + s * (i - i1)) np += UPoly::monomial(l.coeff(i).lc_inf(), i - i1);
        RationalRoots rr = rational_roots(np);
        if (rr.nonrational_degree > 0)
            out.warnings.push_back(Warning{"nonrational-roots",
                                           "Newton polynomial at slope " + std::to_string(s) +
                                               " has a nonrational factor of degree " +
                                               std::to_string(rr.nonrational_degree)});
        for (const auto& [c, mult] : rr.roots) {
            (void)mult;
            if (c == 0) continue;
            // substitute y -> Gamma(x)^s c^x y and convert to delta-form
            std::vector<RatFunc> as(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                RatFunc ai = l.coeff(i);
                if (ai.is_zero()) continue;
                UPoly prod(1);
                for (int j = 0; j < i; ++j) prod *= (UPoly::x() + UPoly(j));
                RatFunc gam = s >= 0 ? RatFunc(prod.pow(static_cast<unsigned>(s)))
                                     : RatFunc(UPoly(1), prod.pow(static_cast<unsigned>(-s)));
                as[static_cast<size_t>(i)] = ai * rat_pow(c, i) * gam;
            }
            // b_k = sum_i C(i,k) a'_i  (tau = 1 + delta)
            std::vector<RatFunc> bs(static_cast<size_t>(n) + 1);
            for (int k = 0; k <= n; ++k) {
                RatFunc acc;
                for (int i = k; i <= n; ++i) {
                    if (as[static_cast<size_t>(i)].is_zero()) continue;
                    acc += as[static_cast<size_t>(i)] *
                           RatFunc(BigRat(int_binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k))));
                }
                bs[static_cast<size_t>(k)] = acc;
            }
            // indicial polynomial at the slope-0 edge of the delta polygon
            int mu = INT_MAX;
            for (int k = 0; k <= n; ++k)
                if (!bs[static_cast<size_t>(k)].is_zero()) mu = std::min(mu, bs[static_cast<size_t>(k)].ord_inf() + k);
            if (mu == INT_MAX) continue;
            // E(d) = sum_{k: v(b_k)+k = mu} lc(b_k) * d(d-1)...(d-k+1)
            UPoly ind;
            for (int k = 0; k <= n; ++k) {
                const RatFunc& b = bs[static_cast<size_t>(k)];
                if (b.is_zero() || b.ord_inf() + k != mu) continue;
                UPoly fall(1);
                for (int j = 0; j < k; ++j) fall *= (UPoly::x() - UPoly(j));
                ind += fall * b.lc_inf();
            }
            RationalRoots dr = rational_roots(ind);
            if (dr.nonrational_degree > 0)
                out.warnings.push_back(Warning{"nonrational-roots",
                                               "indicial polynomial at (s,c) has a nonrational factor of degree " +
                                                   std::to_string(dr.nonrational_degree)});
            for (const auto& [d, dm] : dr.roots) {
                (void)dm;
                out.exps.insert(GenExp{s, c, d});
            }
        }
    }
    return out;
}

}  // namespace hyperdelta
