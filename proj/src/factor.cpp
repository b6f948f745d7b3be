#include "hyperdelta/factor.hpp"

#include <algorithm>
#include <cstdint>

namespace hyperdelta {

UPoly Factorization::expand() const {
    UPoly r(unit);
    for (const auto& [f, e] : factors) r *= f.pow(static_cast<unsigned>(e));
    return r;
}

std::vector<std::pair<UPoly, int>> squarefree_factor(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_factor: zero input");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = p.monic();
    if (f.is_constant()) return out;
    // Yun's algorithm
    UPoly d = f.derivative();
    UPoly a = poly_gcd(f, d);
    UPoly b = poly_exact_div(f, a);
    UPoly c = poly_exact_div(d, a);
    int i = 1;
    while (true) {
        UPoly w = c - b.derivative();
        if (w.is_zero()) {
            if (!b.is_constant()) out.emplace_back(b.monic(), i);
            break;
        }
        UPoly g = poly_gcd(b, w);
        if (!g.is_constant()) out.emplace_back(g.monic(), i);
        b = poly_exact_div(b, g);
        c = poly_exact_div(w, g);
        ++i;
        if (b.is_constant()) break;
    }
    return out;
}

namespace {

// ---- arithmetic in F_p[x] for a small prime p (dense, uint64 coefficients) ----

using ZPoly = std::vector<uint64_t>;

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    zp_trim(r);
    return r;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    zp_trim(a);
    return a;
}

// a mod b, b monic-normalized internally
ZPoly zp_rem(ZPoly a, const ZPoly& b, uint64_t p) {
    const size_t db = b.size() - 1;
    const uint64_t inv = mod_inv(b.back(), p);
    while (a.size() > db) {
        uint64_t c = mulmod(a.back(), inv, p);
        if (c != 0) {
            size_t off = a.size() - 1 - db;
            for (size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - mulmod(c, b[j], p)) % p;
        }
        a.pop_back();
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly zp_monic(ZPoly a, uint64_t p) {
    if (a.empty()) return a;
    uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

// a = q*b + r in F_p[x]
std::pair<ZPoly, ZPoly> zp_divmod(ZPoly a, const ZPoly& b, uint64_t p) {
    const size_t db = b.size() - 1;
    if (a.size() <= db) return {ZPoly{}, std::move(a)};
    const uint64_t inv = mod_inv(b.back(), p);
    ZPoly q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        uint64_t c = mulmod(a[i], inv, p);
        if (c == 0) continue;
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
    }
    zp_trim(a);
    zp_trim(q);
    return {std::move(q), std::move(a)};
}

ZPoly zp_gcd(ZPoly a, ZPoly b, uint64_t p) {
    while (!b.empty()) {
        ZPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

ZPoly zp_deriv(const ZPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    zp_trim(r);
    return r;
}

ZPoly zp_powmod_x(uint64_t e, const ZPoly& f, uint64_t p) {
    // x^e mod f
    ZPoly base = {0, 1}, acc = {1};
    base = zp_rem(base, f, p);
    while (e) {
        if (e & 1) acc = zp_rem(zp_mul(acc, base, p), f, p);
        base = zp_rem(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Berlekamp factorization of a monic squarefree polynomial mod p
std::vector<ZPoly> berlekamp(const ZPoly& f, uint64_t p) {
    const size_t n = f.size() - 1;
    if (n <= 1) return {f};
    // Q matrix: column i = x^(i*p) mod f
    std::vector<ZPoly> cols(n);
    ZPoly xp = zp_powmod_x(p, f, p);
    ZPoly cur = {1};
    for (size_t i = 0; i < n; ++i) {
        cols[i] = cur;
        cur = zp_rem(zp_mul(cur, xp, p), f, p);
    }
    // nullspace of (Q - I) over F_p
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
        m[j][j] = (m[j][j] + p - 1) % p;
    }
    // Gauss
    std::vector<int> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        uint64_t inv = mod_inv(m[rank][c], p);
        for (size_t j = 0; j < n; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            uint64_t fct = m[i][c];
            for (size_t j = 0; j < n; ++j) m[i][j] = (m[i][j] + p - mulmod(fct, m[rank][j], p)) % p;
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<ZPoly> basis;
    for (size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        ZPoly v(n, 0);
        v[c] = 1;
        for (size_t cc = 0; cc < n; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = (p - m[static_cast<size_t>(pivot_of_col[cc])][c]) % p;
        zp_trim(v);
        basis.push_back(std::move(v));
    }
    const size_t r = basis.size();
    std::vector<ZPoly> factors = {f};
    if (r == 1) return factors;
    for (const ZPoly& v : basis) {
        if (factors.size() == r) break;
        if (v.size() <= 1) continue;  // skip the constant vector
        std::vector<ZPoly> next;
        for (const ZPoly& g : factors) {
            if (g.size() - 1 <= 1) {
                next.push_back(g);
                continue;
            }
            ZPoly rem = g;
            for (uint64_t s = 0; s < p && rem.size() > 1; ++s) {
                ZPoly shifted = v;
                if (shifted.empty()) shifted = {0};
                shifted[0] = (shifted[0] + p - s) % p;
                zp_trim(shifted);
                ZPoly d = shifted.empty() ? ZPoly{} : zp_gcd(rem, shifted, p);
                if (d.size() > 1 && d.size() < rem.size()) {
                    next.push_back(d);
                    rem = zp_divmod(rem, d, p).first;
                }
            }
            if (rem.size() > 1) next.push_back(rem);
        }
        factors = std::move(next);
    }
    for (auto& g : factors) g = zp_monic(g, p);
    return factors;
}

// ---- Zassenhaus over Z for monic squarefree input ----

struct ZXPoly {
    std::vector<BigInt> c;  // dense over Z
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

ZXPoly zx_mul(const ZXPoly& a, const ZXPoly& b) {
    ZXPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

// symmetric remainder in (-m/2, m/2]
BigInt sym_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

// monic exact division test over Z; returns quotient when it divides
bool zx_try_div(const ZXPoly& f, const ZXPoly& g, ZXPoly& q_out) {
    if (g.c.empty() || g.c.back() != 1) throw std::invalid_argument("zx_try_div: divisor must be monic");
    std::vector<BigInt> rem = f.c;
    const int dg = g.deg();
    if (f.deg() < dg) return false;
    std::vector<BigInt> q(static_cast<size_t>(f.deg() - dg) + 1, BigInt(0));
    for (int i = f.deg(); i >= dg; --i) {
        BigInt c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) rem[static_cast<size_t>(i - dg + j)] -= c * g.c[static_cast<size_t>(j)];
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    q_out.c = std::move(q);
    return true;
}

// Hensel lift of a monic modular factorization to modulus p^K
std::vector<ZXPoly> hensel_lift(const ZXPoly& f, std::vector<ZPoly> gs, uint64_t p, int K) {
    const size_t r = gs.size();
    // Bezout data mod p: sigma_i = (prod_{j != i} g_j)^{-1} mod g_i
    std::vector<ZPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        ZPoly h = {1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) h = zp_rem(zp_mul(h, gs[j], p), gs[i], p);
        // invert h mod g_i via extended Euclid in F_p[x]
        ZPoly a = gs[i], b = h;
        ZPoly s0 = {}, s1 = {1};  // coefficients tracking b
        while (!b.empty()) {
            auto [q, rr] = zp_divmod(a, b, p);
            ZPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
            a = std::move(b);
            b = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // a = gcd = constant (g_i irreducible, h coprime); normalize
        if (a.size() != 1) throw hd_error("hensel_lift: unexpected gcd");
        uint64_t inv = mod_inv(a[0], p);
        for (auto& cc : s0) cc = mulmod(cc, inv, p);
        sigma[i] = s0;
    }

    BigInt pk(static_cast<unsigned long>(p));
    std::vector<ZXPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i].c.assign(gs[i].size(), BigInt(0));
        for (size_t j = 0; j < gs[i].size(); ++j) lifted[i].c[j] = BigInt(static_cast<unsigned long>(gs[i][j]));
    }
    for (int step = 1; step < K; ++step) {
        // e = (f - prod lifted) / p^step mod p
        ZXPoly prod;
        prod.c = {BigInt(1)};
        for (const auto& g : lifted) prod = zx_mul(prod, g);
        std::vector<BigInt> diff(f.c.size(), BigInt(0));
        for (size_t i = 0; i < f.c.size(); ++i) {
            BigInt pv = i < prod.c.size() ? prod.c[i] : BigInt(0);
            diff[i] = f.c[i] - pv;
        }
        ZPoly e;
        e.assign(diff.size(), 0);
        bool all_zero = true;
        for (size_t i = 0; i < diff.size(); ++i) {
            BigInt q = diff[i] / pk;  // exact by construction
            BigInt rm;
            mpz_mod(rm.get_mpz_t(), q.get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t());
            e[i] = rm.get_ui();
            if (e[i] != 0) all_zero = false;
        }
        zp_trim(e);
        if (!all_zero) {
            for (size_t i = 0; i < r; ++i) {
                ZPoly delta = zp_rem(zp_mul(sigma[i], e, p), gs[i], p);
                for (size_t j = 0; j < delta.size(); ++j)
                    lifted[i].c[j] += pk * BigInt(static_cast<unsigned long>(delta[j]));
            }
        }
        pk *= static_cast<unsigned long>(p);
    }
    // reduce into symmetric range mod p^K
    for (auto& g : lifted)
        for (auto& cc : g.c) cc = sym_mod(cc, pk);
    return lifted;
}

// factor a monic squarefree integer polynomial into monic irreducibles over Z
std::vector<ZXPoly> zassenhaus_monic(const ZXPoly& f) {
    if (f.deg() <= 1) return {f};
    // choose a prime where f stays squarefree
    static const uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                      59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
    uint64_t p = 0;
    ZPoly fbar;
    for (uint64_t cand : primes) {
        fbar.assign(f.c.size(), 0);
        for (size_t i = 0; i < f.c.size(); ++i) {
            BigInt rm;
            mpz_mod(rm.get_mpz_t(), f.c[i].get_mpz_t(), BigInt(static_cast<unsigned long>(cand)).get_mpz_t());
            fbar[i] = rm.get_ui();
        }
        zp_trim(fbar);
        if (fbar.size() != f.c.size()) continue;  // leading coeff vanished (cannot happen: monic)
        ZPoly d = zp_deriv(fbar, cand);
        if (d.empty()) continue;
        ZPoly g = zp_gcd(fbar, d, cand);
        if (g.size() == 1) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw hd_error("zassenhaus: no suitable small prime found");

    std::vector<ZPoly> mod_factors = berlekamp(zp_monic(fbar, p), p);
    if (mod_factors.size() == 1) return {f};

    // Mignotte-style bound: |coeff of any monic factor| <= 2^deg(f) * ||f||_2
    BigInt norm2sq(0);
    for (const auto& c : f.c) norm2sq += c * c;
    BigInt bound(1);
    mpz_sqrt(bound.get_mpz_t(), norm2sq.get_mpz_t());
    bound += 1;
    bound <<= static_cast<unsigned>(f.deg());
    BigInt need = bound * 2 + 1;
    int K = 1;
    BigInt pk(static_cast<unsigned long>(p));
    while (pk < need) {
        pk *= static_cast<unsigned long>(p);
        ++K;
    }

    std::vector<ZXPoly> lifted = hensel_lift(f, mod_factors, p, K);

    // subset recombination
    std::vector<ZXPoly> out;
    ZXPoly rem_poly = f;
    std::vector<int> idx(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) idx[i] = static_cast<int>(i);

    auto product_mod = [&](const std::vector<int>& sel) {
        ZXPoly prod;
        prod.c = {BigInt(1)};
        for (int i : sel) prod = zx_mul(prod, lifted[static_cast<size_t>(i)]);
        for (auto& cc : prod.c) cc = sym_mod(cc, pk);
        return prod;
    };

    size_t card = 1;
    while (2 * card <= idx.size()) {
        bool found = false;
        std::vector<int> sel(card);
        // iterate subsets of the current index list of size `card`
        std::vector<size_t> pos(card);
        for (size_t i = 0; i < card; ++i) pos[i] = i;
        while (true) {
            for (size_t i = 0; i < card; ++i) sel[i] = idx[pos[i]];
            ZXPoly g = product_mod(sel);
            ZXPoly q;
            if (g.c.back() == 1 && zx_try_div(rem_poly, g, q)) {
                out.push_back(g);
                rem_poly = q;
                std::vector<int> nidx;
                for (size_t i = 0, s = 0; i < idx.size(); ++i) {
                    if (s < card && pos[s] == i) {
                        ++s;
                        continue;
                    }
                    nidx.push_back(idx[i]);
                }
                idx = std::move(nidx);
                found = true;
                break;
            }
            // next combination
            size_t i = card;
            while (i-- > 0) {
                if (pos[i] + (card - i) < idx.size()) {
                    ++pos[i];
                    for (size_t j = i + 1; j < card; ++j) pos[j] = pos[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++card;
    }
    if (rem_poly.deg() > 0) out.push_back(rem_poly);
    return out;
}

}  // namespace

Factorization factor_q(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_q: zero input");
    Factorization out;
    out.unit = p.lc();
    if (p.is_constant()) return out;

    for (const auto& [part, mult] : squarefree_factor(p)) {
        // clear denominators, then monicize: F(y) = a^(d-1) * f(y/a) is monic over Z
        BigInt denlcm(1);
        for (const auto& c : part.coeffs()) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
            denlcm = l;
        }
        const int d = part.deg();
        std::vector<BigInt> zc(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) {
            BigRat c = part.coeff(i) * BigRat(denlcm);
            zc[static_cast<size_t>(i)] = c.get_num();
        }
        BigInt g(0);
        for (const auto& c : zc) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        for (auto& c : zc) c /= g;
        BigInt a = zc.back();
        if (a < 0)
            for (auto& c : zc) c = -c;
        a = zc.back();
        ZXPoly F;
        F.c.assign(static_cast<size_t>(d) + 1, BigInt(0));
        // monicize: F(y) = a^(d-1) f(y/a), i.e. F_i = f_i * a^(d-1-i), F_d = 1
        F.c[static_cast<size_t>(d)] = 1;
        BigInt apow(1);
        for (int i = d - 1; i >= 0; --i) {
            F.c[static_cast<size_t>(i)] = zc[static_cast<size_t>(i)] * apow;
            apow *= a;
        }
        for (const auto& G : zassenhaus_monic(F)) {
            // map back: factor of f is G(a*x), normalized monic over Q
            std::vector<BigRat> qc(G.c.size());
            BigRat ap(1);
            for (size_t i = 0; i < G.c.size(); ++i) {
                qc[i] = BigRat(G.c[i]) * ap;
                ap *= BigRat(a);
            }
            UPoly fac = UPoly(std::move(qc)).monic();
            out.factors.emplace_back(fac, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

RationalRoots rational_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero input");
    RationalRoots rr;
    for (const auto& [f, e] : factor_q(p).factors) {
        if (f.deg() == 1) {
            rr.roots[-f.coeff(0)] += e;
        } else {
            rr.nonrational_degree += f.deg() * e;
        }
    }
    return rr;
}

}  // namespace hyperdelta
