#include "hyperdelta/solver.hpp"

#include <algorithm>
#include <map>

#include "hyperdelta/threads.hpp"

namespace hyperdelta {

namespace {

Candidate candidate_from_ratio(const RatFunc& r) {
    if (r.is_zero()) throw std::invalid_argument("candidate_from_ratio: zero");
    const BigRat c = r.num().lc() / r.den().lc();
    return Candidate(c, r.num().monic(), r.den().monic());
}

int deg_or_zero(const UPoly& p) { return p.is_constant() ? 0 : p.deg(); }

int candidate_slope(const Candidate& cand) { return deg_or_zero(cand.a) - deg_or_zero(cand.b); }

void sort_candidates(std::vector<Candidate>& v) {
    std::sort(v.begin(), v.end(), [](const Candidate& x, const Candidate& y) {
        const int sx = candidate_slope(x), sy = candidate_slope(y);
        if (sx != sy) return sx < sy;
        if (x.c != y.c) return x.c < y.c;
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    });
}

void sort_solutions(std::vector<HyperSol>& v) {
    std::stable_sort(v.begin(), v.end(), [](const HyperSol& x, const HyperSol& y) {
        const int sx = candidate_slope(x.lambda), sy = candidate_slope(y.lambda);
        if (sx != sy) return sx < sy;
        if (x.lambda.c != y.lambda.c) return x.lambda.c < y.lambda.c;
        if (!(x.lambda.a == y.lambda.a)) return x.lambda.a < y.lambda.a;
        return x.lambda.b < y.lambda.b;
    });
}

// rational-content normalization: integer coefficients with gcd 1 and the
// first nonzero entry having positive leading coefficient
void normalize_poly_vector(std::vector<UPoly>& p) {
    BigRat content(0);
    for (const auto& e : p)
        if (!e.is_zero()) content = rat_gcd(content, poly_content(e));
    if (content == 0) return;
    for (const auto& e : p) {
        if (!e.is_zero()) {
            if (e.lc() < 0) content = -content;
            break;
        }
    }
    const BigRat inv = BigRat(1) / content;
    for (auto& e : p) e *= inv;
}

}  // namespace

CandidateSet candidate_set_v1(const MatRF& m) {
    CandidateSet out;
    out.provenance = CandidateProvenance::V1;
    const UPoly d1 = denom_matrix(m);
    const UPoly d2 = denom_matrix(mat_inverse(m));
    // per irreducible factor: exponent range [-e, f]
    std::map<UPoly, std::pair<int, int>> range;  // poly -> (den mult e, num mult f)
    if (!d1.is_constant())
        for (const auto& [f, e] : factor_q(d1).factors) range[f].first += e;
    if (!d2.is_constant())
        for (const auto& [f, e] : factor_q(d2).factors) range[f].second += e;

    std::vector<std::pair<UPoly, std::pair<int, int>>> fac(range.begin(), range.end());
    std::vector<int> exp(fac.size());
    for (size_t i = 0; i < fac.size(); ++i) exp[i] = -fac[i].second.first;
    while (true) {
        UPoly a(1), b(1);
        for (size_t i = 0; i < fac.size(); ++i) {
            if (exp[i] > 0) a *= fac[i].first.pow(static_cast<unsigned>(exp[i]));
            if (exp[i] < 0) b *= fac[i].first.pow(static_cast<unsigned>(-exp[i]));
        }
        out.members.push_back(Candidate(BigRat(1), a, b));
        size_t i = 0;
        for (; i < fac.size(); ++i) {
            if (exp[i] < fac[i].second.second) {
                ++exp[i];
                for (size_t j = 0; j < i; ++j) exp[j] = -fac[j].second.first;
                break;
            }
        }
        if (i == fac.size()) break;
    }
    sort_candidates(out.members);
    return out;
}

std::vector<ClassBound> local_type_bounds(const MatRF& m, int level) {
    if (level != 1 && level != 2) throw std::invalid_argument("local_type_bounds: level must be 1 or 2");
    const UPoly d1 = denom_matrix(m);
    const UPoly d2 = denom_matrix(mat_inverse(m));

    auto class_sums = [](const UPoly& d) {
        std::map<UPoly, int> g;
        if (!d.is_constant())
            for (const auto& [f, e] : factor_q(d).factors) g[canonical_shift_rep(f).first] += e;
        return g;
    };
    std::map<UPoly, int> g1 = class_sums(d1), g2 = class_sums(d2);

    std::map<UPoly, ClassBound> bounds;
    for (const auto& [rep, g] : g1) {
        bounds.try_emplace(rep, ClassBound{rep, 0, 0});
        bounds[rep].lo = -g;
    }
    for (const auto& [rep, g] : g2) {
        bounds.try_emplace(rep, ClassBound{rep, 0, 0});
        bounds[rep].hi = g;
    }
    if (level == 2) {
        const MatRF m2 = tau_mat(m) * m;
        std::map<UPoly, int> h1 = class_sums(denom_matrix(m2));
        std::map<UPoly, int> h2 = class_sums(denom_matrix(mat_inverse(m2)));
        for (auto& [rep, b] : bounds) {
            const int a1 = h1.count(rep) ? h1[rep] : 0;
            const int a2 = h2.count(rep) ? h2[rep] : 0;
            // -g_p(denom(M2)) <= 2 g_p(lambda) <= g_p(denom(M2^{-1}))
            b.lo = std::max(b.lo, -(a1 / 2));
            b.hi = std::min(b.hi, a2 / 2);
        }
    }
    std::vector<ClassBound> out;
    for (auto& [rep, b] : bounds) out.push_back(std::move(b));
    return out;
}

CandidateSet candidate_set_v2(const MatRF& m, int level) {
    CandidateSet out;
    out.provenance = CandidateProvenance::V2;
    std::vector<ClassBound> bounds = local_type_bounds(m, level);
    std::vector<int> g(bounds.size());
    for (size_t i = 0; i < bounds.size(); ++i) g[i] = bounds[i].lo;
    while (true) {
        UPoly a(1), b(1);
        for (size_t i = 0; i < bounds.size(); ++i) {
            if (g[i] > 0) a *= bounds[i].canonical.pow(static_cast<unsigned>(g[i]));
            if (g[i] < 0) b *= bounds[i].canonical.pow(static_cast<unsigned>(-g[i]));
        }
        out.members.push_back(Candidate(BigRat(1), a, b));
        size_t i = 0;
        for (; i < bounds.size(); ++i) {
            if (g[i] < bounds[i].hi) {
                ++g[i];
                for (size_t j = 0; j < i; ++j) g[j] = bounds[j].lo;
                break;
            }
        }
        if (i == bounds.size()) break;
    }
    sort_candidates(out.members);
    return out;
}

std::vector<Candidate> match_gen_exps(const CandidateSet& s, const std::set<GenExp>& g, MatchMode mode) {
    std::vector<Candidate> out;
    for (const Candidate& cand : s.members) {
        const int slope = candidate_slope(cand);
        const BigRat sl = slc(cand);
        for (const GenExp& e : g) {
            if (e.s != slope) continue;
            const BigRat diff = e.d - sl;
            if (!is_integer(diff)) continue;
            if (mode == MatchMode::Strong && diff < 0) continue;
            Candidate matched(e.c, cand.a, cand.b);
            if (std::find(out.begin(), out.end(), matched) == out.end()) out.push_back(matched);
        }
    }
    sort_candidates(out);
    return out;
}

int degree_bound(const Candidate& cand, const std::set<GenExp>& g) {
    const int slope = candidate_slope(cand);
    const BigRat sl = slc(cand);
    bool found = false;
    long best = 0;
    for (const GenExp& e : g) {
        if (e.s != slope || e.c != cand.c) continue;
        const BigRat diff = e.d - sl;
        if (!is_integer(diff)) continue;
        const long v = diff.get_num().get_si();
        if (!found || v > best) best = v;
        found = true;
    }
    if (!found) throw std::invalid_argument("degree_bound: no compatible generalized exponent");
    return static_cast<int>(best);
}

std::vector<std::vector<UPoly>> poly_solutions(const MatRF& m, const Candidate& lambda, int deg_cap) {
    if (deg_cap < 0) throw std::invalid_argument("poly_solutions: negative degree bound");
    const int n = m.rows();
    const UPoly d1 = denom_matrix(m);
    MatP w(n, n);
    int wdeg = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& e = m(i, j);
            if (e.is_zero()) continue;
            w(i, j) = e.num() * poly_exact_div(d1, e.den());
            wdeg = std::max(wdeg, w(i, j).deg());
        }
    // c A d1 tau(P) = B W P, coefficientwise in x
    const UPoly lhs_mul = (lambda.a * lambda.c) * d1;
    const int jmax = std::max(deg_or_zero(lhs_mul) + deg_cap, deg_or_zero(lambda.b) + wdeg + deg_cap);
    const int nuk = n * (deg_cap + 1);
    MatQ sys((jmax + 1) * n, nuk);
    auto unk = [&](int k, int e) { return k * n + e; };
    // precompute lhs_mul * (x+1)^k and B * W[i][e]
    for (int k = 0; k <= deg_cap; ++k) {
        const UPoly xk = tau_poly(UPoly::monomial(BigRat(1), k), 1);  // (x+1)^k
        const UPoly shifted = lhs_mul * xk;
        for (int j = 0; j <= jmax; ++j) {
            const BigRat c = shifted.coeff(j);
            if (c == 0) continue;
            for (int e = 0; e < n; ++e) sys(j * n + e, unk(k, e)) += c;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < n; ++e) {
            if (w(i, e).is_zero()) continue;
            const UPoly bw = lambda.b * w(i, e);
            for (int k = 0; k <= deg_cap; ++k)
                for (int j = 0; j <= jmax; ++j) {
                    if (j < k) continue;
                    const BigRat c = bw.coeff(j - k);
                    if (c == 0) continue;
                    sys(j * n + i, unk(k, e)) -= c;
                }
        }
    std::vector<std::vector<UPoly>> out;
    for (const auto& v : nullspace_q(sys)) {
        std::vector<UPoly> p(static_cast<size_t>(n));
        for (int e = 0; e < n; ++e) {
            std::vector<BigRat> coeffs(static_cast<size_t>(deg_cap) + 1);
            for (int k = 0; k <= deg_cap; ++k) coeffs[static_cast<size_t>(k)] = v[static_cast<size_t>(unk(k, e))];
            p[static_cast<size_t>(e)] = UPoly(std::move(coeffs));
        }
        normalize_poly_vector(p);
        out.push_back(std::move(p));
    }
    return out;
}

bool verify_solution(const MatRF& m, const HyperSol& sol) {
    const int n = m.rows();
    if (static_cast<int>(sol.p.size()) != n) return false;
    const RatFunc lam = sol.lambda.ratio();
    for (int i = 0; i < n; ++i) {
        RatFunc rhs;
        for (int j = 0; j < n; ++j) rhs += m(i, j) * RatFunc(sol.p[static_cast<size_t>(j)]);
        RatFunc lhs = lam * RatFunc(tau_poly(sol.p[static_cast<size_t>(i)], 1));
        if (lhs != rhs) return false;
    }
    return true;
}

HyperSol standard_form(const Candidate& lambda, const std::vector<RatFunc>& p) {
    bool all_zero = true;
    for (const auto& e : p)
        if (!e.is_zero()) all_zero = false;
    if (p.empty() || all_zero) throw std::invalid_argument("standard_form: zero vector");
    UPoly den(1);
    for (const auto& e : p)
        if (!e.is_zero()) den = poly_lcm(den, e.den());
    std::vector<UPoly> q;
    q.reserve(p.size());
    for (const auto& e : p) q.push_back(e.is_zero() ? UPoly() : e.num() * poly_exact_div(den, e.den()));
    auto [content, prim] = content_primitive(q);
    // P = r * prim with r = unit * g / den; fold r through lambda -> lambda * tau(r)/r
    RatFunc r(content.poly * content.unit, den);
    RatFunc folded = lambda.ratio() * r.tau(1) / r;
    HyperSol out;
    out.lambda = candidate_from_ratio(folded);
    out.p = std::move(prim);
    return out;
}

HyperSol standard_form(const HyperSol& sol) {
    std::vector<RatFunc> p;
    p.reserve(sol.p.size());
    for (const auto& e : sol.p) p.push_back(RatFunc(e));
    return standard_form(sol.lambda, p);
}

std::vector<HyperSol> hyper_solve_v1(const MatRF& m, std::vector<Warning>* warnings) {
    CandidateSet s1 = candidate_set_v1(m);
    GenExpSet g = unramified_gen_exps(m);
    if (warnings) warnings->insert(warnings->end(), g.warnings.begin(), g.warnings.end());
    std::vector<Candidate> h = match_gen_exps(s1, g.exps, MatchMode::Strong);
    std::vector<HyperSol> out;
    for (const Candidate& lambda : h) {
        int cap = degree_bound(lambda, g.exps);
        if (cap < 0) continue;
        for (auto& p : poly_solutions(m, lambda, cap)) {
            HyperSol sol{lambda, std::move(p)};
            out.push_back(standard_form(sol));
        }
    }
    sort_solutions(out);
    return out;
}

std::vector<HyperSol> hyper_solve_v3(const MatRF& m, std::vector<Warning>* warnings, int sharpen_level) {
    const UPoly d1 = denom_matrix(m);
    const UPoly d2 = denom_matrix(mat_inverse(m));
    Factorization f1 = factor_q(d1), f2 = factor_q(d2);
    if (d1.is_constant()) f1.factors.clear();
    if (d2.is_constant()) f2.factors.clear();
    std::vector<ClassPlacements> context = class_placements(f1, f2);

    int level = sharpen_level;
    std::vector<ClassBound> bounds = local_type_bounds(m, 1);
    if (level == 1) {
        long count = 1;
        for (const auto& b : bounds) count *= (b.hi - b.lo + 1);
        if (count > 64) level = 2;
    }
    if (level == 2) bounds = local_type_bounds(m, 2);

    GenExpSet g = unramified_gen_exps(m);
    if (warnings) warnings->insert(warnings->end(), g.warnings.begin(), g.warnings.end());

    // enumerate the admissible types, keep one minimal representative per type
    struct Task {
        Candidate rep;
        int cap;
    };
    std::vector<Task> tasks;
    std::vector<int> gv(bounds.size());
    for (size_t i = 0; i < bounds.size(); ++i) gv[i] = bounds[i].lo;
    while (true) {
        LocalTypeProfile profile;
        int slope = 0;
        for (size_t i = 0; i < bounds.size(); ++i) {
            if (gv[i] != 0) profile.entries[bounds[i].canonical] = gv[i];
            slope += gv[i] * (bounds[i].canonical.is_constant() ? 0 : bounds[i].canonical.deg());
        }
        std::set<BigRat> cs;
        for (const GenExp& e : g.exps)
            if (e.s == slope) cs.insert(e.c);
        for (const BigRat& c : cs) {
            Candidate rep = minimal_representative(profile, c, context);
            const BigRat sl = slc(rep);
            bool weak = false;
            for (const GenExp& e : g.exps)
                if (e.s == slope && e.c == c && is_integer(e.d - sl)) weak = true;
            if (!weak) continue;
            int cap;
            try {
                cap = degree_bound(rep, g.exps);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (cap < 0) continue;  // no polynomial P can exist for this type
            tasks.push_back(Task{std::move(rep), cap});
        }
        size_t i = 0;
        for (; i < bounds.size(); ++i) {
            if (gv[i] < bounds[i].hi) {
                ++gv[i];
                for (size_t j = 0; j < i; ++j) gv[j] = bounds[j].lo;
                break;
            }
        }
        if (i == bounds.size()) break;
    }

    // the per-candidate searches are independent; merge preserves task order
    std::vector<std::vector<std::vector<UPoly>>> bases = parallel_map<std::vector<std::vector<UPoly>>>(
        static_cast<int>(tasks.size()),
        [&](int i) { return poly_solutions(m, tasks[static_cast<size_t>(i)].rep, tasks[static_cast<size_t>(i)].cap); });

    std::vector<HyperSol> out;
    for (size_t i = 0; i < tasks.size(); ++i) {
        for (auto& p : bases[i]) {
            HyperSol sol{tasks[i].rep, std::move(p)};
            if (!verify_solution(m, sol)) throw internal_error("hyper_solve_v3: back-substitution failed");
            out.push_back(std::move(sol));
        }
    }
    sort_solutions(out);
    // one candidate per type by construction; assert pairwise type-distinct
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!(out[i].lambda == out[j].lambda) && same_type(out[i].lambda, out[j].lambda))
                throw internal_error("hyper_solve_v3: duplicate types in output");
    return out;
}

}  // namespace hyperdelta
