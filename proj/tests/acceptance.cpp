// Acceptance suite: runs every shipped behavior gate at desk scale and prints
// one PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hyperdelta/jsonio.hpp"
#include "testutil.hpp"

using namespace hyperdelta;
using testutil::P;
using testutil::R;
using testutil::Rng;

namespace {

int g_failures = 0;

#define ACCEPT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) throw hd_error(std::string("assert failed: ") + #cond); \
    } while (0)

void criterion(int n, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << n << ": " << what << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "FAIL criterion " << n << ": " << what << " -- " << e.what() << "\n";
    }
}

Candidate cand_of(const RatFunc& f) {
    return Candidate(f.num().lc() / f.den().lc(), f.num().monic(), f.den().monic());
}

std::set<std::pair<int, BigRat>> sc_of(const GenExpSet& g) {
    std::set<std::pair<int, BigRat>> out;
    for (const auto& e : g.exps) out.insert({e.s, e.c});
    return out;
}

MatRF random_system(Rng& rng, int n) {
    while (true) {
        MatRF m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long pick = rng.range(0, 2);
                if (pick == 0)
                    m(i, j) = RatFunc(BigRat(rng.range(-3, 3)));
                else if (pick == 1)
                    m(i, j) = RatFunc(rng.nonzero_poly(1, 2), rng.nonzero_poly(1, 2));
            }
        try {
            mat_inverse(m);
            return m;
        } catch (const singular_matrix_error&) {
        }
    }
}

MatRF random_gauge(Rng& rng, int n) {
    while (true) {
        MatRF t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || rng.range(0, 3) == 0) {
                    long e = rng.range(-1, 1);
                    RatFunc tp = e >= 0 ? RatFunc(UPoly::x().pow(static_cast<unsigned>(e)))
                                        : RatFunc(UPoly(1), UPoly::x().pow(static_cast<unsigned>(-e)));
                    long c = rng.range(-2, 2);
                    if (i == j && c == 0) c = 1;
                    t(i, j) = tp * RatFunc(BigRat(c));
                }
            }
        try {
            mat_inverse(t);
            return t;
        } catch (const singular_matrix_error&) {
        }
    }
}

// (tau - r_k) ... (tau - r_1): the first entry becomes the right-hand factor
OrePoly product_of_first_order(const std::vector<RatFunc>& rs) {
    OrePoly l(RatFunc(1));
    for (const auto& r : rs) l = OrePoly(std::vector<RatFunc>{-r, RatFunc(1)}) * l;
    return l;
}

int rank_of(const std::vector<std::vector<UPoly>>& vecs) {
    if (vecs.empty()) return 0;
    int deg_cap = 0;
    const int n = static_cast<int>(vecs[0].size());
    for (const auto& v : vecs)
        for (const auto& p : v)
            if (!p.is_zero()) deg_cap = std::max(deg_cap, p.deg());
    MatQ m(static_cast<int>(vecs.size()), n * (deg_cap + 1));
    for (int r = 0; r < static_cast<int>(vecs.size()); ++r)
        for (int e = 0; e < n; ++e)
            for (int k = 0; k <= deg_cap; ++k)
                m(r, e * (deg_cap + 1) + k) = vecs[static_cast<size_t>(r)][static_cast<size_t>(e)].coeff(k);
    return rref_q(std::move(m)).rank;
}

// rebase hyp(lambda_i) P_i to a common reference certificate: the solutions of
// one type form a Q-space only after folding the hyp-ratio into the vectors
std::vector<std::vector<UPoly>> rebase_group(const Candidate& ref,
                                             const std::vector<HyperSol>& group) {
    std::vector<std::vector<RatFunc>> rational;
    UPoly den(1);
    for (const auto& s : group) {
        auto rho = solve_tau_quotient(s.lambda.ratio() / ref.ratio());
        if (!rho) throw hd_error("rebase_group: certificates not of one type");
        std::vector<RatFunc> v;
        for (const auto& p : s.p) v.push_back(*rho * RatFunc(p));
        for (const auto& e : v)
            if (!e.is_zero()) den = poly_lcm(den, e.den());
        rational.push_back(std::move(v));
    }
    std::vector<std::vector<UPoly>> out;
    for (const auto& v : rational) {
        std::vector<UPoly> w;
        for (const auto& e : v)
            w.push_back(e.is_zero() ? UPoly() : e.num() * poly_exact_div(den, e.den()));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

int main() {
    const MatRF example = testutil::example_system();
    const std::set<GenExp> example_g = {{-2, BigRat(1), BigRat(2)}, {1, BigRat(1), BigRat(-4)}};

    criterion(1, "denominator factorizations and |S| = 48", [&] {
        ACCEPT(denom_matrix(example) == P("x*(x+2)^2*(x+3)"));
        ACCEPT(denom_matrix(mat_inverse(example)) == P("(x+1)^2*(x+2)"));
        ACCEPT(candidate_set_v1(example).members.size() == 48);
    });

    criterion(2, "generalized exponents {(-2,1,2),(1,1,-4)}; strong matches 8 and 0", [&] {
        GenExpSet g = unramified_gen_exps(example);
        ACCEPT(g.exps.size() == 2);
        ACCEPT(g.exps.count(GenExp{-2, BigRat(1), BigRat(2)}) == 1);
        ACCEPT(g.exps.count(GenExp{1, BigRat(1), BigRat(-4)}) == 1);
        ACCEPT(g.warnings.empty());
        CandidateSet s1 = candidate_set_v1(example);
        ACCEPT(match_gen_exps(s1, {GenExp{-2, BigRat(1), BigRat(2)}}, MatchMode::Strong).size() == 8);
        ACCEPT(match_gen_exps(s1, {GenExp{1, BigRat(1), BigRat(-4)}}, MatchMode::Strong).empty());
    });

    criterion(3, "local-type bounds (-4,3), |S2| = 8, H2 = {x^-2, x}", [&] {
        auto bounds = local_type_bounds(example, 1);
        ACCEPT(bounds.size() == 1);
        ACCEPT(bounds[0].canonical == P("x"));
        ACCEPT(bounds[0].lo == -4);
        ACCEPT(bounds[0].hi == 3);
        CandidateSet s2 = candidate_set_v2(example);
        ACCEPT(s2.members.size() == 8);
        auto h2 = match_gen_exps(s2, example_g, MatchMode::Weak);
        ACCEPT(h2.size() == 2);
        ACCEPT(h2[0] == Candidate(BigRat(1), P("1"), P("x^2")));
        ACCEPT(h2[1] == Candidate(BigRat(1), P("x"), P("1")));
    });

    criterion(4, "minimal representatives, degree bounds 8/-3, unique Version III ray", [&] {
        Factorization f1 = factor_q(P("x*(x+2)^2*(x+3)"));
        Factorization f2 = factor_q(P("(x+1)^2*(x+2)"));
        auto context = class_placements(f1, f2);
        LocalTypeProfile t1, t2;
        t1.entries[P("x")] = -2;
        t2.entries[P("x")] = 1;
        Candidate s1 = minimal_representative(t1, BigRat(1), context);
        Candidate s2 = minimal_representative(t2, BigRat(1), context);
        ACCEPT(s1 == Candidate(BigRat(1), P("x+1"), P("(x+2)^2*(x+3)")));
        ACCEPT(s2 == Candidate(BigRat(1), P("(x+1)^2"), P("x+3")));
        ACCEPT(degree_bound(s1, example_g) == 8);
        ACCEPT(degree_bound(s2, example_g) == -3);

        auto sols = hyper_solve_v3(example);
        ACCEPT(sols.size() == 1);
        ACCEPT(sols[0].lambda == s1);
        const std::vector<UPoly> displayed = {
            P("x^3*(x+2)*(x+1)^4"),
            -P("x*(x+2)*(x+1)^3"),
            P("x*(x+2)^2*(x+1)^3"),
            -P("x*(x+1)*(x^4+4*x^3+3*x^2-1)"),
            -P("x*(x+2)*(x+1)"),
            P("x*(x+3)*(x+2)*(x+1)"),
        };
        // equality up to a rational scalar: cross-multiply against entry 0
        ACCEPT(!sols[0].p[0].is_zero());
        for (size_t i = 0; i < displayed.size(); ++i)
            ACCEPT(sols[0].p[i] * displayed[0] == displayed[i] * sols[0].p[0]);
        ACCEPT(verify_solution(example, sols[0]));
    });

    criterion(5, "Version I discovers the unique ray exactly 4 times", [&] {
        auto sols = hyper_solve_v1(example);
        ACCEPT(sols.size() == 4);
        for (const auto& s : sols) {
            ACCEPT(verify_solution(example, s));
            ACCEPT(same_type(s.lambda, sols[0].lambda));
        }
    });

    criterion(6, "quartic wedge action matrix, eigen factors, Plucker checks", [&] {
        const UPoly f = P("x^4+2*x^3+3*x^2+2*x+2");
        MatQ act = module_mul_matrix(f, 2);
        const int img[6][6] = {{0, -2, 0, 2, 0, -3}, {0, 0, -2, 0, 2, 2}, {2, 2, 3, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1},  {0, 1, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0}};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) ACCEPT(act(j, i) == BigRat(img[i][j]));
        auto fs = poly_factor_demo(f, 2);
        ACCEPT(fs.size() == 2);
        ACCEPT(fs[0] == P("x^2+1"));
        ACCEPT(fs[1] == P("x^2+2*x+2"));
        const std::vector<BigRat> u = {BigRat(-1), BigRat(0), BigRat(-1), BigRat(-1), BigRat(0), BigRat(1)};
        const std::vector<BigRat> v = {BigRat(1), BigRat(1), rat(1, 2), BigRat(2), BigRat(2), BigRat(1)};
        ACCEPT(plucker_check_poly(recover_poly_factor(u, 4, 2), u, 4, 2));
        ACCEPT(plucker_check_poly(recover_poly_factor(v, 4, 2), v, 4, 2));
    });

    criterion(7, "order-4 operator factors into {tau^2-x, tau^2-x*tau-3}", [&] {
        const OrePoly l = testutil::example_operator();
        FactorSearch fs = right_factors(l, 2);
        ACCEPT(fs.factors.size() == 2);
        const OrePoly f1(std::vector<RatFunc>{R("-x"), R("0"), R("1")});
        const OrePoly f2(std::vector<RatFunc>{R("-3"), R("-x"), R("1")});
        ACCEPT(std::find(fs.factors.begin(), fs.factors.end(), f1) != fs.factors.end());
        ACCEPT(std::find(fs.factors.begin(), fs.factors.end(), f2) != fs.factors.end());
        for (const auto& fac : fs.factors) ACCEPT(ore_right_divide(l, fac).second.is_zero());
    });

    criterion(8, "property suite (>=200 fixed-seed cases per law)", [&] {
        {  // g_p additivity
            Rng rng(1001);
            int done = 0;
            while (done < 200) {
                RatFunc a = rng.ratfunc(3, 4), b = rng.ratfunc(3, 4);
                if (a.is_zero() || b.is_zero()) continue;
                ++done;
                ACCEPT(local_type(a * b, P("x")) == local_type(a, P("x")) + local_type(b, P("x")));
            }
        }
        {  // shift equivalence laws
            Rng rng(1002);
            int done = 0;
            while (done < 200) {
                UPoly p = rng.poly(3, 5, true);
                if (p.is_constant() || factor_q(p).factors.size() != 1) continue;
                ++done;
                long k1 = rng.range(-5, 5), k2 = rng.range(-5, 5);
                UPoly f = tau_poly(p, k1), g = tau_poly(p, k2);
                ACCEPT(shift_equivalent(p, p) == 0);
                ACCEPT(shift_equivalent(f, p) == k1);
                ACCEPT(shift_equivalent(p, f) == -k1);
                ACCEPT(shift_equivalent(f, g) == k1 - k2);
            }
        }
        {  // trunc homomorphism
            Rng rng(1003);
            int done = 0;
            while (done < 200) {
                RatFunc l1 = rng.ratfunc(3, 4), l2 = rng.ratfunc(3, 4);
                if (l1.is_zero() || l2.is_zero()) continue;
                ++done;
                ACCEPT(trunc_map(cand_of(l1 * l2)) ==
                       genexp_compose(trunc_map(cand_of(l1)), trunc_map(cand_of(l2))));
            }
        }
        {  // sameType(lambda, lambda * tau(r)/r)
            Rng rng(1004);
            int done = 0;
            while (done < 200) {
                RatFunc lam = rng.ratfunc(2, 3), r = rng.ratfunc(2, 3);
                if (lam.is_zero() || r.is_zero()) continue;
                ++done;
                ACCEPT(same_type(cand_of(lam), cand_of(lam * r.tau(1) / r)));
            }
        }
        {  // gauge invariance of (s, c); slope bounds; back-substitution soundness
            Rng rng(1005);
            int done = 0;
            while (done < 200) {
                const int n = done % 3 == 0 ? 2 : 1;
                MatRF m = random_system(rng, n);
                GenExpSet g = unramified_gen_exps(m);
                ++done;
                const int lo = *ord_inf(mat_inverse(m));
                const int hi = -*ord_inf(m);
                for (const auto& e : g.exps) ACCEPT(e.s >= lo && e.s <= hi);
                MatRF t = random_gauge(rng, n);
                GenExpSet g2 = unramified_gen_exps(gauge_conjugate_tau(m, t));
                ACCEPT(sc_of(g) == sc_of(g2));
                for (const auto& e1 : g.exps) {
                    bool matched = false;
                    for (const auto& e2 : g2.exps)
                        if (e1.s == e2.s && e1.c == e2.c && is_integer(e1.d - e2.d)) matched = true;
                    ACCEPT(matched);
                }
                for (const auto& sol : hyper_solve_v3(m)) ACCEPT(verify_solution(m, sol));
            }
        }
    });

    criterion(9, "oracle equivalence on 50 2x2 and 20 3x3 warning-free systems", [&] {
        Rng rng(2001);
        int done2 = 0, done3 = 0;
        while (done2 < 50 || done3 < 20) {
            const int n = done2 < 50 ? 2 : 3;
            MatRF m;
            if (rng.range(0, 1) == 0) {
                std::vector<RatFunc> rs;
                for (int k = 0; k < n; ++k)
                    rs.push_back(RatFunc(rng.nonzero_poly(1, 2), rng.nonzero_poly(1, 2)));
                m = companion_matrix(product_of_first_order(rs));
            } else {
                m = random_system(rng, n);
            }
            GenExpSet gs = unramified_gen_exps(m);
            if (!gs.warnings.empty()) continue;
            GenExpSet go = operator_gen_exps(cyclic_vector_operator(m));
            if (!go.warnings.empty()) continue;
            ACCEPT(sc_of(gs) == sc_of(go));
            auto mod_z_match = [](const GenExpSet& a, const GenExpSet& b) {
                for (const auto& e1 : a.exps) {
                    bool ok = false;
                    for (const auto& e2 : b.exps)
                        if (e1.s == e2.s && e1.c == e2.c && is_integer(e1.d - e2.d)) ok = true;
                    if (!ok) return false;
                }
                return true;
            };
            ACCEPT(mod_z_match(gs, go));
            ACCEPT(mod_z_match(go, gs));

            std::vector<Warning> w1, w3;
            std::vector<HyperSol> v1 = hyper_solve_v1(m, &w1);
            std::vector<HyperSol> v3 = hyper_solve_v3(m, &w3);
            if (!w1.empty() || !w3.empty()) continue;
            std::vector<HyperSol> v3s;
            for (const auto& s : v3) v3s.push_back(standard_form(s));
            for (const auto& b : v3s) {
                std::vector<HyperSol> g1, g3, joint;
                for (const auto& a : v1)
                    if (same_type(a.lambda, b.lambda)) g1.push_back(a);
                for (const auto& c : v3s)
                    if (same_type(c.lambda, b.lambda)) g3.push_back(c);
                joint = g1;
                joint.insert(joint.end(), g3.begin(), g3.end());
                const int r1rank = rank_of(rebase_group(b.lambda, g1));
                const int r3rank = rank_of(rebase_group(b.lambda, g3));
                ACCEPT(r1rank == r3rank);
                ACCEPT(rank_of(rebase_group(b.lambda, joint)) == r3rank);
            }
            for (const auto& a : v1) {
                bool matched = false;
                for (const auto& b : v3s)
                    if (same_type(a.lambda, b.lambda)) matched = true;
                ACCEPT(matched);
            }
            n == 2 ? ++done2 : ++done3;
        }
    });

    criterion(10, "50 constructed products: order-1 factor of the right type, <5s each", [&] {
        Rng rng(3001);
        int done = 0;
        while (done < 50) {
            RatFunc r1(rng.nonzero_poly(1, 2), rng.nonzero_poly(1, 2));
            RatFunc r2(rng.nonzero_poly(1, 2), rng.nonzero_poly(1, 2));
            OrePoly l = product_of_first_order({r1, r2});
            const auto start = std::chrono::steady_clock::now();
            FactorSearch fs;
            try {
                fs = right_factors(l, 1);
            } catch (const singular_matrix_error&) {
                continue;
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            ACCEPT(secs < 5.0);
            ++done;
            bool found = false;
            for (const auto& f : fs.factors) {
                ACCEPT(ore_right_divide(l, f).second.is_zero());
                if (same_type(cand_of(-f.coeff(0)), cand_of(r1))) found = true;
            }
            ACCEPT(found);
        }
    });

    criterion(11, "performance smoke: 6x6 <10s, sparse 15x15 <2min", [&] {
        {
            const auto start = std::chrono::steady_clock::now();
            auto sols = hyper_solve_v3(example);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            ACCEPT(sols.size() == 1);
            ACCEPT(secs < 10.0);
        }
        {
            // sparse lower-triangular-plus-couplings 15x15 with denominator
            // factors drawn from a small pool of total degree <= 6
            Rng rng(4001);
            const int n = 15;
            MatRF m(n, n);
            const std::vector<UPoly> pool = {P("x"), P("x+1"), P("x+2"), P("x+3"), P("x+5"), P("2*x+1")};
            for (int i = 0; i < n; ++i) {
                UPoly den = pool[static_cast<size_t>(rng.range(0, 5))];
                m(i, i) = RatFunc(rng.nonzero_poly(1, 3), den);
                if (i > 0 && rng.range(0, 1) == 0) {
                    m(i, rng.range(0, i - 1)) =
                        RatFunc(rng.nonzero_poly(1, 2), pool[static_cast<size_t>(rng.range(0, 5))]);
                }
            }
            const auto start = std::chrono::steady_clock::now();
            std::vector<Warning> w;
            auto sols = hyper_solve_v3(m, &w);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (const auto& s : sols) ACCEPT(verify_solution(m, s));
            ACCEPT(secs < 120.0);
        }
    });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
