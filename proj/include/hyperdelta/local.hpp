#pragma once

#include <set>

#include "matrix.hpp"
#include "ore.hpp"
#include "series.hpp"
#include "shift.hpp"

namespace hyperdelta {

// Unramified generalized exponent (s, c, d): local solutions Gamma(x)^s c^x x^d (1 + ...).
// The E_1 representative is c * t^{-s} * (1 + d t).
struct GenExp {
    int s;
    BigRat c;  // nonzero
    BigRat d;

    bool operator==(const GenExp& o) const { return s == o.s && c == o.c && d == o.d; }
    bool operator<(const GenExp& o) const {
        if (s != o.s) return s < o.s;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }
};

struct Warning {
    std::string code;
    std::string detail;
};

// trunc(c A/B) = c t^{deg B - deg A} (1 + (slc A - slc B) t)
GenExp trunc_map(const Candidate& lambda);

// group law on E_1 representatives: g1 o g2 = trunc(g1 g2)
inline GenExp genexp_compose(const GenExp& a, const GenExp& b) {
    return GenExp{a.s + b.s, a.c * b.c, a.d + b.d};
}

// delta-side gauge action: tau(T^{-1}) (Mhat T - delta(T))
MatRF gauge_transform(const MatRF& mhat, const MatRF& t);
// same with a precomputed inverse
MatRF gauge_transform(const MatRF& mhat, const MatRF& t, const MatRF& tinv);
// tau-side conjugation tau(T^{-1}) M T (gauge for the system tau(Y) = M Y)
MatRF gauge_conjugate_tau(const MatRF& m, const MatRF& t);

struct SimpleFormData {
    int s;
    MatQ d0;
    MatQ n0;
    UPoly es;  // E_s(lambda) = det(N0 - lambda D0)
};

// leading pencil data of delta(Y) = Mhat Y at level s >= 1
SimpleFormData s_simple_data(const MatRF& mhat, int s);

struct GaugeResult {
    MatRF t;
    MatRF tinv;
    MatRF nhat;  // = gauge_transform(input, t)
    int ord_t;   // valuation of t (0 when no reduction was needed)
};

// reduce to a form that is s-simple for every s in 1..q; returns the gauge and
// the per-level pencil data of the reduced system
std::pair<GaugeResult, std::vector<SimpleFormData>> super_reduce(const MatRF& mhat);

struct ScPairs {
    std::set<std::pair<int, BigRat>> pairs;
    std::vector<Warning> warnings;
};
ScPairs sc_pairs(const MatRF& m);

struct IndicialData {
    UPoly e0;       // E_0(lambda) = det(lambda D0 - N0) of the 0-simple form
    int ord_t;      // d-shift lower end: candidates are roots + [ord_t, ord_t_hi]
    int ord_t_hi;   // upper end of the shift ambiguity (0 when no reduction ran)
    std::vector<Warning> warnings;
};
// 0-simple reduction of Mhat_sc = c^{-1} x^{-s} M - I for a previously found pair
IndicialData zero_simple_indicial(const MatRF& mhat_sc);

struct GenExpSet {
    std::set<GenExp> exps;
    std::vector<Warning> warnings;
};
GenExpSet unramified_gen_exps(const MatRF& m);

// existence of a truncated local solution Gamma^s c^x x^d (F0 + ... + F_N t^N),
// F0 != 0; used to confirm candidate triplets
bool has_formal_solution(const MatRF& m, const GenExp& g, int terms);

// ---- test oracles ----

// scalar operator whose solutions correspond to the system's under the
// cyclic-vector correspondence
OrePoly cyclic_vector_operator(const MatRF& m);

// unramified generalized exponents of a scalar operator via its tau-Newton
// polygon, Newton polynomials, and slope-0 indicial equations
GenExpSet operator_gen_exps(const OrePoly& l);

}  // namespace hyperdelta
