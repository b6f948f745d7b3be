#pragma once

#include "local.hpp"

namespace hyperdelta {

// hypergeometric solution hyp(c A/B) * P with P a polynomial vector
struct HyperSol {
    Candidate lambda;
    std::vector<UPoly> p;
};

enum class CandidateProvenance { V1, V2, V3 };

struct CandidateSet {
    std::vector<Candidate> members;
    CandidateProvenance provenance;
    std::vector<Warning> warnings;
};

struct SolveResult {
    std::vector<HyperSol> solutions;
    GenExpSet genexps;
    std::vector<Warning> warnings;
};

// BP1 of Version I: all A/B with A | denom(M^{-1}), B | denom(M), reduced
CandidateSet candidate_set_v1(const MatRF& m);

// per-shift-class interval bounds for g_p(lambda); level 2 sharpens with
// the denominators of tau(M)*M
struct ClassBound {
    UPoly canonical;
    int lo;
    int hi;
};
std::vector<ClassBound> local_type_bounds(const MatRF& m, int level);

// one representative per admissible local-type vector
CandidateSet candidate_set_v2(const MatRF& m, int level = 1);

enum class MatchMode { Strong, Weak };

// keep candidates compatible with some generalized exponent; attaches c
std::vector<Candidate> match_gen_exps(const CandidateSet& s, const std::set<GenExp>& g, MatchMode mode);

// max over compatible genexps of d - slc(A/B); negative means discard
int degree_bound(const Candidate& cand, const std::set<GenExp>& g);

// basis of polynomial solution vectors of tau(P) = lambda^{-1} M P with
// deg P <= deg_cap; each basis vector is primitive with positive sign
std::vector<std::vector<UPoly>> poly_solutions(const MatRF& m, const Candidate& lambda, int deg_cap);

std::vector<HyperSol> hyper_solve_v1(const MatRF& m, std::vector<Warning>* warnings = nullptr);
std::vector<HyperSol> hyper_solve_v3(const MatRF& m, std::vector<Warning>* warnings = nullptr,
                                     int sharpen_level = 1);

bool verify_solution(const MatRF& m, const HyperSol& sol);

// standard representation: fold rational content of P into lambda so that P
// becomes a primitive polynomial vector
HyperSol standard_form(const Candidate& lambda, const std::vector<RatFunc>& p);
HyperSol standard_form(const HyperSol& sol);

}  // namespace hyperdelta
