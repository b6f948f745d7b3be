#pragma once

#include "solver.hpp"

namespace hyperdelta {

// Basis of the (n-m)-th exterior power of D/DL: strictly increasing index
// tuples, with the recovery tuples (i, m+1, ..., n-1) for i = 0..m first so
// the factor coefficients can be read off a contiguous prefix.
struct WedgeBasisIndex {
    int n, m;
    std::vector<std::vector<int>> ordered;

    WedgeBasisIndex(int n, int m);
    int size() const { return static_cast<int>(ordered.size()); }
    int index_of(const std::vector<int>& tuple) const;
};

// action of tau on wedge^{n-m}(D/DL): column j holds the coordinates of
// tau(e_j); throws when the trailing coefficient of L vanishes
MatRF module_tau_matrix(const OrePoly& l, int m, int dim_cap = 1000);

// commutative analog: action of multiplication by the variable on
// wedge^{n-m}(Q[y]/(f))
MatQ module_mul_matrix(const UPoly& f, int m, int dim_cap = 1000);

// a coordinate vector c spans a 1-dimensional submodule iff
// tau(c) = mu * T^{-1} c for some mu; hypergeometric solutions of
// tau(Y) = T^{-1} Y give exactly those vectors
MatRF submodule_system(const MatRF& t);

// read the order-m right factor off the privileged prefix coordinates
OrePoly recover_factor(const std::vector<RatFunc>& coords, int n, int m);
UPoly recover_poly_factor(const std::vector<BigRat>& coords, int n, int m);

// (tau^i R) wedge v = 0 for i = 1..n-m-1 (decomposability test)
bool plucker_check(const OrePoly& r, const std::vector<RatFunc>& coords, int n, int m);
bool plucker_check_poly(const UPoly& g, const std::vector<BigRat>& coords, int n, int m);

struct FactorSearch {
    std::vector<OrePoly> factors;  // monic order-m right factors, division-verified
    int dropped_no_prefix = 0;     // candidates with vanishing normalizing coordinate
    int dropped_plucker = 0;
    int dropped_division = 0;
    std::vector<Warning> warnings;
};
FactorSearch right_factors(const OrePoly& l, int m);

// eigenvector route for polynomials, cross-validated against factor_q
std::vector<UPoly> poly_factor_demo(const UPoly& f, int m);

}  // namespace hyperdelta
