#pragma once

#include <map>

#include "upoly.hpp"

namespace hyperdelta {

struct Factorization {
    BigRat unit;
    // monic irreducible factor -> multiplicity, pairwise distinct
    std::vector<std::pair<UPoly, int>> factors;

    UPoly expand() const;
};

// Yun squarefree decomposition; parts are monic, squarefree, pairwise coprime
std::vector<std::pair<UPoly, int>> squarefree_factor(const UPoly& p);

// complete irreducible factorization over Q (Zassenhaus: modular factorization,
// Hensel lifting, subset recombination)
Factorization factor_q(const UPoly& p);

struct RationalRoots {
    std::map<BigRat, int> roots;   // root -> multiplicity
    int nonrational_degree = 0;    // total degree of the discarded cofactor
};
RationalRoots rational_roots(const UPoly& p);

}  // namespace hyperdelta
