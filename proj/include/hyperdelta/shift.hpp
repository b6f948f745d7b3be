#pragma once

#include <map>
#include <optional>

#include "factor.hpp"
#include "ratfunc.hpp"

namespace hyperdelta {

// certificate lambda = c * A/B with A, B monic coprime, c in Q*
struct Candidate {
    BigRat c;
    UPoly a;  // monic
    UPoly b;  // monic

    Candidate() : c(1), a(1), b(1) {}
    Candidate(BigRat cc, UPoly aa, UPoly bb);

    RatFunc ratio() const { return RatFunc(a * c, b); }
    bool operator==(const Candidate& o) const { return c == o.c && a == o.a && b == o.b; }
    bool operator<(const Candidate& o) const;
};

// second leading coefficient of a monic polynomial; slc of a constant is 0
BigRat slc(const UPoly& p);
// extension to monic quotients: slc(A) - slc(B)
BigRat slc(const Candidate& cand);

// orbit of a monic irreducible under integer shifts, with the members seen in
// some factorization recorded as offset -> multiplicity
struct ShiftClass {
    UPoly canonical;  // representative with slc in [0, deg)
    std::map<long, int> members;
};

// returns k with f = tau^k(g) when the polynomials are shift equivalent
std::optional<long> shift_equivalent(const UPoly& f, const UPoly& g);

// canonical orbit representative (slc in [0, deg)) and the offset of p from it
std::pair<UPoly, long> canonical_shift_rep(const UPoly& p);

// partition monic irreducible factors into shift classes
std::vector<ShiftClass> classify(const std::vector<std::pair<UPoly, int>>& factors);

// g_p(a): sum of valuations of a at all members of [p]
int local_type(const RatFunc& a, const UPoly& class_rep);

// finitely supported map canonical-representative -> g_p
struct LocalTypeProfile {
    std::map<UPoly, int> entries;

    int at(const UPoly& rep) const {
        auto it = entries.find(rep);
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const LocalTypeProfile& o) const { return entries == o.entries; }
};
LocalTypeProfile type_profile(const RatFunc& a);
LocalTypeProfile type_profile(const Candidate& cand);

// Thm-style type test: equal constants and equal local types everywhere
bool same_type(const Candidate& l1, const Candidate& l2);

// rational solution of tau(rho)/rho = mu; exists exactly when mu has the
// type of 1 (telescoping products over each shift orbit)
std::optional<RatFunc> solve_tau_quotient(const RatFunc& mu);

// admissible factor placements for one shift class, derived from the
// factorizations of denom(M) and denom(M^{-1})
struct ClassPlacements {
    UPoly canonical;
    struct Slot {
        long offset;   // member = tau^offset(canonical)
        int den_mult;  // multiplicity in denom(M): exponent range floor -den_mult
        int num_mult;  // multiplicity in denom(M^{-1}): exponent range cap num_mult
    };
    std::vector<Slot> slots;
};

// placement contexts for all classes touched by denom(M) / denom(M^{-1})
std::vector<ClassPlacements> class_placements(const Factorization& denom_m,
                                              const Factorization& denom_minv);

// the slc-smallest element of the type class described by `profile` within the
// admissible placements; throws if the class is empty/infeasible
Candidate minimal_representative(const LocalTypeProfile& profile, const BigRat& c,
                                 const std::vector<ClassPlacements>& context);

}  // namespace hyperdelta
