#include "hyperdelta/shift.hpp"

#include <algorithm>

namespace hyperdelta {

Candidate::Candidate(BigRat cc, UPoly aa, UPoly bb) : c(std::move(cc)), a(std::move(aa)), b(std::move(bb)) {
    if (c == 0) throw std::invalid_argument("Candidate: c must be nonzero");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("Candidate: zero part");
    if (!a.is_monic()) a = a.monic();
    if (!b.is_monic()) b = b.monic();
    UPoly g = poly_gcd(a, b);
    if (!g.is_one()) {
        a = poly_exact_div(a, g);
        b = poly_exact_div(b, g);
    }
}

bool Candidate::operator<(const Candidate& o) const {
    if (c != o.c) return c < o.c;
    if (a != o.a) return a < o.a;
    return b < o.b;
}

BigRat slc(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("slc: zero polynomial");
    if (!p.is_monic()) throw std::invalid_argument("slc: non-monic polynomial");
    if (p.is_constant()) return BigRat(0);
    return p.coeff(p.deg() - 1);
}

BigRat slc(const Candidate& cand) { return slc(cand.a) - slc(cand.b); }

std::optional<long> shift_equivalent(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.deg() != g.deg()) return std::nullopt;
    const int d = f.deg();
    if (d == 0) return 0L;
    // the shift must be (slc(f) - slc(g)) / deg
    BigRat k = (slc(f) - slc(g)) / BigRat(d);
    if (!is_integer(k)) return std::nullopt;
    if (!k.get_num().fits_slong_p()) return std::nullopt;
    long ki = k.get_num().get_si();
    if (tau_poly(g, ki) == f) return ki;
    return std::nullopt;
}

std::pair<UPoly, long> canonical_shift_rep(const UPoly& p) {
    const int d = p.deg();
    if (d == 0) return {p, 0};
    BigRat s = slc(p);
    // shift k with s + k*d in [0, d): k = -floor(s/d)
    BigInt kf = rat_floor(s / BigRat(d));
    long k = -static_cast<long>(kf.get_si());
    return {tau_poly(p, k), -k};
}

std::vector<ShiftClass> classify(const std::vector<std::pair<UPoly, int>>& factors) {
    std::vector<ShiftClass> classes;
    for (const auto& [p, mult] : factors) {
        auto [rep, off] = canonical_shift_rep(p);
        bool placed = false;
        for (auto& cl : classes) {
            if (cl.canonical == rep) {
                cl.members[off] += mult;
                placed = true;
                break;
            }
        }
        if (!placed) {
            ShiftClass cl;
            cl.canonical = rep;
            cl.members[off] = mult;
            classes.push_back(std::move(cl));
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const ShiftClass& a, const ShiftClass& b) { return a.canonical < b.canonical; });
    return classes;
}

int local_type(const RatFunc& a, const UPoly& class_rep) {
    if (a.is_zero()) throw std::invalid_argument("local_type: zero input");
    auto [rep, off0] = canonical_shift_rep(class_rep.monic());
    (void)off0;
    int g = 0;
    auto scan = [&](const UPoly& part, int sign) {
        if (part.is_constant()) return;
        for (const auto& [f, e] : factor_q(part).factors) {
            if (shift_equivalent(f, rep)) g += sign * e;
        }
    };
    scan(a.num(), +1);
    scan(a.den(), -1);
    return g;
}

LocalTypeProfile type_profile(const RatFunc& a) {
    if (a.is_zero()) throw std::invalid_argument("type_profile: zero input");
    LocalTypeProfile prof;
    auto scan = [&](const UPoly& part, int sign) {
        if (part.is_constant()) return;
        for (const auto& [f, e] : factor_q(part).factors) {
            auto [rep, off] = canonical_shift_rep(f);
            (void)off;
            prof.entries[rep] += sign * e;
        }
    };
    scan(a.num(), +1);
    scan(a.den(), -1);
    for (auto it = prof.entries.begin(); it != prof.entries.end();)
        it = it->second == 0 ? prof.entries.erase(it) : std::next(it);
    return prof;
}

LocalTypeProfile type_profile(const Candidate& cand) {
    return type_profile(RatFunc(cand.a, cand.b));
}

bool same_type(const Candidate& l1, const Candidate& l2) {
    if (l1.c != l2.c) return false;
    return type_profile(l1) == type_profile(l2);
}

std::optional<RatFunc> solve_tau_quotient(const RatFunc& mu) {
    if (mu.is_zero()) return std::nullopt;
    // per shift class: offset -> signed exponent
    std::map<UPoly, std::map<long, long>> classes;
    auto scan = [&](const UPoly& part, long sign) {
        if (part.is_constant()) return;
        for (const auto& [f, e] : factor_q(part).factors) {
            auto [rep, off] = canonical_shift_rep(f);
            classes[rep][off] += sign * e;
        }
    };
    scan(mu.num(), +1);
    scan(mu.den(), -1);
    RatFunc rho(1);
    for (auto& [rep, exps] : classes) {
        long total = 0;
        for (const auto& [off, e] : exps) total += e;
        if (total != 0) return std::nullopt;
        // telescoping: tau^a(p)/tau^b(p) = tau(w)/w with w = prod_{j=b}^{a-1} tau^j(p)
        while (true) {
            auto first = exps.begin();
            while (first != exps.end() && first->second == 0) ++first;
            if (first == exps.end()) break;
            auto second = std::next(first);
            while (second != exps.end() && second->second == 0) ++second;
            if (second == exps.end()) return std::nullopt;
            const long o1 = first->first, o2 = second->first;
            const long k = std::min(std::abs(first->second), std::abs(second->second));
            UPoly w(1);
            for (long j = o1; j < o2; ++j) w *= tau_poly(rep, j);
            RatFunc piece = (first->second > 0) ? RatFunc(UPoly(1), w.pow(static_cast<unsigned>(k)))
                                                : RatFunc(w.pow(static_cast<unsigned>(k)));
            rho = rho * piece;
            const long s1 = first->second > 0 ? -k : k;
            first->second += s1;
            second->second -= s1;
        }
    }
    if (mu != rho.tau(1) / rho) return std::nullopt;  // catches a constant part != 1
    return rho;
}

std::vector<ClassPlacements> class_placements(const Factorization& denom_m,
                                              const Factorization& denom_minv) {
    std::vector<ClassPlacements> out;
    auto add = [&](const UPoly& p, int mult, bool den_side) {
        auto [rep, off] = canonical_shift_rep(p);
        ClassPlacements* ctx = nullptr;
        for (auto& c : out)
            if (c.canonical == rep) ctx = &c;
        if (!ctx) {
            out.push_back(ClassPlacements{rep, {}});
            ctx = &out.back();
        }
        ClassPlacements::Slot* slot = nullptr;
        for (auto& s : ctx->slots)
            if (s.offset == off) slot = &s;
        if (!slot) {
            ctx->slots.push_back({off, 0, 0});
            slot = &ctx->slots.back();
        }
        (den_side ? slot->den_mult : slot->num_mult) += mult;
    };
    for (const auto& [p, e] : denom_m.factors) add(p, e, true);
    for (const auto& [p, e] : denom_minv.factors) add(p, e, false);
    for (auto& c : out)
        std::sort(c.slots.begin(), c.slots.end(),
                  [](const auto& a, const auto& b) { return a.offset < b.offset; });
    std::sort(out.begin(), out.end(),
              [](const ClassPlacements& a, const ClassPlacements& b) { return a.canonical < b.canonical; });
    return out;
}

Candidate minimal_representative(const LocalTypeProfile& profile, const BigRat& c,
                                 const std::vector<ClassPlacements>& context) {
    // every profile class must be admissible
    for (const auto& [rep, g] : profile.entries) {
        if (g == 0) continue;
        bool known = false;
        for (const auto& cl : context)
            if (cl.canonical == rep) known = true;
        if (!known) throw std::invalid_argument("minimal_representative: class not in context");
    }
    UPoly a(1), b(1);
    // the smallest slc member of the type can pick up factors even on classes
    // where the local type is zero, so minimize over every context class
    for (const auto& ctx_ref : context) {
        const ClassPlacements* ctx = &ctx_ref;
        const UPoly& rep = ctx->canonical;
        const int g = profile.at(rep);

        // minimize sum n_j * offset_j subject to lo_j <= n_j <= hi_j, sum = g:
        // start from the lower bounds and fill upward at the smallest offsets.
        long need = g;
        std::vector<long> n(ctx->slots.size());
        for (size_t j = 0; j < ctx->slots.size(); ++j) {
            n[j] = -ctx->slots[j].den_mult;
            need -= n[j];
        }
        if (need < 0) throw std::invalid_argument("minimal_representative: infeasible profile (below range)");
        for (size_t j = 0; j < ctx->slots.size() && need > 0; ++j) {
            long cap = ctx->slots[j].num_mult + ctx->slots[j].den_mult;  // hi - lo
            long take = std::min(need, cap);
            n[j] += take;
            need -= take;
        }
        if (need != 0) throw std::invalid_argument("minimal_representative: infeasible profile (above range)");

        // local optimality: no admissible single move tau^i(p)/tau^j(p) with i < j
        // can lower the slc (the smallest-slc criterion certifies minimality)
        for (size_t i = 0; i < n.size(); ++i)
            for (size_t j = 0; j < n.size(); ++j) {
                if (i == j) continue;
                bool can_inc = n[i] < ctx->slots[i].num_mult;
                bool can_dec = n[j] > -ctx->slots[j].den_mult;
                if (can_inc && can_dec && ctx->slots[i].offset < ctx->slots[j].offset)
                    throw hd_error("minimal_representative: local minimality violated");
            }

        for (size_t j = 0; j < n.size(); ++j) {
            if (n[j] == 0) continue;
            UPoly member = tau_poly(rep, ctx->slots[j].offset);
            if (n[j] > 0)
                a *= member.pow(static_cast<unsigned>(n[j]));
            else
                b *= member.pow(static_cast<unsigned>(-n[j]));
        }
    }
    return Candidate(c, a, b);
}

}  // namespace hyperdelta
