#pragma once

#include "upoly.hpp"

namespace hyperdelta {

// Rational function over Q(x) as a reduced fraction with monic denominator.
class RatFunc {
   public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const UPoly& n) : num_(n), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(UPoly n, UPoly d);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;

    // f(x + k)
    RatFunc tau(long k = 1) const { return RatFunc(tau_poly(num_, k), tau_poly(den_, k)); }

    // valuation at infinity in t = 1/x: deg(den) - deg(num); throws on zero
    int ord_inf() const {
        if (is_zero()) throw std::invalid_argument("ord_inf of zero");
        return den_.deg() - num_.deg();
    }
    // leading coefficient of the expansion at infinity
    BigRat lc_inf() const { return num_.lc() / den_.lc(); }

   private:
    UPoly num_, den_;
};

}  // namespace hyperdelta
