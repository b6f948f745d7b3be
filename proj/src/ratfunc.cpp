#include "hyperdelta/ratfunc.hpp"

namespace hyperdelta {

RatFunc::RatFunc(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (!den_.is_one()) {
        UPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
    }
    const BigRat l = den_.lc();
    if (l != 1) {
        num_ *= BigRat(1) / l;
        den_ = den_.monic();
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::invalid_argument("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

}  // namespace hyperdelta
