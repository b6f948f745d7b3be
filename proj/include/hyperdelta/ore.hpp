#pragma once

#include "matrix.hpp"

namespace hyperdelta {

// Skew polynomial in Q(x)[tau] with the shift twist tau * a(x) = a(x+1) * tau.
class OrePoly {
   public:
    OrePoly() = default;
    OrePoly(const RatFunc& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit OrePoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static OrePoly tau_power(int k) {
        std::vector<RatFunc> v(static_cast<size_t>(k) + 1);
        v.back() = RatFunc(1);
        return OrePoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int order() const {
        if (is_zero()) throw std::invalid_argument("order of zero operator");
        return static_cast<int>(c_.size()) - 1;
    }
    RatFunc coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
        return c_[static_cast<size_t>(i)];
    }
    const RatFunc& lc() const {
        if (is_zero()) throw std::invalid_argument("lc of zero operator");
        return c_.back();
    }
    OrePoly monic() const;

    OrePoly operator-() const;
    friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b);  // noncommutative
    bool operator==(const OrePoly& o) const { return c_ == o.c_; }
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

   private:
    std::vector<RatFunc> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline OrePoly ore_mul(const OrePoly& a, const OrePoly& b) { return a * b; }

// L = Q*R + rem with order(rem) < order(R)
std::pair<OrePoly, OrePoly> ore_right_divide(const OrePoly& l, const OrePoly& r);

// companion system of a scalar operator: tau(Y) = C Y on the basis 1,tau,...,tau^(n-1)
MatRF companion_matrix(const OrePoly& l);

}  // namespace hyperdelta
