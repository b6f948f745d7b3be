#include "hyperdelta/ore.hpp"

namespace hyperdelta {

OrePoly OrePoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero operator");
    OrePoly r = *this;
    const RatFunc l = lc();
    for (auto& c : r.c_) c /= l;
    return r;
}

OrePoly OrePoly::operator-() const {
    OrePoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
    std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size()) v[i] += a.c_[i];
        if (i < b.c_.size()) v[i] += b.c_[i];
    }
    return OrePoly(std::move(v));
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) return OrePoly();
    std::vector<RatFunc> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] += a.c_[i] * b.c_[j].tau(static_cast<long>(i));
        }
    }
    return OrePoly(std::move(v));
}

std::pair<OrePoly, OrePoly> ore_right_divide(const OrePoly& l, const OrePoly& r) {
    if (r.is_zero()) throw std::invalid_argument("ore_right_divide: zero divisor");
    OrePoly rem = l, quo;
    const int dr = r.order();
    while (!rem.is_zero() && rem.order() >= dr) {
        const int k = rem.order() - dr;
        RatFunc c = rem.lc() / r.lc().tau(k);
        OrePoly term = OrePoly(c) * OrePoly::tau_power(k);
        quo = quo + term;
        rem = rem - term * r;
    }
    return {quo, rem};
}

MatRF companion_matrix(const OrePoly& l) {
    const int n = l.order();
    if (n < 1) throw std::invalid_argument("companion_matrix: order must be >= 1");
    MatRF m(n, n);
    for (int k = 0; k + 1 < n; ++k) m(k, k + 1) = RatFunc(1);
    const RatFunc an = l.coeff(n);
    for (int j = 0; j < n; ++j) m(n - 1, j) = -(l.coeff(j) / an);
    return m;
}

}  // namespace hyperdelta
