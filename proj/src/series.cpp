#include "hyperdelta/series.hpp"

#include <algorithm>

namespace hyperdelta {

TruncSeries TruncSeries::constant(const BigRat& c, int prec) {
    std::vector<BigRat> v(static_cast<size_t>(std::max(prec, 1)), BigRat(0));
    v[0] = c;
    return TruncSeries(0, std::move(v));
}

void TruncSeries::normalize() {
    size_t lead = 0;
    while (lead < a_.size() && a_[lead] == 0) ++lead;
    if (lead > 0 && lead < a_.size()) {
        // keep window end fixed; drop leading zeros by raising low_
        a_.erase(a_.begin(), a_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
}

bool TruncSeries::known_zero() const {
    for (const auto& c : a_)
        if (c != 0) return false;
    return true;
}

int TruncSeries::valuation() const {
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != 0) return low_ + static_cast<int>(i);
    throw precision_error("TruncSeries: valuation unknown at this precision");
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    // the sum is known where both operands are known
    int lo = std::min(x.low_, y.low_);
    int end = std::min(x.prec_end(), y.prec_end());
    if (end <= lo) throw precision_error("TruncSeries: empty window in sum");
    std::vector<BigRat> v(static_cast<size_t>(end - lo), BigRat(0));
    for (int k = lo; k < end; ++k) {
        BigRat c(0);
        if (k >= x.low_ && k < x.prec_end()) c += x.a_[static_cast<size_t>(k - x.low_)];
        if (k >= y.low_ && k < y.prec_end()) c += y.a_[static_cast<size_t>(k - y.low_)];
        v[static_cast<size_t>(k - lo)] = c;
    }
    return TruncSeries(lo, std::move(v));
}

TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) { return x + (-y); }

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    // product window: valuations add, relative precision is the minimum
    int lo = x.low_ + y.low_;
    int rel = std::min(static_cast<int>(x.a_.size()), static_cast<int>(y.a_.size()));
    if (rel <= 0) throw precision_error("TruncSeries: empty window in product");
    std::vector<BigRat> v(static_cast<size_t>(rel), BigRat(0));
    for (size_t i = 0; i < x.a_.size(); ++i) {
        if (x.a_[i] == 0) continue;
        for (size_t j = 0; j < y.a_.size() && i + j < static_cast<size_t>(rel); ++j)
            v[i + j] += x.a_[i] * y.a_[j];
    }
    return TruncSeries(lo, std::move(v));
}

TruncSeries operator*(const BigRat& s, const TruncSeries& y) {
    TruncSeries r = y;
    for (auto& c : r.a_) c *= s;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    int v = valuation();
    size_t off = static_cast<size_t>(v - low_);
    size_t n = a_.size() - off;
    const BigRat& l = a_[off];
    std::vector<BigRat> inv(n, BigRat(0));
    inv[0] = BigRat(1) / l;
    for (size_t k = 1; k < n; ++k) {
        BigRat acc(0);
        for (size_t j = 1; j <= k; ++j) acc += a_[off + j] * inv[k - j];
        inv[k] = -acc / l;
    }
    return TruncSeries(-v, std::move(inv));
}

TruncSeries TruncSeries::one_plus_t_pow(const BigRat& e, int prec) {
    std::vector<BigRat> v(static_cast<size_t>(std::max(prec, 1)));
    for (int k = 0; k < std::max(prec, 1); ++k) v[static_cast<size_t>(k)] = rat_binomial(e, static_cast<unsigned long>(k));
    return TruncSeries(0, std::move(v));
}

TruncSeries TruncSeries::tau() const {
    // tau(t^k) = t^k (1+t)^{-k}; combine with the window's relative precision
    int rel = static_cast<int>(a_.size());
    if (rel <= 0) throw precision_error("TruncSeries: empty window in tau");
    TruncSeries acc = TruncSeries::zero(low_, rel);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        int k = low_ + static_cast<int>(i);
        int need = rel - static_cast<int>(i);
        if (need <= 0) break;
        TruncSeries term = a_[i] * one_plus_t_pow(BigRat(-k), rel).shifted(k);
        acc = acc + term;
    }
    return acc;
}

TruncSeries TruncSeries::truncated_to(int prec) const {
    if (prec >= static_cast<int>(a_.size())) return *this;
    if (prec <= 0) throw precision_error("TruncSeries: truncate to empty window");
    std::vector<BigRat> v(a_.begin(), a_.begin() + prec);
    return TruncSeries(low_, std::move(v));
}

TruncSeries expand_at_infinity(const RatFunc& f, int prec) {
    if (prec <= 0) throw std::invalid_argument("expand_at_infinity: precision must be positive");
    if (f.is_zero()) return TruncSeries::zero(0, prec);
    const UPoly& n = f.num();
    const UPoly& d = f.den();
    const int v = f.ord_inf();
    // reverse coefficients: N(1/t) t^degN has constant term lc
    const int dn = n.deg(), dd = d.deg();
    std::vector<BigRat> nr(static_cast<size_t>(prec), BigRat(0));
    for (int i = 0; i <= dn && i < prec; ++i) nr[static_cast<size_t>(i)] = n.coeff(dn - i);
    std::vector<BigRat> dr(static_cast<size_t>(prec), BigRat(0));
    for (int i = 0; i <= dd && i < prec; ++i) dr[static_cast<size_t>(i)] = d.coeff(dd - i);
    // power series division nr/dr
    std::vector<BigRat> q(static_cast<size_t>(prec), BigRat(0));
    const BigRat l = dr[0];
    for (int k = 0; k < prec; ++k) {
        BigRat acc = nr[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j) acc -= dr[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc / l;
    }
    return TruncSeries(v, std::move(q));
}

BigRat coeff_at_infinity(const RatFunc& f, int k) {
    if (f.is_zero()) return BigRat(0);
    int v = f.ord_inf();
    if (k < v) return BigRat(0);
    return expand_at_infinity(f, k - v + 1).coeff(k);
}

}  // namespace hyperdelta
