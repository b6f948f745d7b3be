#pragma once

#include "ratfunc.hpp"

namespace hyperdelta {

struct precision_error : hd_error {
    using hd_error::hd_error;
};

// Finite-precision Laurent expansion in t = 1/x. A series knows its
// coefficients for t^low .. t^(low+prec-1) and nothing beyond; reading past
// the window throws precision_error so drivers can retry with more terms.
class TruncSeries {
   public:
    // zero to the given precision window
    static TruncSeries zero(int low, int prec) { return TruncSeries(low, std::vector<BigRat>(prec, BigRat(0))); }
    static TruncSeries constant(const BigRat& c, int prec);

    TruncSeries(int low, std::vector<BigRat> coeffs) : low_(low), a_(std::move(coeffs)) { normalize(); }

    int low() const { return low_; }
    int prec_end() const { return low_ + static_cast<int>(a_.size()); }  // first unknown exponent
    bool known_zero() const;                                             // zero within the window

    // exact valuation if a nonzero coefficient is known; throws when the
    // window is exhausted without seeing one
    int valuation() const;

    BigRat coeff(int k) const {
        if (k >= prec_end()) throw precision_error("TruncSeries: coefficient beyond precision");
        if (k < low_) return BigRat(0);
        return a_[static_cast<size_t>(k - low_)];
    }
    BigRat lead() const { return coeff(valuation()); }

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries operator*(const BigRat& s, const TruncSeries& y);

    // multiplicative inverse (requires a known nonzero leading coefficient)
    TruncSeries inverse() const;

    // the shift action: t |-> t/(1+t) applied to the whole series
    TruncSeries tau() const;

    // (1+t)^e for rational e, as a series starting at t^0 with `prec` terms
    static TruncSeries one_plus_t_pow(const BigRat& e, int prec);

    TruncSeries shifted(int k) const {  // multiply by t^k
        TruncSeries r = *this;
        r.low_ += k;
        return r;
    }
    TruncSeries truncated_to(int prec) const;

    bool operator==(const TruncSeries& o) const { return low_ == o.low_ && a_ == o.a_; }

   private:
    int low_;
    std::vector<BigRat> a_;
    void normalize();  // slide the window so the first slot is nonzero (keep zeros tracked)
};

// Laurent expansion of a rational function at infinity with exactly `prec`
// known coefficients starting at its true valuation (zero maps to a tracked
// zero window)
TruncSeries expand_at_infinity(const RatFunc& f, int prec);

// coefficient of t^k in the expansion of f at infinity, exact
BigRat coeff_at_infinity(const RatFunc& f, int k);

}  // namespace hyperdelta
