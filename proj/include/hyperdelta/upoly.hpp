#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace hyperdelta {

// Dense univariate polynomial over Q. Coefficients are indexed by degree and
// kept trimmed (no trailing zeros); the zero polynomial has an empty vector
// and its degree is reported as "minus infinity" via an empty optional.
class UPoly {
   public:
    UPoly() = default;
    UPoly(const BigRat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    UPoly(long c) : UPoly(BigRat(c)) {}
    explicit UPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly x() { return monomial(BigRat(1), 1); }
    static UPoly monomial(const BigRat& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (is_zero()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    // degree of a nonzero polynomial; throws on the zero polynomial
    int deg() const {
        if (is_zero()) throw std::invalid_argument("deg of zero polynomial");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const BigRat& lc() const {
        if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && lc() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    BigRat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRat(0);
        return coeffs_[i];
    }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const BigRat& s);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const BigRat& s) { return a *= s; }
    friend UPoly operator*(const BigRat& s, UPoly a) { return a *= s; }

    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }
    // total order for use as map keys: by degree, then lexicographic coefficients
    bool operator<(const UPoly& o) const;

    BigRat eval(const BigRat& v) const;
    UPoly derivative() const;
    UPoly monic() const;
    UPoly pow(unsigned e) const;

   private:
    std::vector<BigRat> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

// a = q*b + r with deg r < deg b; throws on b = 0
std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b);

// exact division; throws if the remainder is nonzero
UPoly poly_exact_div(const UPoly& a, const UPoly& b);

// monic gcd; throws if both inputs are zero
UPoly poly_gcd(const UPoly& a, const UPoly& b);

UPoly poly_lcm(const UPoly& a, const UPoly& b);

// p(x + k), computed exactly
UPoly tau_poly(const UPoly& p, long k);

// rational content with sign of the leading coefficient; content(0) = 0
BigRat poly_content(const UPoly& p);

// content/primitive split of a vector of polynomials:
// v = unit * g * primitive with g the monic poly gcd of the entries,
// unit the rational content (carrying the sign), and primitive of unit content.
struct VectorContent {
    BigRat unit;
    UPoly poly;  // monic
};
std::pair<VectorContent, std::vector<UPoly>> content_primitive(const std::vector<UPoly>& v);

}  // namespace hyperdelta
