#include "hyperdelta/upoly.hpp"

#include <algorithm>

namespace hyperdelta {

UPoly UPoly::monomial(const BigRat& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (c == 0) return UPoly();
    std::vector<BigRat> v(static_cast<size_t>(degree) + 1, BigRat(0));
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRat> r(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const BigRat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool UPoly::operator<(const UPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    }
    return false;
}

BigRat UPoly::eval(const BigRat& v) const {
    BigRat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<BigRat> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * BigRat(static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
    UPoly r = *this;
    const BigRat l = lc();
    if (l != 1)
        for (auto& c : r.coeffs_) c /= l;
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    if (a.is_zero() || a.deg() < b.deg()) return {UPoly(), a};
    std::vector<BigRat> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.deg();
    const BigRat& lb = b.lc();
    std::vector<BigRat> quo(static_cast<size_t>(a.deg() - db) + 1, BigRat(0));
    for (int i = a.deg(); i >= db; --i) {
        BigRat c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        c /= lb;
        quo[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly poly_exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::invalid_argument("poly_exact_div: division is not exact");
    return q;
}

UPoly poly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
    UPoly f = a, g = b;
    while (!g.is_zero()) {
        UPoly r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
        // keep coefficients small; gcd is only defined up to a unit
        if (!g.is_zero()) g = g.monic();
    }
    return f.monic();
}

UPoly poly_lcm(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    return poly_exact_div(a * b, poly_gcd(a, b)).monic();
}

UPoly tau_poly(const UPoly& p, long k) {
    if (p.is_zero() || k == 0 || p.is_constant()) return p;
    const int d = p.deg();
    // q_j = sum_{i>=j} c_i * C(i,j) * k^(i-j)
    std::vector<BigRat> kpow(static_cast<size_t>(d) + 1);
    kpow[0] = 1;
    for (int i = 1; i <= d; ++i) kpow[static_cast<size_t>(i)] = kpow[static_cast<size_t>(i - 1)] * BigRat(k);
    std::vector<BigRat> q(static_cast<size_t>(d) + 1, BigRat(0));
    for (int j = 0; j <= d; ++j) {
        BigRat acc(0);
        for (int i = j; i <= d; ++i) {
            const BigRat c = p.coeff(i);
            if (c == 0) continue;
            acc += c * BigRat(int_binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j))) *
                   kpow[static_cast<size_t>(i - j)];
        }
        q[static_cast<size_t>(j)] = acc;
    }
    return UPoly(std::move(q));
}

BigRat poly_content(const UPoly& p) {
    if (p.is_zero()) return BigRat(0);
    BigRat g(0);
    for (const auto& c : p.coeffs()) g = rat_gcd(g, c);
    if (p.lc() < 0) g = -g;
    return g;
}

std::pair<VectorContent, std::vector<UPoly>> content_primitive(const std::vector<UPoly>& v) {
    bool all_zero = true;
    for (const auto& p : v)
        if (!p.is_zero()) all_zero = false;
    if (v.empty() || all_zero) throw std::invalid_argument("content_primitive: zero vector");

    UPoly g;
    bool first = true;
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        g = first ? p.monic() : poly_gcd(g, p);
        first = false;
    }
    BigRat unit(0);
    std::vector<UPoly> mid;
    mid.reserve(v.size());
    for (const auto& p : v) {
        UPoly q = p.is_zero() ? UPoly() : poly_exact_div(p, g);
        if (!q.is_zero()) unit = rat_gcd(unit, poly_content(q));
        mid.push_back(std::move(q));
    }
    // sign convention: the first nonzero entry of the primitive part has positive lc
    for (const auto& q : mid) {
        if (!q.is_zero()) {
            if (q.lc() < 0) unit = -unit;
            break;
        }
    }
    std::vector<UPoly> prim;
    prim.reserve(mid.size());
    for (auto& q : mid) prim.push_back(q * (BigRat(1) / unit));
    return {{unit, g}, std::move(prim)};
}

}  // namespace hyperdelta
