#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperdelta {

// Exact rational arithmetic over Q. GMP keeps values canonical
// (gcd(num, den) = 1, den >= 1), which is exactly the invariant we need.
using BigRat = mpq_class;
using BigInt = mpz_class;

struct hd_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_matrix_error : hd_error {
    using hd_error::hd_error;
};

struct budget_error : hd_error {
    using hd_error::hd_error;
};

// a violated internal invariant (maps to a distinct process exit code)
struct internal_error : hd_error {
    using hd_error::hd_error;
};

struct parse_error : hd_error {
    size_t pos;
    parse_error(const std::string& msg, size_t position)
        : hd_error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

inline BigRat rat(long n) { return BigRat(n); }
inline BigRat rat(long n, long d) {
    BigRat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

// floor(q) as an exact integer
inline BigInt rat_floor(const BigRat& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline BigRat rat_pow(const BigRat& q, long e) {
    if (e == 0) return BigRat(1);
    if (q == 0 && e < 0) throw std::invalid_argument("rat_pow: zero base, negative exponent");
    BigRat base = e > 0 ? q : BigRat(1) / q;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    BigRat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// gcd on Q: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), nonnegative
inline BigRat rat_gcd(const BigRat& a, const BigRat& b) {
    BigInt gn, lid;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(lid.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    BigRat r(gn, lid);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const BigRat& q) { return q.get_str(); }

inline BigInt int_binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// falling factorial d*(d-1)*...*(d-k+1) over Q
inline BigRat rat_falling(const BigRat& d, unsigned long k) {
    BigRat acc(1);
    for (unsigned long i = 0; i < k; ++i) acc *= (d - BigRat(static_cast<long>(i)));
    return acc;
}

// generalized binomial coefficient C(d, k) for rational d
inline BigRat rat_binomial(const BigRat& d, unsigned long k) {
    BigRat acc = rat_falling(d, k);
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return acc / BigRat(f);
}

}  // namespace hyperdelta
