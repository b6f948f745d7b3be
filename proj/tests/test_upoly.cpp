#include <doctest.h>

#include "testutil.hpp"

using namespace hyperdelta;
using testutil::P;
using testutil::Rng;

TEST_CASE("poly_divmod basics") {
    auto [q1, r1] = poly_divmod(P("x^2+1"), P("x"));
    CHECK(q1 == P("x"));
    CHECK(r1 == P("1"));

    auto [q2, r2] = poly_divmod(P("x*(x+2)^2*(x+3)"), P("x+2"));
    CHECK(r2.is_zero());
    CHECK(q2 == P("x*(x+2)*(x+3)"));

    auto [q3, r3] = poly_divmod(P("1"), P("x"));
    CHECK(q3.is_zero());
    CHECK(r3 == P("1"));

    CHECK_THROWS_AS(poly_divmod(P("x"), UPoly()), std::invalid_argument);
}

TEST_CASE("poly_divmod round-trip on random inputs") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        UPoly a = rng.poly(6, 9);
        UPoly b = rng.nonzero_poly(4, 9);
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(r.deg() < b.deg());
    }
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(poly_gcd(P("(x+1)^2*(x+2)"), P("(x+1)*(x+3)")) == P("x+1"));
    CHECK(poly_gcd(P("5"), P("x")) == P("1"));
    CHECK_THROWS_AS(poly_gcd(UPoly(), UPoly()), std::invalid_argument);

    // divides both, cofactors coprime
    UPoly g = poly_gcd(P("(x+1)^2*(x+2)"), P("(x+1)*(x+3)"));
    CHECK(poly_divmod(P("(x+1)^2*(x+2)"), g).second.is_zero());
    CHECK(poly_divmod(P("(x+1)*(x+3)"), g).second.is_zero());
}

TEST_CASE("tau_poly") {
    CHECK(tau_poly(P("x"), 1) == P("x+1"));
    CHECK(tau_poly(P("x^2"), 1) == P("x^2+2*x+1"));
    CHECK(tau_poly(P("(x+1)*(x+2)"), -1) == P("x*(x+1)"));
}

TEST_CASE("tau_poly composes additively") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        UPoly p = rng.poly(5, 6);
        long k1 = rng.range(-4, 4), k2 = rng.range(-4, 4);
        CHECK(tau_poly(tau_poly(p, k1), k2) == tau_poly(p, k1 + k2));
    }
}

TEST_CASE("content_primitive") {
    {
        auto [c, prim] = content_primitive({P("x^2"), P("x")});
        CHECK(c.unit == BigRat(1));
        CHECK(c.poly == P("x"));
        CHECK(prim[0] == P("x"));
        CHECK(prim[1] == P("1"));
    }
    {
        auto [c, prim] = content_primitive({P("(x+1)^2"), P("(x+1)*(x+2)")});
        CHECK(c.poly == P("x+1"));
        CHECK(prim[0] == P("x+1"));
        CHECK(prim[1] == P("x+2"));
    }
    {
        auto [c, prim] = content_primitive({P("2"), P("4*x")});
        CHECK(c.unit == BigRat(2));
        CHECK(c.poly == P("1"));
        CHECK(prim[0] == P("1"));
        CHECK(prim[1] == P("2*x"));
    }
    CHECK_THROWS_AS(content_primitive({UPoly(), UPoly()}), std::invalid_argument);
}

TEST_CASE("content_primitive reconstructs and is idempotent") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        std::vector<UPoly> v = {rng.poly(4, 8), rng.poly(4, 8), rng.poly(3, 8)};
        bool all_zero = true;
        for (const auto& p : v)
            if (!p.is_zero()) all_zero = false;
        if (all_zero) continue;
        auto [c, prim] = content_primitive(v);
        for (size_t k = 0; k < v.size(); ++k) CHECK(prim[k] * c.poly * c.unit == v[k]);
        auto [c2, prim2] = content_primitive(prim);
        CHECK(c2.unit == BigRat(1));
        CHECK(c2.poly == P("1"));
        CHECK(prim2 == prim);
    }
}
