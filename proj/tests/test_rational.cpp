#include <random>

#include "cyl/rational.hpp"
#include "doctest.h"

using namespace ca;

namespace {

RationalPoint pt(Rational a, Rational b, Rational c, std::map<Index, UValue> more = {}) {
    more[0] = a;
    more[1] = b;
    more[2] = c;
    return RationalPoint::of(more);
}

}  // namespace

TEST_CASE("membership in g and T") {
    auto s = pt(0, 1, 2);
    CHECK(in_T(s, 8));
    CHECK(rational_g_membership(s, 8));
    auto t = pt(0, Rational(3, 2), 2);
    CHECK(in_T(t, 8));
    CHECK_FALSE(rational_g_membership(t, 8));
    auto f = s.with(3, Tagged{3, 1});
    CHECK(flip_count(f) == 1);
    CHECK_FALSE(rational_g_membership(f, 8));
    CHECK(rational_g_membership(t.with(3, Tagged{3, 1}), 8));
    CHECK_FALSE(in_T(pt(0, 2, 1), 8));
    CHECK_FALSE(in_T(pt(0, 0, 1), 8));
    CHECK_THROWS_AS(s.with(3, Rational(1)), MalformedPoint);
    CHECK_THROWS_AS(s.with(3, Tagged{4, 0}), MalformedPoint);
    CHECK_THROWS_AS(s.with(1, Tagged{1, 0}), MalformedPoint);
    CHECK_THROWS_AS(in_T(s.with(9, Tagged{9, 1}), 8), MalformedPoint);
    CHECK(s.with(3, Tagged{3, 0}) == s);  // back to p
}

TEST_CASE("cut witnesses") {
    auto s = pt(0, 1, 2);
    auto w1 = cut_witnesses(s, 1, 8);
    CHECK(std::get<Rational>(w1.u) == 1);
    CHECK(std::get<Rational>(w1.v) == Rational(1, 2));
    CHECK(w1.u_in_g);
    auto w0 = cut_witnesses(s, 0, 8);
    CHECK(std::get<Rational>(w0.u) == 0);
    CHECK(std::get<Rational>(w0.v) < 0);
    auto w3 = cut_witnesses(s, 3, 8);
    CHECK(std::get<Tagged>(w3.v) == Tagged{3, 1});
    CHECK(w3.u_in_g);
    CHECK_THROWS(cut_witnesses(pt(2, 1, 0), 1, 8));

    std::mt19937_64 rng(10);
    int in_g = 0;
    for (int k = 0; k < 100; ++k) {
        auto p = random_T_point(rng, 8);
        REQUIRE(in_T(p, 8));
        in_g += rational_g_membership(p, 8);
        for (Index i = 0; i < 8; ++i) {
            auto w = cut_witnesses(p, i, 8);
            CHECK(rational_g_membership(p.with(i, w.u), 8) == w.u_in_g);
            CHECK(rational_g_membership(p.with(i, w.v), 8) != w.u_in_g);
        }
    }
    CHECK(in_g > 10);
    CHECK(in_g < 90);
}

TEST_CASE("piecewise-linear automorphisms") {
    auto m = pl_automorphism({0, 1}, {0, 2});
    CHECK(m(Rational(1, 2)) == 1);
    CHECK(m(1) == 2);
    CHECK(m(-5) == -5);
    CHECK(m(7) == 7);
    auto id = pl_automorphism({0, 1, 2}, {0, 1, 2}, std::make_pair(Rational(-10), Rational(3)));
    for (auto x : {Rational(-20), Rational(0), Rational(1), Rational(2), Rational(5, 3)}) CHECK(id(x) == x);
    auto id2 = pl_automorphism({0, 1, 2}, {0, 1, 2}, std::make_pair(Rational(-1, 2), Rational(100)));
    for (auto x : {Rational(0), Rational(1), Rational(2)}) CHECK(id2(x) == x);
    CHECK_THROWS(pl_automorphism({1, 0}, {0, 1}));
    CHECK_THROWS(pl_automorphism({0, 1}, {0}));
    CHECK_THROWS(pl_automorphism({0, 1}, {0, 1}, std::make_pair(Rational(0), Rational(5))));

    std::mt19937_64 rng(12);
    for (int k = 0; k < 30; ++k) {
        std::set<Rational> A, B;
        while (A.size() < 4) A.insert(random_rational(rng));
        while (B.size() < 4) B.insert(random_rational(rng));
        std::vector<Rational> a(A.begin(), A.end()), b(B.begin(), B.end());
        auto f = pl_automorphism(a, b);
        auto g = f.inverse();
        for (std::size_t i = 0; i < 4; ++i) CHECK(f(a[i]) == b[i]);
        for (int t = 0; t < 50; ++t) {
            auto x = random_rational(rng, 30), y = random_rational(rng, 30);
            CHECK((x < y) == (f(x) < f(y)));
            CHECK(g(f(x)) == x);
        }
    }
}

TEST_CASE("good permutations") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 50; ++k) {
        auto s = random_T_point(rng, 6), z = random_T_point(rng, 6);
        auto pi = transporter(s, z, 6);
        CHECK(pi(s) == z);
        // leaves T fixed on samples
        for (int t = 0; t < 10; ++t) {
            auto q = random_T_point(rng, 6);
            CHECK(in_T(pi(q), 8));
        }
        auto bad = pt(3, 2, 1);
        CHECK_FALSE(in_T(pi(bad), 8));
    }
    GoodPermutation flip;
    flip.swapped = {4};
    CHECK(flip.fixes({Rational(3), Tagged{3, 0}, Tagged{5, 1}}));
    CHECK_FALSE(flip.fixes({Tagged{4, 0}}));
    // swapping one block changes the parity, so g is not invariant
    auto s = pt(0, 1, 2);
    CHECK(rational_g_membership(s, 8) != rational_g_membership(flip(s), 8));
}
