#include <random>

#include "cyl/builders.hpp"
#include "cyl/parser.hpp"
#include "cyl/term.hpp"
#include "doctest.h"
#include "reference.hpp"

using namespace ca;

namespace {
Term T(const std::string& s) { return parse_term(s); }
Equation E(const std::string& s) { return parse_equation(s); }
std::set<Index> S(std::initializer_list<Index> l) { return std::set<Index>(l); }
}  // namespace

TEST_CASE("parse maps the grammar onto the tree") {
    CHECK(T("c0(d0,1 & x)") == cyl(0, prod(diag(0, 1), var("x"))));
    CHECK(E("x <= y") == Equation{sum(var("x"), var("y")), var("y")});
    CHECK(T("~x & y ^ z + w") == sum(symdiff(prod(comp(var("x")), var("y")), var("z")), var("w")));
    CHECK(T("x + y + z") == sum(sum(var("x"), var("y")), var("z")));
    CHECK(T("c12(x_1)") == cyl(12, var("x_1")));
    CHECK(T("d10 , 2") == diag(10, 2));
    CHECK(T("cx") == var("cx"));
    CHECK(T(" ~ ~0 ") == comp(comp(zero())));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse("c0(x +");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("x = = y"), ParseError);
    CHECK_THROWS_AS(parse("c0 x"), ParseError);
    CHECK_THROWS_AS(parse("x )"), ParseError);
    CHECK_THROWS_AS(parse("X"), ParseError);
    ParseOptions o;
    o.dim_bound = 3;
    CHECK_NOTHROW(parse("c2(d0,1)", o));
    try {
        parse("c0(d0,3)", o);
        FAIL("expected range error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
    }
}

TEST_CASE("equation files skip comments and blank lines") {
    auto es = parse_equation_file("# header\n\nx = x   # trailing\n  c0(x) <= 1\n");
    REQUIRE(es.size() == 2);
    CHECK(es[1] == leq(cyl(0, var("x")), one()));
    try {
        parse_equation_file("x = x\ny +\n");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("printer round trip on random terms") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        Term t = ref::random_term(rng, {"x", "y", "z1"}, 13, 6);
        CHECK(parse_term(to_string(t)) == t);
    }
    CHECK(to_string(T("c0(d0,1 & x)")) == "c0(d0,1 & x)");
    CHECK(to_string(T("~(x+y)&c1(~x)")) == "~(x + y) & c1(~x)");
    Equation e = E("x & y <= y");
    CHECK(parse_equation(to_string(e)) == e);
}

TEST_CASE("indices") {
    CHECK(indices(T("c0(d1,2 & x)")) == S({0, 1, 2}));
    CHECK(indices(var("x")).empty());
    CHECK(indices(T("d0,1 ^ d2,3")) == S({0, 1, 2, 3}));
}

TEST_CASE("renaming") {
    Renaming r = Renaming::swap(0, 3);
    CHECK(rename(T("c0(d0,1 & x)"), r) == T("c3(d3,1 & x)"));
    Term t = T("c0(d1,2 & c2(x)) + y");
    CHECK(rename(t, Renaming()) == t);
    CHECK_THROWS(Renaming({{0, 1}, {2, 1}}));

    Renaming cyc({{0, 1}, {1, 2}, {2, 0}});
    Equation e = build_master_equation();
    Equation e120 = rename(e, cyc);
    std::set<Index> img;
    for (auto i : indices(e)) img.insert(cyc(i));
    CHECK(indices(e120) == img);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        std::vector<Index> p{0, 1, 2, 3, 4}, q{0, 1, 2, 3, 4};
        std::shuffle(p.begin(), p.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        Renaming rho = Renaming::from_permutation(p), eta = Renaming::from_permutation(q);
        Term u = ref::random_term(rng, {"x", "y"}, 5, 5);
        CHECK(rename(u, rho.compose(eta)) == rename(rename(u, eta), rho));
        CHECK(rename(rename(u, rho), rho.inverse()) == u);
        std::set<Index> im;
        for (auto i : indices(u)) im.insert(rho(i));
        CHECK(indices(rename(u, rho)) == im);
    }
}

TEST_CASE("substitution") {
    Equation e = E("x & y = y & x");
    CHECK(substitute(e, {{"x", T("c5(x)")}, {"y", T("c5(y)")}}) == E("c5(x) & c5(y) = c5(y) & c5(x)"));
    CHECK(substitute(e, {}) == e);
    CHECK(substitute(E("x = x"), {{"x", diag(0, 1)}}) == E("d0,1 = d0,1"));
    // simultaneous, not sequential
    CHECK(substitute(E("x = y"), {{"x", var("y")}, {"y", var("x")}}) == E("y = x"));
}

TEST_CASE("substitution terms") {
    CHECK(subst_term(0, 1, var("x")) == T("c0(d0,1 & x)"));
    CHECK(subst_term(1, 2, T("c2(x)")) == T("c1(d1,2 & c2(x))"));
    CHECK_THROWS(subst_term(0, 0, var("x")));
    Term x = var("x");
    CHECK(pair_subst_term(1, 2, x) == subst_term(0, 1, subst_term(1, 2, x)));
    CHECK(pair_subst_term(0, 1, x) == x);
    CHECK(pair_subst_term(0, 2, x) == subst_term(1, 2, x));
    CHECK(pair_subst_term(1, 0, x) == subst_term(2, 0, subst_term(0, 1, subst_term(1, 2, cyl(2, x)))));
    CHECK_THROWS(pair_subst_term(1, 0, x, Index{2}));
    CHECK_THROWS(pair_subst_term(3, 3, x));
}

TEST_CASE("master equation components") {
    auto m = build_master();
    Term z = T("c0(x) & c2(x)");
    CHECK(m.z == z);
    CHECK(m.beta == substitute(T("(c0(x) ^ c0(z & ~x)) + (c1(x) ^ c1(z & ~x)) + (c2(x) ^ c2(z & ~x))"), {{"z", z}}));
    CHECK(m.iota == T("c2(x) & d0,1"));
    CHECK(m.gamma == T("c2(x) ^ c2(d2,1 & c1(d1,0 & c0(x)))"));
    CHECK(m.equation.rhs == cyl(0, cyl(1, cyl(2, sum(sum(m.beta, m.gamma), m.omega)))));
    CHECK(indices(m.equation) == S({0, 1, 2}));
    CHECK_THROWS(build_master(Index{2}));
}

TEST_CASE("uniform-block equations") {
    auto u = build_uniform(2);
    CHECK(u.delta == T("c0(~c1(a))"));
    CHECK(u.rho == T("c0(c1(d0,1 & ~a))"));
    CHECK(u.mu_less == T("c0(~c1(~d0,1 & a))"));
    CHECK(u.equation.rhs == one());
    // max index is n: mu_> cylindrifies c_0...c_n
    for (unsigned n = 2; n <= 5; ++n) {
        auto e = build_e_n(n);
        CHECK(*max_index(e) == n);
        CHECK(indices(e) == indices(build_uniform(n).mu_more));
    }
    CHECK_THROWS(build_e_n(1));
    CHECK_THROWS(build_e_n(3, Index{3}));
    CHECK_NOTHROW(build_e_n(3, Index{4}));
}

TEST_CASE("Henkin equations and a_m") {
    CHECK(build_henkin(0, 1) == E("c1(x & y & c0(x & ~y)) <= c0(c1(x) & ~d0,1)"));
    Renaming r({{0, 2}, {2, 0}, {1, 3}, {3, 1}});
    CHECK(build_henkin(2, 3) == rename(build_henkin(0, 1), r));
    CHECK(indices(build_henkin(0, 1)) == S({0, 1}));
    CHECK_THROWS(build_henkin(1, 1));
    CHECK(build_a_m(2) == T("c0(c1(~d0,1))"));
    CHECK(build_a_m(1) == T("c0(1)"));
    CHECK(indices(build_a_m(3)) == S({0, 1, 2}));
}

TEST_CASE("inductive premise recognizer") {
    auto m = inductive_premise_match(E("c3(x) & c3(y) = c3(y) & c3(x)"));
    REQUIRE(m.size() == 1);
    CHECK(m[0].i == 3);
    CHECK(m[0].premise_free == E("x & y = y & x"));
    CHECK(inductive_premise_match(E("c0(x) & y = y & c0(x)")).empty());
    CHECK(inductive_premise_match(E("c0(x) = c0(c0(x))")).empty());
    auto d = inductive_premise_match(E("d0,1 & c2(x) = c2(x) & d0,1"));
    REQUIRE(d.size() == 1);
    CHECK(d[0].premise_free == E("d0,1 & x = x & d0,1"));
    CHECK(inductive_premise_match(E("c1(x) & d0,1 = c1(x)")).empty());  // 1 occurs in e

    // soundness and completeness by re-substitution on random equations
    std::mt19937_64 rng(3);
    int hits = 0;
    for (int k = 0; k < 3000; ++k) {
        Term l = ref::random_term(rng, {"x", "y"}, 4, 4), r = ref::random_term(rng, {"x", "y"}, 4, 4);
        Equation e{l, r};
        for (Index i = 0; i < 6; ++i) {
            Substitution s;
            for (auto& v : variables(e)) s[v] = cyl(i, var(v));
            Equation big = substitute(e, s);
            bool expect = !indices(e).count(i);
            bool found = false;
            for (auto& mt : inductive_premise_match(big)) {
                Substitution s2;
                for (auto& v : variables(mt.premise_free)) s2[v] = cyl(mt.i, var(v));
                CHECK(substitute(mt.premise_free, s2) == big);
                CHECK(!indices(mt.premise_free).count(mt.i));
                if (mt.i == i && mt.premise_free == e) found = true;
            }
            if (expect && !variables(e).empty()) {
                CHECK(found);
                ++hits;
            }
        }
    }
    CHECK(hits > 100);
}
