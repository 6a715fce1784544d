#include <fstream>
#include <random>

#include "cyl/builders.hpp"
#include "cyl/constructions.hpp"
#include "cyl/eval.hpp"
#include "cyl/laws.hpp"
#include "cyl/parser.hpp"
#include "cyl/oracle.hpp"
#include "doctest.h"
#include "json.hpp"
#include "reference.hpp"

using namespace ca;

namespace {

SetAlgebra diagonal_algebra(Index d, std::uint32_t u) { return SetAlgebra::generate(CylSpace::make(d, u), {}); }

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
    BitVector b(n);
    for (std::size_t k = 0; k < n; ++k) b.set(k, rng() & 1);
    return b;
}

}  // namespace

TEST_CASE("axiom instances respect the index bound") {
    auto ax = ca_axiom_instances(2);
    auto has = [&](const std::string& text) {
        auto e = parse_equation(text);
        for (auto& a : ax)
            if (a.equation == e) return true;
        return false;
    };
    CHECK(has("c0(c1(x)) = c1(c0(x))"));
    CHECK(has("d0,0 = 1"));
    CHECK(has("d0,1 = d1,0"));
    CHECK_FALSE(has("c1(c0(x)) = c0(c1(x))"));  // one orientation per pair
    for (auto& a : ax) {
        auto m = max_index(a.equation);
        CHECK((!m || *m < 2));
    }
    // C6 needs three distinct indices
    for (auto& a : ax) CHECK(a.group != "C6");
    auto ax3 = ca_axiom_instances(3);
    CHECK(std::count_if(ax3.begin(), ax3.end(), [](auto& a) { return a.group == "C6"; }) == 6);
    CHECK(ca_axiom_instances(0).size() == boolean_axioms().size());
}

TEST_CASE("set algebras satisfy every axiom instance") {
    for (std::uint32_t u : {2u, 3u}) {
        auto A = diagonal_algebra(3, u);
        auto rep = check_ca_axioms(A.atom_structure());
        CHECK(rep.all_pass());
    }
    auto sp = CylSpace::make(4, 2);
    std::mt19937_64 rng(5);
    auto A = SetAlgebra::generate(sp, {PointSet::random(sp, rng)});
    auto rep = check_ca_axioms(A.atom_structure());
    CHECK(rep.all_pass());
    for (auto& r : rep.results) CHECK(r.verdict.method == (r.verdict.method == "sat" ? "sat" : "enumeration"));
}

TEST_CASE("a corrupted cylindrification table breaks an axiom") {
    auto D = diagonal_algebra(3, 2);
    const auto& A = D.atom_structure();
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Index i = static_cast<Index>(rng() % 3);
        std::size_t a = rng() % A.atoms(), b = rng() % A.atoms();
        auto img = A.cyl_image(i, a);
        img.flip(b);
        auto bad = A.with_cyl_image(i, a, img);
        auto rep = check_ca_axioms(bad);
        REQUIRE_FALSE(rep.all_pass());
        for (auto& r : rep.results)
            if (r.verdict.fails()) CHECK_FALSE(holds_at(bad, r.axiom.equation, r.verdict.witness));
    }
}

TEST_CASE("split algebra structure") {
    auto S = SplitAlgebra::build(3, {1, 2, 2});
    CHECK(S.base().space()->base() == 5);
    CHECK(S.g().count() == 4);
    CHECK(S.base().decompose(S.g()).count() == 1);
    CHECK(S.atom_structure().atoms() == S.base().atom_count() + 1);
    CHECK_FALSE(S.to_base(S.g_prime()));
    CHECK_FALSE(S.to_base(S.g_second()));
    CHECK(S.join(S.g_prime(), S.g_second()) == S.from_base(S.g()));
    CHECK(S.meet(S.g_prime(), S.g_second()) == S.zero());
    CHECK_THROWS(SplitAlgebra::build(3, {2, 2, 2}));
    CHECK_THROWS(SplitAlgebra::build(3, {1, 1, 2}));
    CHECK_THROWS(SplitAlgebra::build(3, {1, 2}));

    std::mt19937_64 rng(2);
    const auto& A = S.atom_structure();
    for (int k = 0; k < 200; ++k) {
        auto x = S.from_atoms(random_bits(A.atoms(), rng));
        auto y = S.from_atoms(random_bits(A.atoms(), rng));
        REQUIRE(S.from_atoms(S.to_atoms(x)) == x);
        CHECK(S.to_atoms(S.complement(x)) == A.complement(S.to_atoms(x)));
        CHECK(S.to_atoms(S.join(x, y)) == A.join(S.to_atoms(x), S.to_atoms(y)));
        CHECK(S.to_atoms(S.sym(x, y)) == A.sym(S.to_atoms(x), S.to_atoms(y)));
        for (Index i = 0; i < 3; ++i) {
            CHECK(S.to_atoms(S.cyl(i, x)) == A.cyl(i, S.to_atoms(x)));
            // the defining clause
            auto b = x;
            b.h = 0;
            auto bg = S.join(b, S.from_base(S.g()));
            CHECK(S.cyl(i, S.join(b, S.g_prime())) == S.cyl(i, bg));
            CHECK(S.cyl(i, S.join(b, S.g_second())) == S.cyl(i, bg));
        }
        // base elements behave as in the set algebra
        auto b = x;
        b.h = (k % 2) ? 3 : 0;
        auto P = *S.to_base(b);
        for (Index i = 0; i < 3; ++i) CHECK(*S.to_base(S.cyl(i, b)) == cyl(i, P));
    }
    CHECK(check_ca_axioms(S.atom_structure()).all_pass());
}

TEST_CASE("Henkin's equation in the split algebra") {
    auto S = SplitAlgebra::build(3, {1, 2, 2});
    for (auto& h : henkin_matrix(S)) {
        INFO("e_" << h.i << h.j);
        CHECK(h.verdict.valid() == (h.i != 0));
        if (h.verdict.fails()) {
            auto e = build_henkin(h.i, h.j);
            CHECK_FALSE(holds_at(S.atom_structure(), e, h.verdict.witness));
        }
    }
    // the witness pair (g, g')
    auto e = build_henkin(0, 1);
    auto lhs_t = e.lhs.op() == Op::Sum ? e.lhs.left() : e.lhs;
    auto g = S.from_base(S.g());
    auto look = [&](const std::string& v) { return v == "x" ? g : S.g_prime(); };
    auto lhs = evaluate(S, lhs_t, look);
    auto rhs = evaluate(S, e.rhs, look);
    CHECK(lhs == S.cyl(1, g));
    CHECK_FALSE(S.join(lhs, rhs) == rhs);
    auto sp = S.base().space();
    // V_0 = {0}, V_1 = {1,2}, V_2 = {3,4}
    std::vector<Point> pts;
    for (std::uint32_t b = 1; b < 5; ++b)
        for (std::uint32_t c = 3; c < 5; ++c) pts.push_back({0, b, c});
    CHECK(*S.to_base(rhs) == cyl(0, PointSet::of_points(sp, pts)));
    CHECK(*S.to_base(lhs) == cyl(1, S.g()));
}

TEST_CASE("Henkin's equation in set algebras of the same size") {
    auto sp = CylSpace::make(3, 5);
    auto e = build_henkin(0, 1);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
        auto X = PointSet::random(sp, rng), Y = PointSet::random(sp, rng);
        if (k % 2) Y = Y & X;
        REQUIRE(holds_at(sp, e, {{"x", X}, {"y", Y}}));
    }
}

TEST_CASE("partition witness") {
    auto w = build_partition_witness(4, 2, 2);
    CHECK(dimension_set(w.g) == std::set<Index>{0, 1});
    CHECK(is_regular(w.g));
    CHECK_FALSE(find_irregular_element(w.algebra));
    auto e2 = build_e_n(2, 4);
    CHECK(holds_at(w.g.space(), e2, {{"x", w.g}}) == false);
    CHECK_FALSE(equiv_oracle(cyl(2, w.g), 2));
    CHECK_THROWS(build_partition_witness(4, 1, 2));
}

TEST_CASE("e_k status matrix matches the frozen fixture") {
    std::ifstream in(std::string(CYL_FIXTURE_DIR) + "/ek_matrix.json");
    REQUIRE(in);
    auto fx = nlohmann::json::parse(in);
    for (auto& row : fx["entries"]) {
        unsigned k = row["k"];
        auto st = ek_status(fx["dim"], fx["n"], fx["blocks"], k);
        INFO("k = " << k);
        CHECK(st.dim == row["dim"].get<unsigned>());
        CHECK(to_string(st.term.kind) == row["term"].get<std::string>());
        CHECK((st.oracle_holds ? "valid" : "fails") == row["oracle"].get<std::string>());
        CHECK(st.closed_elements == row["closed_elements"].get<std::size_t>());
        CHECK(st.term.valid() == st.oracle_holds);
    }
}

TEST_CASE("find_irregular_element stays silent on generated algebras") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 5; ++k) {
        auto sp = CylSpace::make(3, 2 + k % 2);
        auto A = SetAlgebra::generate(sp, {PointSet::random(sp, rng)});
        CHECK_FALSE(find_irregular_element(A));
    }
}

TEST_CASE("reducts and symmetrization") {
    std::mt19937_64 rng(44);
    auto sp = CylSpace::make(3, 2);
    auto A = SetAlgebra::generate(sp, {PointSet::random(sp, rng)});
    for (int k = 0; k < 30; ++k) {
        auto perms = all_permutations(3);
        auto rho = perms[rng() % perms.size()];
        Equation e{ref::random_term(rng, {"x"}, 3, 3), ref::random_term(rng, {"x"}, 3, 3)};
        if (k % 3 == 0) e = build_henkin(0, 1);
        if (k % 3 == 1) e = {Term(cyl(0, var("x"))), var("x")};
        bool lhs = check(rd_reduct(A, rho), e).valid();
        bool rhs = holds(A, rename(e, rho)).valid();
        CHECK(lhs == rhs);
        CHECK(check(rd_reduct(A, rho).reduct(rho.inverse()), e).valid() == holds(A, e).valid());
    }
    auto D = diagonal_algebra(3, 2);
    auto B = build_symmetrized(D.atom_structure());
    CHECK(B.factor_offsets().size() == 6);
    CHECK(B.atoms() == 6 * D.atom_count());

    auto S = SplitAlgebra::build(3, {1, 2, 2});
    auto SS = build_symmetrized(S.atom_structure());
    CHECK(check(S.atom_structure(), build_henkin(2, 1)).valid());
    CHECK_FALSE(check(SS, build_henkin(2, 1)).valid());
    for (auto& rho : all_permutations(3))
        for (auto& e : {build_henkin(0, 1), build_henkin(1, 2), Equation{cyl(0, var("x")), var("x")}})
            CHECK(check(SS, e).valid() == check(SS, rename(e, rho)).valid());
}

TEST_CASE("substitution isomorphism") {
    std::mt19937_64 rng(3);
    auto sp = CylSpace::make(3, 2);
    std::vector<SetAlgebra> algs{diagonal_algebra(3, 2), diagonal_algebra(3, 3),
                                 SetAlgebra::generate(sp, {PointSet::random(sp, rng)})};
    for (auto& A : algs)
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) {
                if (i == j) continue;
                auto rep = check_substitution_isomorphism(A, i, j);
                CHECK(rep.ok());
                CHECK(rep.checked["inverse"] >= 2);
            }
}

TEST_CASE("transposition identities") {
    auto sp = CylSpace::make(4, 2);
    std::mt19937_64 rng(6);
    std::vector<Term> corpus;
    for (int k = 0; k < 5; ++k) corpus.push_back(ref::random_term(rng, {"x", "y"}, 4, 4));
    auto rep = check_transposition_identities(sp, 10, 1, corpus);
    CHECK(rep.ok());
    CHECK(rep.checked.size() == 8);
    // a wrong renaming is caught
    auto sp3 = CylSpace::make(3, 2);
    auto X = parse_point_set(sp3, "{(0,1,0),(1,1,0)}");
    CHECK(transposition(0, 1, cyl(0, X)) != cyl(0, transposition(0, 1, X)));
}
