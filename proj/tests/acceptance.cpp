// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cyl/builders.hpp"
#include "cyl/constructions.hpp"
#include "cyl/eval.hpp"
#include "cyl/laws.hpp"
#include "cyl/oracle.hpp"
#include "cyl/proof.hpp"
#include "cyl/rational.hpp"
#include "json.hpp"
#include "reference.hpp"

using namespace ca;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// fail() keeps the first failure message only
struct Tally {
    Outcome out;
    void fail(const std::string& why) {
        if (out.ok) out.detail = why;
        out.ok = false;
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// Random union of c_i-classes, each class taken with probability 1/2.
PointSet random_closed(const SpacePtr& sp, Index i, std::mt19937_64& rng) {
    auto r = PointSet::random(sp, rng);
    return cyl(i, PointSet(sp, r.bits() & sp->axis_zero_mask(i)));
}

Outcome axiom_suite() {
    Tally t;
    std::size_t carriers = 0, instances = 0;
    for (Index d : {3, 4})
        for (std::uint32_t u : {2u, 3u}) {
            auto sp = CylSpace::make(d, u);
            std::vector<SetAlgebra> algs{SetAlgebra::generate(sp, {})};
            for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                std::mt19937_64 rng(seed);
                algs.push_back(SetAlgebra::generate(sp, {PointSet::random(sp, rng)}));
            }
            for (auto& A : algs) {
                ++carriers;
                auto rep = check_ca_axioms(A.atom_structure());
                instances += rep.results.size();
                if (!rep.all_pass())
                    for (auto& r : rep.results)
                        if (!r.verdict.valid())
                            t.fail("d=" + std::to_string(d) + " |U|=" + std::to_string(u) + ": " + to_string(r.axiom.equation));
            }
        }
    if (t.out.ok) t.out.detail = std::to_string(carriers) + " carriers, " + std::to_string(instances) + " instances";
    return t.out;
}

Outcome express_agreement() {
    Tally t;
    auto master = build_master_equation(3);
    auto compare = [&](const PointSet& X) {
        if (holds_at(X.space(), master, {{"x", X}}) != express_oracle(X)) t.fail("disagree at " + X.to_string());
    };
    auto small = CylSpace::make(3, 2);
    for (std::size_t m = 0; m < 256; ++m) {
        BitVector b(8);
        for (std::size_t c = 0; c < 8; ++c) b.set(c, (m >> c) & 1);
        compare(PointSet(small, b));
    }
    auto big = CylSpace::make(3, 3);
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 500; ++k) compare(PointSet::random(big, rng));
    if (t.out.ok) t.out.detail = "256 exhaustive + 500 seeded subsets";
    return t.out;
}

Outcome equiv_agreement() {
    Tally t;
    auto en = build_e_n(2, 4);
    std::size_t holds_count = 0;
    auto compare = [&](const PointSet& X) {
        bool term = holds_at(X.space(), en, {{"x", X}});
        holds_count += term;
        if (term != equiv_oracle(X, 2)) t.fail("disagree at " + X.to_string());
    };
    auto small = CylSpace::make(4, 2);
    auto classes = SetAlgebra::full(small).closed_elements(2, 1u << 10);
    t.require(classes.size() == 256, "expected 256 c_2-closed subsets, got " + std::to_string(classes.size()));
    for (auto& X : classes) compare(X);
    auto big = CylSpace::make(4, 4);
    std::mt19937_64 rng(77);
    for (int k = 0; k < 300; ++k) compare(random_closed(big, 2, rng));
    if (t.out.ok)
        t.out.detail = std::to_string(classes.size()) + " exhaustive + 300 seeded closed subsets (" +
                       std::to_string(holds_count) + " satisfy e_2)";
    return t.out;
}

Outcome split_reproduction() {
    Tally t;
    auto S = SplitAlgebra::build(3, {1, 2, 2});
    auto ax = check_ca_axioms(S.atom_structure());
    t.require(ax.all_pass(), std::to_string(ax.failures()) + " axiom instances fail");
    auto e01 = build_henkin(0, 1);
    auto g = S.from_base(S.g());
    auto look = [&](const std::string& v) { return v == "x" ? g : S.g_prime(); };
    auto lhs = evaluate(S, e01.lhs.left(), look);
    auto rhs = evaluate(S, e01.rhs, look);
    t.require(lhs == S.cyl(1, g), "lhs at (g,g') is not c_1 g");
    t.require(!(S.join(lhs, rhs) == rhs), "lhs at (g,g') is below rhs");
    t.require(check(S.atom_structure(), e01).fails(), "e_01 not refuted over the carrier");
    for (Index i = 2; i < 3; ++i)
        t.require(check(S.atom_structure(), build_henkin(i, 1)).valid(), "e_" + std::to_string(i) + "1 fails");
    auto sp = CylSpace::make(3, 5);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 1000; ++k) {
        Assignment a{{"x", PointSet::random(sp, rng)}, {"y", PointSet::random(sp, rng)}};
        if (k % 2) a["y"] = a["y"] & a["x"];
        if (!holds_at(sp, e01, a)) t.fail("e_01 fails in a set algebra at x=" + a["x"].to_string());
    }
    if (t.out.ok)
        t.out.detail = std::to_string(S.atom_structure().atoms()) + " atoms, " + std::to_string(ax.results.size()) +
                       " axiom instances, e_01 refuted at (g,g'), 1000 set-algebra samples";
    return t.out;
}

Outcome partition_reproduction() {
    Tally t;
    auto w = build_partition_witness(4, 2, 2);
    auto en = build_e_n(2, 4);
    t.require(!holds_at(w.g.space(), en, {{"x", w.g}}), "e_2 holds at g by term evaluation");
    t.require(!equiv_oracle(cyl(2, w.g), 2), "oracle accepts g");
    t.require(dimension_set(w.g) == std::set<Index>{0, 1}, "dimension set of g is not {0,1}");
    t.require(!find_irregular_element(w.algebra), "irregular carrier element");
    std::ifstream in(std::string(CYL_FIXTURE_DIR) + "/ek_matrix.json");
    if (!in) {
        t.fail("fixture missing");
        return t.out;
    }
    auto fx = nlohmann::json::parse(in);
    for (auto& row : fx["entries"]) {
        unsigned k = row["k"];
        auto st = ek_status(fx["dim"], fx["n"], fx["blocks"], k);
        bool same = st.dim == row["dim"].get<Index>() && to_string(st.term.kind) == row["term"].get<std::string>() &&
                    (st.oracle_holds ? "valid" : "fails") == row["oracle"].get<std::string>() &&
                    st.closed_elements == row["closed_elements"].get<std::size_t>();
        t.require(same, "e_" + std::to_string(k) + " row differs from the fixture");
    }
    if (t.out.ok) t.out.detail = std::to_string(w.algebra.atom_count()) + " atoms, e_k matrix matches fixture";
    return t.out;
}

Outcome rational_suite() {
    Tally t;
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        auto s = random_T_point(rng, 8);
        for (Index i = 0; i < 8; ++i) {
            try {
                cut_witnesses(s, i, 8);
            } catch (const std::exception& e) {
                t.fail("cut witness at " + s.to_string(8) + " i=" + std::to_string(i) + ": " + e.what());
            }
        }
    }
    for (int k = 0; k < 100; ++k) {
        std::set<Rational> A, B;
        std::size_t len = 1 + rng() % 6;
        while (A.size() < len) A.insert(random_rational(rng));
        while (B.size() < len) B.insert(random_rational(rng));
        std::vector<Rational> a(A.begin(), A.end()), b(B.begin(), B.end());
        auto f = pl_automorphism(a, b);
        auto finv = f.inverse();
        for (std::size_t m = 0; m < len; ++m) t.require(f(a[m]) == b[m], "breakpoint not mapped exactly");
        for (int m = 0; m < 1000; ++m) {
            auto x = random_rational(rng, 40, 30), y = random_rational(rng, 40, 30);
            t.require((x < y) == (f(x) < f(y)) && (x == y) == (f(x) == f(y)), "order not preserved");
            t.require(finv(f(x)) == x, "inverse does not undo the map");
        }
    }
    if (t.out.ok) t.out.detail = "200 points x 8 indices, 100 maps x 1000 pairs";
    return t.out;
}

Outcome substitution_iso() {
    Tally t;
    std::mt19937_64 rng(12);
    auto sp2 = CylSpace::make(3, 2), sp3 = CylSpace::make(3, 3);
    std::vector<SetAlgebra> algs{SetAlgebra::generate(sp2, {PointSet::random(sp2, rng)}), SetAlgebra::generate(sp3, {}),
                                 SetAlgebra::generate(sp3, {PointSet::random(sp3, rng)})};
    std::uint64_t domain = 0;
    for (auto& A : algs)
        for (auto [i, j] : {std::pair<Index, Index>{0, 1}, {1, 0}}) {
            auto rep = check_substitution_isomorphism(A, i, j);
            for (auto& f : rep.failures) t.fail(f);
            domain += rep.checked["into"];
        }
    if (t.out.ok) t.out.detail = "3 algebras, " + std::to_string(domain) + " closed elements mapped";
    return t.out;
}

Outcome transpositions() {
    Tally t;
    std::mt19937_64 rng(99);
    std::vector<Term> corpus;
    for (int k = 0; k < 12; ++k) corpus.push_back(ref::random_term(rng, {"x", "y"}, 4, 4));
    auto rep = check_transposition_identities(CylSpace::make(4, 3), 500, 5, corpus);
    for (auto& f : rep.failures) t.fail(f);
    t.require(rep.checked.size() == 8, "expected 8 identities");
    std::uint64_t n = 0;
    for (auto& [law, c] : rep.checked) {
        n += c;
        // laws over constants have no subsets to sample
        if (law.find('x') != std::string::npos) t.require(c >= 500, law + " checked only " + std::to_string(c) + " times");
    }
    if (t.out.ok) t.out.detail = std::to_string(rep.checked.size()) + " identities, " + std::to_string(n) + " instances";
    return t.out;
}

std::string transcript(const TheoremStore& store, const std::vector<std::size_t>& ids) {
    std::ostringstream os;
    for (auto id : ids) {
        const auto& th = store[id];
        os << id << ' ' << to_string(th.equation) << " [" << to_string(th.derivation.rule);
        for (auto p : th.derivation.premises) os << ' ' << p;
        os << "]";
        for (auto& a : th.alternatives) os << " alt " << to_string(a.rule);
        os << '\n';
    }
    return os.str();
}

Outcome proof_engine() {
    Tally t;
    EnumerationBounds b;
    b.index_bound = 4;
    b.term_depth = 5;
    b.variable_count = 2;
    b.step_budget = 2000000;
    auto run = [&](TheoremStore& store) {
        std::vector<std::size_t> ids;
        enumerate(b, store, [&](const Theorem& th) {
            ids.push_back(th.id);
            return ids.size() < 10000;
        });
        return ids;
    };
    TheoremStore first, second;
    auto ids = run(first);
    auto ids2 = run(second);
    t.require(ids.size() == 10000, "only " + std::to_string(ids.size()) + " theorems enumerated");
    t.require(transcript(first, ids) == transcript(second, ids2), "two runs differ");
    std::size_t inductive = 0, records = 0, unsound = 0;
    for (auto id : ids) {
        const auto& th = first[id];
        std::vector<const Derivation*> ds{&th.derivation};
        for (auto& a : th.alternatives) ds.push_back(&a);
        for (auto* d : ds) {
            if (d->rule != Rule::Inductive) continue;
            ++records;
            t.require(first.replay(*d) == th.equation, "inductive record does not replay: " + to_string(th.equation));
        }
        inductive += th.has_rule(Rule::Inductive);
        auto audit = audit_soundness(th, 25, id);
        if (!audit.ok && !unsound++) t.fail("unsound: " + to_string(th.equation) + " in " + audit.describe());
    }
    t.require(records >= 50, "inductive rule used only " + std::to_string(records) + " times");
    if (t.out.ok)
        t.out.detail = std::to_string(ids.size()) + " theorems x 25 algebras, " + std::to_string(records) +
                       " inductive derivations over " + std::to_string(inductive) + " theorems, runs identical";
    return t.out;
}

Outcome reduct_law() {
    Tally t;
    std::mt19937_64 rng(404);
    for (int k = 0; k < 100; ++k) {
        Index d = 3 + k % 2;
        std::uint32_t u = d == 3 ? 2 + (k / 2) % 2 : 2;
        auto sp = CylSpace::make(d, u);
        auto A = SetAlgebra::generate(sp, {PointSet::random(sp, rng)});
        auto perms = all_permutations(d);
        auto rho = perms[rng() % perms.size()];
        Equation e{ref::random_term(rng, {"x"}, d, 3), ref::random_term(rng, {"x"}, d, 3)};
        if (k % 4 == 0) e = build_henkin(static_cast<Index>(1 + rng() % (d - 1)), 0);
        if (k % 4 == 1) e = {cyl(static_cast<Index>(rng() % d), var("x")), var("x")};
        bool lhs = check(rd_reduct(A, rho), e).valid();
        bool rhs = holds(A, rename(e, rho)).valid();
        t.require(lhs == rhs, "reduct law fails for " + to_string(e));
    }
    auto S = SplitAlgebra::build(3, {1, 2, 2});
    auto B = build_symmetrized(S.atom_structure());
    auto perms = all_permutations(3);
    std::size_t valid = 0;
    for (int k = 0; k < 50; ++k) {
        Equation e{ref::random_term(rng, {"x", "y"}, 3, 3), ref::random_term(rng, {"x", "y"}, 3, 3)};
        if (k % 5 == 0) e = build_henkin(static_cast<Index>(k / 5 % 3), static_cast<Index>((k / 5 + 1) % 3));
        if (k % 5 == 1) e = {sum(ref::random_term(rng, {"x"}, 3, 2), var("x")), var("x")};
        bool base = check(B, e).valid();
        valid += base;
        for (auto& rho : perms) t.require(check(B, rename(e, rho)).valid() == base, "asymmetric on " + to_string(e));
    }
    if (t.out.ok)
        t.out.detail = "100 triples, symmetrized split algebra symmetric on 50 equations (" + std::to_string(valid) + " valid)";
    return t.out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "axiom suite on generated carriers", 30, axiom_suite},
        {2, "express oracle vs master equation", 60, express_agreement},
        {3, "equiv oracle vs e_2", 60, equiv_agreement},
        {4, "split-atom algebra", 120, split_reproduction},
        {5, "partition witness", 120, partition_reproduction},
        {6, "rational pointwise suite", 30, rational_suite},
        {7, "substitution isomorphism", 30, substitution_iso},
        {8, "transposition identities", 60, transpositions},
        {9, "proof-engine soundness", 300, proof_engine},
        {10, "reduct law and symmetrization", 60, reduct_law},
    };
    int failed = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && s > c.limit_s) o = {false, "over time limit"};
        failed += !o.ok;
        std::ostringstream secs;
        secs.precision(2);
        secs << std::fixed << s;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " (" << secs.str()
                  << " s, limit " << c.limit_s << " s)" << std::endl;
    }
    std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
    return failed ? 1 : 0;
}
