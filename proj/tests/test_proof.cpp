#include <sstream>

#include "cyl/axioms.hpp"
#include "cyl/parser.hpp"
#include "cyl/proof.hpp"
#include "doctest.h"

using namespace ca;

namespace {

Equation eq(const std::string& s) { return parse_equation(s); }

std::string run_text(const EnumerationBounds& b, std::size_t limit) {
    TheoremStore st;
    std::ostringstream os;
    std::size_t n = 0;
    enumerate(b, st, [&](const Theorem& t) {
        os << to_string(t.equation) << '\n';
        return ++n < limit;
    });
    return os.str();
}

}  // namespace

TEST_CASE("canonical forms") {
    CHECK(canonicalize(eq("y + x = x + y")) == canonicalize(eq("x + y = y + x")));
    CHECK(canonicalize(eq("b & a = c0(b)")) == eq("x & y = c0(y)"));
    CHECK(canonicalize(eq("z = z")) == eq("x = x"));
    auto c = canonicalize(eq("(q + c1(p)) & d0,1 = p"));
    CHECK(canonicalize(c) == c);
}

TEST_CASE("single rules") {
    CHECK(rule_symmetry(eq("x + 0 = x")) == canonicalize(eq("x = x + 0")));
    CHECK(rule_congruence(eq("x + x = x"), cyl(0, var(kHole))) == eq("c0(x + x) = c0(x)"));
    CHECK_THROWS_AS(rule_congruence(eq("x = x"), cyl(0, var("x"))), RuleError);
    CHECK(rule_substitution(eq("x + x = x"), {{"x", diag(0, 1)}}) == eq("d0,1 + d0,1 = d0,1"));
    CHECK(rule_transitivity(eq("x = x + 0"), eq("x + 0 = 0 + x")) == canonicalize(eq("x = 0 + x")));
    CHECK_THROWS_AS(rule_transitivity(eq("x = y"), eq("x = x")), RuleError);

    auto r = rule_inductive(eq("c5(x) + c5(x) = c5(x)"));
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == eq("x + x = x"));
    CHECK(r[0].second == 5);
    CHECK(rule_inductive(eq("c0(x) = c0(c0(x))")).empty());
    auto r2 = rule_inductive(eq("d0,1 & c2(x) = c2(x) & d0,1"));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == canonicalize(eq("d0,1 & x = x & d0,1")));
    CHECK(r2[0].second == 2);
}

TEST_CASE("axioms in the store") {
    TheoremStore st;
    add_axioms(st, {2, 4, 2, 10, true});
    CHECK(st.find(canonicalize(eq("c0(c1(x)) = c1(c0(x))"))));
    CHECK(st.find(canonicalize(eq("d0,0 = 1"))));
    for (auto& t : st.theorems()) {
        auto m = max_index(t.equation);
        CHECK((!m || *m < 2));
        CHECK(st.replay(t.id) == t.equation);
        CHECK(audit_soundness(t, 10, t.id).ok);
    }
}

TEST_CASE("enumeration is sound, replayable and deterministic") {
    EnumerationBounds b{3, 4, 2, 200000, true};
    TheoremStore st;
    std::size_t n = 0;
    auto stats = enumerate(b, st, [&](const Theorem&) { return ++n < 3000; });
    CHECK(st.size() >= 3000);
    CHECK(st.find(canonicalize(eq("c0(x + y) = c0(x) + c0(y)"))));
    std::size_t inductive = 0;
    for (auto& t : st.theorems()) {
        REQUIRE(st.replay(t.id) == t.equation);
        for (auto& d : t.alternatives) REQUIRE(st.replay(d) == t.equation);
        for (auto p : t.derivation.premises) CHECK(p < t.id);
        auto m = max_index(t.equation);
        CHECK((!m || (t.max_index_used && *t.max_index_used >= *m)));
        auto a = audit_soundness(t, 5, t.id);
        INFO(to_string(t.equation) << " " << a.describe());
        REQUIRE(a.ok);
        inductive += t.has_rule(Rule::Inductive);
    }
    CHECK(inductive > 0);
    CHECK(stats.inductive_conclusions > 0);
    CHECK(run_text(b, 1500) == run_text(b, 1500));
}

TEST_CASE("inductive conclusions carry the eliminated index") {
    EnumerationBounds b{4, 4, 1, 100000, true};
    TheoremStore st;
    enumerate(b, st, [&](const Theorem&) { return st.size() < 2500; });
    bool seen = false;
    for (auto& t : st.theorems()) {
        std::vector<Derivation> ds{t.derivation};
        ds.insert(ds.end(), t.alternatives.begin(), t.alternatives.end());
        for (auto& d : ds)
            if (d.rule == Rule::Inductive) {
                seen = true;
                CHECK(d.max_index);
                CHECK(*d.max_index >= d.index);
                CHECK(*t.max_index_used >= d.index);
            }
    }
    CHECK(seen);
}

TEST_CASE("the rule set is monotone") {
    EnumerationBounds b{2, 2, 1, 1u << 30, true};
    TheoremStore with, without;
    auto s1 = enumerate(b, with);
    b.inductive = false;
    auto s2 = enumerate(b, without);
    CHECK_FALSE(s1.truncated);
    CHECK_FALSE(s2.truncated);
    for (auto& t : without.theorems()) CHECK(with.find(t.equation));
}

TEST_CASE("step budget truncates") {
    EnumerationBounds b{3, 4, 2, 500, true};
    TheoremStore st;
    auto s = enumerate(b, st);
    CHECK(s.truncated);
    CHECK(s.steps == 500);
}

TEST_CASE("audit catches bogus theorems") {
    auto a = audit_soundness(eq("c0(x) = x"), 0, 25, 1);
    CHECK_FALSE(a.ok);
    CHECK(a.witness.count("x"));
    CHECK(audit_soundness(eq("x + x = x"), 2, 25, 1).ok);
    // a dimension-local failure: d_01 = 1 holds only when the base has one element
    CHECK_FALSE(audit_soundness(eq("d0,1 = 1"), 1, 5, 3).ok);
}
