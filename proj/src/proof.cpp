#include "cyl/proof.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <cmath>
#include <sstream>

#include "cyl/axioms.hpp"
#include "cyl/builders.hpp"

namespace ca {

const char* const kHole = "hole_";

std::string to_string(Rule r) {
    switch (r) {
        case Rule::Axiom: return "axiom";
        case Rule::Reflexivity: return "reflexivity";
        case Rule::Symmetry: return "symmetry";
        case Rule::Transitivity: return "transitivity";
        case Rule::Congruence: return "congruence";
        case Rule::Substitution: return "substitution";
        case Rule::Inductive: return "inductive";
    }
    return "?";
}

bool Theorem::has_rule(Rule r) const {
    if (derivation.rule == r) return true;
    return std::any_of(alternatives.begin(), alternatives.end(), [&](const Derivation& d) { return d.rule == r; });
}

std::string canonical_name(std::size_t k) {
    static const char* first[] = {"x", "y", "z", "w"};
    return k < 4 ? first[k] : "v" + std::to_string(k);
}

namespace {

Term sort_commutative(const Term& t) {
    switch (t.op()) {
        case Op::Sum:
        case Op::Product:
        case Op::SymDiff: {
            Term a = sort_commutative(t.left()), b = sort_commutative(t.right());
            if (compare(b, a) < 0) std::swap(a, b);
            if (t.op() == Op::Sum) return sum(a, b);
            if (t.op() == Op::Product) return prod(a, b);
            return symdiff(a, b);
        }
        case Op::Complement: return comp(sort_commutative(t.child()));
        case Op::Cyl: return cyl(t.i(), sort_commutative(t.child()));
        default: return t;
    }
}

std::optional<Index> max_opt(std::optional<Index> a, std::optional<Index> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

std::optional<Index> max_index_of(const Substitution& s) {
    std::optional<Index> m;
    for (auto& [v, t] : s) m = max_opt(m, max_index(t));
    return m;
}

}  // namespace

Equation canonicalize(const Equation& e0) {
    Equation e = e0;
    for (int round = 0; round < 16; ++round) {
        Equation s{sort_commutative(e.lhs), sort_commutative(e.rhs)};
        Substitution ren;
        std::size_t k = 0;
        for (auto& v : variables_in_order(s)) ren[v] = var(canonical_name(k++));
        Equation r = substitute(s, ren);
        if (r == e) break;
        e = r;
    }
    return e;
}

Equation rule_symmetry(const Equation& a) { return canonicalize({a.rhs, a.lhs}); }

Equation rule_transitivity(const Equation& a, const Equation& b) {
    if (a.rhs != b.lhs) throw RuleError("transitivity needs matching middle terms");
    return canonicalize({a.lhs, b.rhs});
}

Equation rule_congruence(const Equation& a, const Term& context) {
    std::size_t holes = 0;
    auto count = [&](const Term& t, auto&& self) -> void {
        if (t.op() == Op::Var && t.name() == kHole) ++holes;
        if (t.op() == Op::Sum || t.op() == Op::Product || t.op() == Op::SymDiff) {
            self(t.left(), self);
            self(t.right(), self);
        } else if (t.op() == Op::Complement || t.op() == Op::Cyl) self(t.child(), self);
    };
    count(context, count);
    if (holes != 1) throw RuleError("congruence context must contain exactly one hole");
    return canonicalize({substitute(context, {{kHole, a.lhs}}), substitute(context, {{kHole, a.rhs}})});
}

Equation rule_substitution(const Equation& a, const Substitution& s) { return canonicalize(substitute(a, s)); }

std::vector<std::pair<Equation, Index>> rule_inductive(const Equation& a) {
    std::vector<std::pair<Equation, Index>> out;
    for (auto& m : inductive_premise_match(a)) out.emplace_back(canonicalize(m.premise_free), m.i);
    return out;
}

// ---- store

std::optional<std::size_t> TheoremStore::find(const Equation& canonical) const {
    auto it = index_.find(to_string(canonical));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Derivation TheoremStore::derive(Rule rule, std::vector<std::size_t> premises) const {
    Derivation d;
    d.rule = rule;
    d.size = 1;
    for (auto p : premises) {
        const auto& P = th_.at(p);
        d.size += P.derivation.size;
        d.max_index = max_opt(d.max_index, P.derivation.max_index);
    }
    d.premises = std::move(premises);
    return d;
}

std::pair<std::size_t, bool> TheoremStore::commit(const Equation& canonical, Derivation d) {
    auto key = to_string(canonical);
    if (auto it = index_.find(key); it != index_.end()) {
        auto& t = th_[it->second];
        t.max_index_used = max_opt(t.max_index_used, d.max_index);
        t.alternatives.push_back(std::move(d));
        return {it->second, false};
    }
    Theorem t;
    t.id = th_.size();
    t.equation = canonical;
    t.max_index_used = max_opt(d.max_index, max_index(canonical));
    t.derivation = std::move(d);
    index_.emplace(std::move(key), t.id);
    th_.push_back(std::move(t));
    return {th_.back().id, true};
}

Equation TheoremStore::replay(const Derivation& d) const {
    auto prem = [&](std::size_t k) { return replay(d.premises.at(k)); };
    switch (d.rule) {
        case Rule::Axiom: {
            Index bound = d.max_index ? *d.max_index + 1 : 0;
            for (auto& ax : ca_axiom_instances(bound))
                if (ax.equation == d.instance) return canonicalize(ax.equation);
            throw RuleError("recorded axiom is not a schema instance");
        }
        case Rule::Reflexivity: return canonicalize({d.term, d.term});
        case Rule::Symmetry: return rule_symmetry(prem(0));
        case Rule::Transitivity: return rule_transitivity(prem(0), prem(1));
        case Rule::Congruence: return rule_congruence(prem(0), d.context);
        case Rule::Substitution: return rule_substitution(prem(0), d.subst);
        case Rule::Inductive:
            for (auto& [e, i] : rule_inductive(prem(0)))
                if (i == d.index) return e;
            throw RuleError("inductive replay found no match at the recorded index");
    }
    throw RuleError("unknown rule");
}

Equation TheoremStore::replay(std::size_t id) const { return replay(th_.at(id).derivation); }

}  // namespace ca

namespace ca {

void add_axioms(TheoremStore& store, const EnumerationBounds& b) {
    std::vector<std::pair<Equation, Derivation>> batch;
    for (auto& ax : ca_axiom_instances(b.index_bound)) {
        Derivation d;
        d.rule = Rule::Axiom;
        d.axiom = ax.group + "/" + ax.schema;
        d.instance = ax.equation;
        d.max_index = max_index(ax.equation);
        batch.emplace_back(canonicalize(ax.equation), std::move(d));
    }
    Derivation r;
    r.rule = Rule::Reflexivity;
    r.term = var("x");
    batch.emplace_back(canonicalize({var("x"), var("x")}), std::move(r));
    for (auto& [e, d] : batch) store.commit(e, std::move(d));
}

namespace {

struct Candidate {
    Equation eq;
    Derivation d;
};

bool within(const Equation& e, const EnumerationBounds& b) {
    if (std::max(e.lhs.depth(), e.rhs.depth()) > b.term_depth) return false;
    if (variables(e).size() > b.variable_count) return false;
    auto m = max_index(e);
    return !m || *m < b.index_bound;
}

std::vector<Term> contexts(const EnumerationBounds& b) {
    std::vector<Term> out;
    Term h = var(kHole);
    for (Index i = 0; i < b.index_bound; ++i) out.push_back(cyl(i, h));
    out.push_back(comp(h));
    for (unsigned k = 0; k < b.variable_count; ++k) {
        out.push_back(sum(h, var(canonical_name(k))));
        out.push_back(prod(h, var(canonical_name(k))));
    }
    return out;
}

std::vector<Term> substitution_pool(const EnumerationBounds& b) {
    std::vector<Term> out{zero(), one()};
    for (Index i = 0; i < b.index_bound; ++i)
        for (Index j = i + 1; j < b.index_bound; ++j) out.push_back(diag(i, j));
    for (unsigned k = 0; k < b.variable_count; ++k) {
        Term w = var(canonical_name(k));
        out.push_back(w);
        out.push_back(comp(w));
        for (Index i = 0; i < b.index_bound; ++i) out.push_back(cyl(i, w));
        for (unsigned l = k; l < b.variable_count; ++l) {
            out.push_back(sum(w, var(canonical_name(l))));
            out.push_back(prod(w, var(canonical_name(l))));
        }
    }
    return out;
}

}  // namespace

EnumerationStats enumerate(const EnumerationBounds& b, TheoremStore& store, const std::function<bool(const Theorem&)>& sink) {
    EnumerationStats st;
    if (store.size() == 0) {
        add_axioms(store, b);
        for (auto& t : store.theorems())
            if (sink && !sink(t)) return st;
    }
    const auto ctx = contexts(b);
    const auto pool = substitution_pool(b);
    std::map<std::size_t, std::vector<std::size_t>> by_size;
    for (auto& t : store.theorems()) by_size[t.derivation.size].push_back(t.id);
    std::size_t max_size = by_size.empty() ? 1 : by_size.rbegin()->first;

    for (std::size_t s = 2;; ++s) {
        std::map<std::string, Candidate> level;
        std::vector<Candidate> inductive_alts;
        bool out_of_steps = false;
        auto offer = [&](Equation e, Derivation d) {
            if (st.steps >= b.step_budget) {
                out_of_steps = true;
                return;
            }
            ++st.steps;
            if (!within(e, b)) return;
            if (store.find(e)) {
                if (d.rule == Rule::Inductive) inductive_alts.push_back({std::move(e), std::move(d)});
                return;
            }
            auto key = to_string(e);
            if (!level.count(key)) level.emplace(std::move(key), Candidate{std::move(e), std::move(d)});
            else if (d.rule == Rule::Inductive) inductive_alts.push_back({std::move(e), std::move(d)});
        };
        const auto& prev = by_size[s - 1];
        for (auto id : prev) {
            if (out_of_steps) break;
            if (!b.inductive) break;
            for (auto& [e, i] : rule_inductive(store[id].equation)) {
                auto d = store.derive(Rule::Inductive, {id});
                d.index = i;
                d.max_index = max_opt(d.max_index, i);
                ++st.inductive_conclusions;
                offer(e, std::move(d));
            }
        }
        for (auto id : prev) {
            if (out_of_steps) break;
            offer(rule_symmetry(store[id].equation), store.derive(Rule::Symmetry, {id}));
        }
        for (auto id : prev) {
            for (auto& c : ctx) {
                if (out_of_steps) break;
                auto d = store.derive(Rule::Congruence, {id});
                d.context = c;
                d.max_index = max_opt(d.max_index, max_index(c));
                offer(rule_congruence(store[id].equation, c), std::move(d));
            }
        }
        // transitivity: sizes a + c = s - 1
        for (std::size_t a = 1; a + 1 < s && !out_of_steps; ++a) {
            std::size_t c = s - 1 - a;
            if (!by_size.count(a) || !by_size.count(c)) continue;
            std::map<std::string, std::vector<std::size_t>> by_lhs;
            for (auto id : by_size[c]) by_lhs[to_string(store[id].equation.lhs)].push_back(id);
            for (auto p : by_size[a]) {
                auto it = by_lhs.find(to_string(store[p].equation.rhs));
                if (it == by_lhs.end()) continue;
                for (auto q : it->second) {
                    if (out_of_steps) break;
                    offer(rule_transitivity(store[p].equation, store[q].equation),
                          store.derive(Rule::Transitivity, {p, q}));
                }
            }
        }
        for (auto id : prev) {
            for (auto& v : variables_in_order(store[id].equation))
                for (auto& t : pool) {
                    if (out_of_steps) break;
                    if (t.op() == Op::Var && t.name() == v) continue;
                    Substitution sub{{v, t}};
                    auto d = store.derive(Rule::Substitution, {id});
                    d.subst = sub;
                    d.max_index = max_opt(d.max_index, max_index_of(sub));
                    offer(rule_substitution(store[id].equation, sub), std::move(d));
                }
        }

        auto record_alternatives = [&] {
            for (auto& c : inductive_alts)
                if (store.find(c.eq)) store.commit(c.eq, std::move(c.d));
        };
        for (auto& [key, c] : level) {
            auto [id, fresh] = store.commit(c.eq, std::move(c.d));
            if (!fresh) continue;
            by_size[s].push_back(id);
            if (sink && !sink(store[id])) {
                record_alternatives();
                st.levels = s;
                return st;
            }
        }
        record_alternatives();
        st.levels = s;
        if (out_of_steps) {
            st.truncated = true;
            return st;
        }
        if (!level.empty()) max_size = s;
        // unary rules need size s, transitivity two sizes summing to s
        if (s > 2 * max_size) break;
    }
    return st;
}

std::string AuditResult::describe() const {
    std::ostringstream os;
    os << "dim=" << dim << " base=" << base;
    for (auto& [v, X] : witness) os << ' ' << v << '=' << X.to_string();
    return os.str();
}

AuditResult audit_soundness(const Equation& e, std::optional<Index> max_index_used, std::size_t trials, std::uint64_t seed) {
    AuditResult r;
    Index need = max_opt(max_index_used, max_index(e)).value_or(0) + 1;
    auto vars = variables(e);
    for (std::size_t k = 0; k < trials; ++k) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + k);
        Index d = need + static_cast<Index>(k % 2);
        std::uint32_t base = (k % 3 == 0) ? 2 : 3;
        while (d > 1 && std::pow(base, d) > 1024) --base;
        if (base < 2) base = 2;
        auto sp = CylSpace::make(d, base);
        ++r.trials;
        for (int a = 0; a < 3; ++a) {
            Assignment asg;
            for (auto& v : vars) {
                auto X = PointSet::random(sp, rng);
                switch (rng() % 4) {
                    case 1: X = cyl(static_cast<Index>(rng() % d), X); break;
                    case 2: if (d > 1) X = X & diag(sp, 0, 1); break;
                    default: break;
                }
                asg[v] = X;
            }
            if (!holds_at(sp, e, asg)) {
                r.ok = false;
                r.dim = d;
                r.base = base;
                r.witness = asg;
                return r;
            }
        }
        r.dim = d;
        r.base = base;
    }
    return r;
}

AuditResult audit_soundness(const Theorem& t, std::size_t trials, std::uint64_t seed) {
    return audit_soundness(t.equation, t.max_index_used, trials, seed);
}

}  // namespace ca
