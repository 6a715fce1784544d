#include "cyl/builders.hpp"

#include <string>

namespace ca {

namespace {

void need_dim(std::optional<Index> bound, Index needed, const char* what) {
    if (bound && *bound < needed)
        throw std::invalid_argument(std::string(what) + " needs dimension bound >= " + std::to_string(needed));
}

}  // namespace

Term subst_term(Index i, Index j, const Term& t) {
    if (i == j) throw std::invalid_argument("subst_term requires i != j");
    return cyl(i, prod(diag(i, j), t));
}

Term pair_subst_term(Index i, Index j, const Term& t, std::optional<Index> dim_bound) {
    if (i == j) throw std::invalid_argument("pair_subst_term requires i != j");
    need_dim(dim_bound, std::max(i, j) + 1, "pair_subst_term");
    if (i == 0 && j == 1) return t;
    if (i == 1 && j == 0) {
        if (dim_bound && *dim_bound < 3) throw std::invalid_argument("pair_subst_term(1,0): no spare index below bound");
        return subst_term(2, 0, subst_term(0, 1, subst_term(1, 2, cyl(2, t))));
    }
    if (i == 0) return subst_term(1, j, t);
    if (i == 1) return subst_term(0, 1, subst_term(1, j, t));
    if (j == 0) return subst_term(1, 0, subst_term(0, i, t));
    if (j == 1) return subst_term(0, i, t);
    return subst_term(0, i, subst_term(1, j, t));
}

Term shift_pair_term(const Term& t) { return subst_term(2, 1, subst_term(1, 0, t)); }

MasterParts build_master(std::optional<Index> dim_bound) {
    need_dim(dim_bound, 3, "master equation");
    MasterParts m;
    Term x = var("x");
    m.x = x;
    Term c0x = cyl(0, x), c1x = cyl(1, x), c2x = cyl(2, x);
    m.z = prod(c0x, c2x);
    Term zx = minus(m.z, x);
    m.beta = sum(sum(symdiff(c0x, cyl(0, zx)), symdiff(c1x, cyl(1, zx))), symdiff(c2x, cyl(2, zx)));
    m.gamma = symdiff(c2x, shift_pair_term(c0x));
    m.iota = prod(c2x, diag(0, 1));
    m.sigma = prod(c2x, pair_subst_term(1, 0, c2x));
    m.tau = minus(prod(c2x, pair_subst_term(1, 2, c2x)), subst_term(1, 2, c2x));
    m.lambda = prod(prod(prod(cyl(1, c2x), cyl(0, c2x)), comp(c2x)), comp(pair_subst_term(1, 0, c2x)));
    m.omega = sum(sum(sum(m.iota, m.sigma), m.tau), m.lambda);
    m.equation = leq(x, cyl_prefix(3, sum(sum(m.beta, m.gamma), m.omega)));
    return m;
}

Equation build_master_equation(std::optional<Index> dim_bound) { return build_master(dim_bound).equation; }

UniformParts build_uniform(unsigned n, std::optional<Index> dim_bound) {
    if (n < 2) throw std::invalid_argument("e_n requires n >= 2");
    need_dim(dim_bound, n + 1, "e_n");
    UniformParts u;
    u.n = n;
    Term a = var("a");
    u.a = a;
    u.delta = cyl(0, comp(cyl(1, a)));
    u.sigma = cyl(0, cyl(1, symdiff(pair_subst_term(1, 0, a), a)));
    u.tau = cyl_prefix(3, minus(prod(a, pair_subst_term(1, 2, a)), pair_subst_term(0, 2, a)));
    u.rho = cyl(0, cyl(1, minus(diag(0, 1), a)));

    auto distinct_related = [&](Index top) {
        std::vector<Term> nd, rel;
        for (Index i = 0; i <= top; ++i)
            for (Index j = i + 1; j <= top; ++j) {
                nd.push_back(comp(diag(i, j)));
                rel.push_back(pair_subst_term(i, j, a));
            }
        return prod(prod_all(nd), prod_all(rel));
    };
    std::vector<Index> inner;
    for (Index k = 1; k < n; ++k) inner.push_back(k);
    u.mu_less = cyl(0, comp(cyls(inner, distinct_related(n - 1))));
    u.mu_more = cyl_prefix(n + 1, distinct_related(n));
    u.eta = sum_all({u.delta, u.sigma, u.tau, u.rho, u.mu_less, u.mu_more});

    std::vector<Index> cl;
    for (Index k = 2; k <= n; ++k) cl.push_back(k);
    u.equation = Equation{substitute(u.eta, {{"a", cyls(cl, var("x"))}}), one()};
    return u;
}

Equation build_e_n(unsigned n, std::optional<Index> dim_bound) { return build_uniform(n, dim_bound).equation; }

Equation build_henkin(Index i, Index j) {
    if (i == j) throw std::invalid_argument("Henkin equation requires i != j");
    Term x = var("x"), y = var("y");
    Term lhs = cyl(j, prod(prod(x, y), cyl(i, minus(x, y))));
    Term rhs = cyl(i, minus(cyl(j, x), diag(i, j)));
    return leq(lhs, rhs);
}

Term build_a_m(unsigned m, std::optional<Index> dim_bound) {
    if (m < 1) throw std::invalid_argument("a_m requires m >= 1");
    need_dim(dim_bound, m, "a_m");
    std::vector<Term> nd;
    for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j) nd.push_back(comp(diag(i, j)));
    return cyl_prefix(m, prod_all(nd));
}

namespace {

// Deletes Cyl(i, var) nodes; fails if Cyl(i, non-var) or a bare variable occurs.
std::optional<Term> strip(const Term& t, Index i) {
    switch (t.op()) {
        case Op::Var:
            return std::nullopt;
        case Op::Zero:
        case Op::One:
        case Op::Diag:
            return t;
        case Op::Cyl: {
            if (t.i() == i) {
                if (t.child().is_var()) return t.child();
                return std::nullopt;
            }
            auto c = strip(t.child(), i);
            if (!c) return std::nullopt;
            return cyl(t.i(), *c);
        }
        case Op::Complement: {
            auto c = strip(t.child(), i);
            if (!c) return std::nullopt;
            return comp(*c);
        }
        default: {
            auto l = strip(t.left(), i);
            if (!l) return std::nullopt;
            auto r = strip(t.right(), i);
            if (!r) return std::nullopt;
            if (t.op() == Op::Sum) return sum(*l, *r);
            if (t.op() == Op::Product) return prod(*l, *r);
            return symdiff(*l, *r);
        }
    }
}

}  // namespace

std::vector<InductiveMatch> inductive_premise_match(const Equation& E) {
    std::vector<InductiveMatch> out;
    std::set<Index> cand;
    auto collect = [&](const Term& t, auto&& self) -> void {
        if (t.op() == Op::Cyl) {
            if (t.child().is_var()) cand.insert(t.i());
            self(t.child(), self);
        } else if (t.op() == Op::Complement) {
            self(t.child(), self);
        } else if (t.op() == Op::Sum || t.op() == Op::Product || t.op() == Op::SymDiff) {
            self(t.left(), self);
            self(t.right(), self);
        }
    };
    collect(E.lhs, collect);
    collect(E.rhs, collect);
    for (Index i : cand) {
        auto l = strip(E.lhs, i);
        if (!l) continue;
        auto r = strip(E.rhs, i);
        if (!r) continue;
        Equation e{*l, *r};
        if (indices(e).count(i)) continue;
        out.push_back({e, i});
    }
    return out;
}

}  // namespace ca
