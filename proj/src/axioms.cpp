#include "cyl/axioms.hpp"

namespace ca {

namespace {

const Term X = var("x");
const Term Y = var("y");
const Term Z = var("z");

}  // namespace

std::vector<AxiomInstance> boolean_axioms() {
    auto n = [](const Term& t) { return comp(t); };
    return {
        {"C0", "sum-comm", {sum(X, Y), sum(Y, X)}},
        {"C0", "sum-assoc", {sum(sum(X, Y), Z), sum(X, sum(Y, Z))}},
        {"C0", "huntington", {sum(n(sum(n(X), Y)), n(sum(n(X), n(Y)))), X}},
        {"C0", "prod-def", {prod(X, Y), n(sum(n(X), n(Y)))}},
        {"C0", "symdiff-def", {symdiff(X, Y), sum(prod(X, n(Y)), prod(n(X), Y))}},
        {"C0", "one-def", {one(), sum(X, n(X))}},
        {"C0", "zero-def", {zero(), n(sum(X, n(X)))}},
    };
}

std::vector<AxiomInstance> ca_axiom_instances(Index bound) {
    auto out = boolean_axioms();
    auto add = [&](const char* g, const char* s, Term l, Term r) { out.push_back({g, s, {std::move(l), std::move(r)}}); };
    auto c = [](Index i, const Term& t) { return cyl(i, t); };
    auto d = [](Index i, Index j) { return diag(i, j); };
    for (Index i = 0; i < bound; ++i) {
        add("C1", "cyl-zero", c(i, zero()), zero());
        out.push_back({"C2", "cyl-extensive", leq(X, c(i, X))});
        add("C3", "cyl-modular", c(i, prod(X, c(i, Y))), prod(c(i, X), c(i, Y)));
        add("C5", "diag-unit", d(i, i), one());
        add("display", "cyl-idempotent", c(i, c(i, X)), c(i, X));
        add("display", "cyl-additive", c(i, sum(X, Y)), sum(c(i, X), c(i, Y)));
        add("display", "cyl-complemented", c(i, comp(c(i, X))), comp(c(i, X)));
        for (Index j = 0; j < bound; ++j) {
            if (j == i) continue;
            if (i < j) add("C4", "cyl-commute", c(i, c(j, X)), c(j, c(i, X)));
            add("C7", "diag-functional", prod(c(i, prod(d(i, j), X)), c(i, prod(d(i, j), comp(X)))),
                zero());
            add("display", "diag-symmetric", d(i, j), d(j, i));
            add("display", "diag-cyl-unit", c(i, d(i, j)), one());
            add("display", "diag-substitution", prod(d(i, j), c(i, prod(d(i, j), X))), prod(d(i, j), X));
            for (Index k = 0; k < bound; ++k) {
                if (k == i || k == j) continue;
                add("C6", "diag-compose", d(i, j), c(k, prod(d(i, k), d(k, j))));
            }
        }
    }
    return out;
}

}  // namespace ca
