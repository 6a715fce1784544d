#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cyl/space.hpp"
#include "cyl/term.hpp"

namespace ca {

using Assignment = std::map<std::string, PointSet>;

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Homomorphic evaluation over any algebra exposing
//   zero(), one(), join, meet, sym, complement, cyl(i, e), diag(i, j), dim().
// Shared subterm nodes are evaluated once.
template <class Alg, class Lookup>
typename Alg::Element evaluate(const Alg& alg, const Term& t, Lookup&& lookup) {
    using E = typename Alg::Element;
    std::unordered_map<const Node*, E> memo;
    auto go = [&](const Term& u, auto&& self) -> E {
        if (auto it = memo.find(u.node()); it != memo.end()) return it->second;
        E r;
        switch (u.op()) {
            case Op::Var: r = lookup(u.name()); break;
            case Op::Zero: r = alg.zero(); break;
            case Op::One: r = alg.one(); break;
            case Op::Diag:
                if (u.i() >= alg.dim() || u.j() >= alg.dim())
                    throw EvalError("diagonal index out of range in " + to_string(u));
                r = alg.diag(u.i(), u.j());
                break;
            case Op::Cyl:
                if (u.i() >= alg.dim()) throw EvalError("cylindrification index out of range in " + to_string(u));
                r = alg.cyl(u.i(), self(u.child(), self));
                break;
            case Op::Complement: r = alg.complement(self(u.child(), self)); break;
            case Op::Sum: r = alg.join(self(u.left(), self), self(u.right(), self)); break;
            case Op::Product: r = alg.meet(self(u.left(), self), self(u.right(), self)); break;
            case Op::SymDiff: r = alg.sym(self(u.left(), self), self(u.right(), self)); break;
        }
        memo.emplace(u.node(), r);
        return r;
    };
    return go(t, go);
}

// Operations of the full set algebra on a space, for the generic evaluator.
struct FullSetOps {
    using Element = PointSet;
    SpacePtr sp;
    Index dim() const { return sp->dim(); }
    PointSet zero() const { return PointSet::empty(sp); }
    PointSet one() const { return PointSet::full(sp); }
    PointSet join(const PointSet& a, const PointSet& b) const { return a | b; }
    PointSet meet(const PointSet& a, const PointSet& b) const { return a & b; }
    PointSet sym(const PointSet& a, const PointSet& b) const { return a ^ b; }
    PointSet complement(const PointSet& a) const { return ~a; }
    PointSet cyl(Index i, const PointSet& a) const { return ::ca::cyl(i, a); }
    PointSet diag(Index i, Index j) const { return ::ca::diag(sp, i, j); }
};

PointSet eval(const SpacePtr& sp, const Term& t, const Assignment& a);
// true iff both sides evaluate to the same PointSet
bool holds_at(const SpacePtr& sp, const Equation& e, const Assignment& a);

}  // namespace ca
