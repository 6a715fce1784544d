#include "cyl/eval.hpp"

namespace ca {

PointSet eval(const SpacePtr& sp, const Term& t, const Assignment& a) {
    FullSetOps ops{sp};
    return evaluate(ops, t, [&](const std::string& v) -> PointSet {
        auto it = a.find(v);
        if (it == a.end()) throw EvalError("unbound variable " + v);
        if (!it->second.space()->same(*sp)) throw EvalError("variable " + v + " bound in a different space");
        return it->second;
    });
}

bool holds_at(const SpacePtr& sp, const Equation& e, const Assignment& a) {
    return eval(sp, e.lhs, a) == eval(sp, e.rhs, a);
}

}  // namespace ca
