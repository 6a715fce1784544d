#include "cyl/validity.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "cyl/sat.hpp"

namespace ca {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Valid: return "valid";
        case VerdictKind::Fails: return "fails";
        default: return "unknown-truncated";
    }
}

bool holds_at(const AtomAlgebra& A, const Equation& e, const std::map<std::string, BitVector>& a) {
    auto look = [&](const std::string& v) -> BitVector {
        auto it = a.find(v);
        if (it == a.end()) throw EvalError("unbound variable " + v);
        return it->second;
    };
    return evaluate(A, e.lhs, look) == evaluate(A, e.rhs, look);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void check_indices(Index dim, const Equation& e) {
    if (auto m = max_index(e); m && *m >= dim)
        throw EvalError("equation uses index " + std::to_string(*m) + " but the algebra has dimension " +
                        std::to_string(dim));
}

// Tseitin encoding with constant folding and structural hashing.
class Circuit {
public:
    explicit Circuit(sat::Solver& s) : s_(s) {
        auto v = s_.new_var();
        T = sat::pos(v);
        F = sat::neg(v);
        s_.add_clause({T});
    }
    sat::Lit T, F;

    sat::Lit fresh() { return sat::pos(s_.new_var()); }

    sat::Lit AND(sat::Lit a, sat::Lit b) {
        if (a == F || b == F || a == sat::negate(b)) return F;
        if (a == T) return b;
        if (b == T || a == b) return a;
        if (a > b) std::swap(a, b);
        auto key = (std::uint64_t{a} << 32) | b;
        if (auto it = and_.find(key); it != and_.end()) return it->second;
        auto v = fresh();
        s_.add_clause({sat::negate(v), a});
        s_.add_clause({sat::negate(v), b});
        s_.add_clause({v, sat::negate(a), sat::negate(b)});
        and_.emplace(key, v);
        return v;
    }
    sat::Lit OR(sat::Lit a, sat::Lit b) { return sat::negate(AND(sat::negate(a), sat::negate(b))); }
    sat::Lit XOR(sat::Lit a, sat::Lit b) {
        if (a == F) return b;
        if (b == F) return a;
        if (a == T) return sat::negate(b);
        if (b == T) return sat::negate(a);
        if (a == b) return F;
        if (a == sat::negate(b)) return T;
        bool flip = false;
        if (a & 1u) { a ^= 1u; flip = !flip; }
        if (b & 1u) { b ^= 1u; flip = !flip; }
        if (a > b) std::swap(a, b);
        auto key = (std::uint64_t{a} << 32) | b;
        sat::Lit v;
        if (auto it = xor_.find(key); it != xor_.end()) v = it->second;
        else {
            v = fresh();
            auto na = sat::negate(a), nb = sat::negate(b), nv = sat::negate(v);
            s_.add_clause({nv, a, b});
            s_.add_clause({nv, na, nb});
            s_.add_clause({v, na, b});
            s_.add_clause({v, a, nb});
            xor_.emplace(key, v);
        }
        return flip ? sat::negate(v) : v;
    }
    sat::Lit ORN(std::vector<sat::Lit> ls) {
        std::vector<sat::Lit> k;
        for (auto l : ls) {
            if (l == T) return T;
            if (l != F) k.push_back(l);
        }
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        if (k.empty()) return F;
        if (k.size() == 1) return k[0];
        for (std::size_t i = 0; i + 1 < k.size(); ++i)
            if (k[i + 1] == sat::negate(k[i])) return T;
        if (auto it = orn_.find(k); it != orn_.end()) return it->second;
        auto v = fresh();
        std::vector<sat::Lit> big{sat::negate(v)};
        for (auto l : k) {
            big.push_back(l);
            s_.add_clause({v, sat::negate(l)});
        }
        s_.add_clause(big);
        orn_.emplace(k, v);
        return v;
    }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<sat::Lit>& v) const {
            std::size_t h = v.size();
            for (auto x : v) h = h * 1000003u ^ x;
            return h;
        }
    };
    sat::Solver& s_;
    std::unordered_map<std::uint64_t, sat::Lit> and_, xor_;
    std::unordered_map<std::vector<sat::Lit>, sat::Lit, VecHash> orn_;
};

using Bus = std::vector<sat::Lit>;

class Encoder {
public:
    Encoder(const AtomAlgebra& A, Circuit& c, const std::map<std::string, Bus>& vars) : A_(A), c_(c), vars_(vars) {}

    const Bus& encode(const Term& t) {
        if (auto it = memo_.find(t); it != memo_.end()) return it->second;
        std::size_t n = A_.atoms();
        Bus r(n);
        switch (t.op()) {
            case Op::Var: r = vars_.at(t.name()); break;
            case Op::Zero: std::fill(r.begin(), r.end(), c_.F); break;
            case Op::One: std::fill(r.begin(), r.end(), c_.T); break;
            case Op::Diag: {
                auto d = A_.diag(t.i(), t.j());
                for (std::size_t a = 0; a < n; ++a) r[a] = d.test(a) ? c_.T : c_.F;
                break;
            }
            case Op::Complement: {
                const Bus& x = encode(t.child());
                for (std::size_t a = 0; a < n; ++a) r[a] = sat::negate(x[a]);
                break;
            }
            case Op::Cyl: {
                const Bus x = encode(t.child());
                for (std::size_t a = 0; a < n; ++a) {
                    Bus in;
                    for (auto b : A_.cyl_preimage(t.i(), a)) in.push_back(x[b]);
                    r[a] = c_.ORN(std::move(in));
                }
                break;
            }
            default: {
                const Bus l = encode(t.left());
                const Bus& rr = encode(t.right());
                for (std::size_t a = 0; a < n; ++a) {
                    if (t.op() == Op::Sum) r[a] = c_.OR(l[a], rr[a]);
                    else if (t.op() == Op::Product) r[a] = c_.AND(l[a], rr[a]);
                    else r[a] = c_.XOR(l[a], rr[a]);
                }
            }
        }
        return memo_.emplace(t, std::move(r)).first->second;
    }

private:
    const AtomAlgebra& A_;
    Circuit& c_;
    const std::map<std::string, Bus>& vars_;
    std::unordered_map<Term, Bus, TermHash> memo_;
};

}  // namespace

Verdict check_by_sat(const AtomAlgebra& A, const Equation& e) {
    check_indices(A.dim(), e);
    sat::Solver s;
    Circuit c(s);
    std::map<std::string, Bus> vars;
    for (auto& v : variables(e)) {
        Bus b(A.atoms());
        for (auto& l : b) l = c.fresh();
        vars[v] = b;
    }
    Encoder enc(A, c, vars);
    Bus L = enc.encode(e.lhs);
    Bus R = enc.encode(e.rhs);
    Bus diff;
    for (std::size_t a = 0; a < A.atoms(); ++a) diff.push_back(c.XOR(L[a], R[a]));
    s.add_clause({c.ORN(diff)});
    Verdict v;
    v.method = "sat";
    auto res = s.solve();
    v.assignments_checked = s.conflicts();
    if (res == sat::Result::Unsat) {
        v.kind = VerdictKind::Valid;
        return v;
    }
    v.kind = VerdictKind::Fails;
    for (auto& [name, bus] : vars) {
        BitVector x(A.atoms());
        for (std::size_t a = 0; a < A.atoms(); ++a)
            if (s.model_value(sat::var_of(bus[a])) != static_cast<bool>(bus[a] & 1u)) x.set(a);
        v.witness[name] = x;
    }
    if (!holds_at(A, e, v.witness)) return v;
    throw std::logic_error("SAT witness does not refute " + to_string(e));
}

Verdict check_by_enumeration(const AtomAlgebra& A, const Equation& e) {
    check_indices(A.dim(), e);
    auto vs = variables_in_order(e);
    std::size_t n = A.atoms();
    std::size_t bits = vs.size() * n;
    if (bits > 40) throw BudgetError("enumeration over 2^" + std::to_string(bits) + " assignments refused");
    Verdict v;
    v.method = "enumeration";
    std::map<std::string, BitVector> asg;
    for (auto& name : vs) asg[name] = BitVector(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
        for (std::size_t k = 0; k < vs.size(); ++k) {
            auto& x = asg[vs[k]];
            for (std::size_t a = 0; a < n; ++a) x.set(a, (m >> (k * n + a)) & 1u);
        }
        ++v.assignments_checked;
        if (!holds_at(A, e, asg)) {
            v.kind = VerdictKind::Fails;
            v.witness = asg;
            return v;
        }
    }
    v.kind = VerdictKind::Valid;
    return v;
}

Verdict check(const AtomAlgebra& A, const Equation& e, const CheckMode& mode, const Limits& lim) {
    check_indices(A.dim(), e);
    if (mode.exhaustive) {
        auto bits = variables(e).size() * A.atoms();
        if (bits <= lim.enumeration_bits) return check_by_enumeration(A, e);
        return check_by_sat(A, e);
    }
    Verdict v;
    v.method = "sampled";
    auto vs = variables_in_order(e);
    for (std::uint64_t k = 0; k < mode.samples; ++k) {
        std::mt19937_64 rng(splitmix(mode.seed ^ splitmix(k)));
        std::map<std::string, BitVector> asg;
        for (auto& name : vs) {
            BitVector x(A.atoms());
            for (std::size_t a = 0; a < A.atoms(); ++a) x.set(a, rng() & 1u);
            asg[name] = x;
        }
        ++v.assignments_checked;
        if (!holds_at(A, e, asg)) {
            v.kind = VerdictKind::Fails;
            v.witness = asg;
            return v;
        }
    }
    return v;
}

Verdict holds(const SetAlgebra& alg, const Equation& e, const CheckMode& mode, const Limits& lim) {
    const auto& sp = alg.space();
    check_indices(sp->dim(), e);
    if (mode.exhaustive) {
        if (alg.truncated()) {
            Verdict v;
            v.kind = VerdictKind::UnknownTruncated;
            v.method = "refused";
            v.note = "carrier closure was truncated";
            return v;
        }
        if (alg.is_full() && sp->cells() > lim.full_exhaustive_cells)
            throw BudgetError("exhaustive validity over the full carrier of " + sp->describe() + " (2^" +
                              std::to_string(sp->cells()) + " elements) is refused; use sampled mode");
        const auto& A = alg.atom_structure(lim.full_exhaustive_cells);
        Verdict v = check(A, e, mode, lim);
        for (auto& [name, x] : v.witness) v.point_witness.emplace(name, alg.element(x));
        if (v.fails() && holds_at(sp, e, v.point_witness))
            throw std::logic_error("atom-structure witness does not refute the equation over points");
        return v;
    }
    Verdict v;
    v.method = "sampled";
    auto vs = variables_in_order(e);
    for (std::uint64_t k = 0; k < mode.samples; ++k) {
        std::mt19937_64 rng(splitmix(mode.seed ^ splitmix(k)));
        Assignment asg;
        for (auto& name : vs) {
            if (alg.is_full()) {
                asg.emplace(name, PointSet::random(sp, rng));
            } else {
                BitVector x(alg.atom_count());
                for (std::size_t a = 0; a < x.size(); ++a) x.set(a, rng() & 1u);
                asg.emplace(name, alg.element(x));
            }
        }
        ++v.assignments_checked;
        if (!holds_at(sp, e, asg)) {
            v.kind = VerdictKind::Fails;
            v.point_witness = asg;
            return v;
        }
    }
    return v;
}

}  // namespace ca
