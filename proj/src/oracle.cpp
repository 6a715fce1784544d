#include "cyl/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ca {

namespace {

// Calls f on every tuple of U^n.
void for_tuples(unsigned n, std::uint32_t base, const std::function<void(const Tuple&)>& f) {
    Tuple t(n, 0);
    while (true) {
        f(t);
        unsigned k = n;
        while (true) {
            if (k == 0) return;
            --k;
            if (++t[k] < base) break;
            t[k] = 0;
        }
    }
}

Point with_coords(Point s, const std::vector<Index>& H, const Tuple& q) {
    for (std::size_t k = 0; k < H.size(); ++k) s[H[k]] = q[k];
    return s;
}

// c_i R in the full set algebra on U^arity
std::set<Tuple> cyl_rel(const Relation& R, unsigned i) {
    std::set<Tuple> out;
    for (const auto& t : R.tuples)
        for (std::uint32_t u = 0; u < R.base; ++u) {
            Tuple q = t;
            q[i] = u;
            out.insert(q);
        }
    return out;
}

// membership of p in c_{ks} X: some choice of values on coordinates ks gives a member
bool in_cylinder(const PointSet& X, const Point& p, const std::vector<Index>& ks) {
    bool found = false;
    for_tuples(static_cast<unsigned>(ks.size()), X.space()->base(), [&](const Tuple& q) {
        if (!found && X.contains(with_coords(p, ks, q))) found = true;
    });
    return found;
}

}  // namespace

Relation relation(unsigned arity, std::uint32_t base, std::set<Tuple> tuples) {
    for (auto& t : tuples) {
        if (t.size() != arity) throw std::invalid_argument("tuple of wrong arity");
        for (auto v : t)
            if (v >= base) throw std::invalid_argument("tuple entry outside base");
    }
    return Relation{arity, base, std::move(tuples)};
}

Relation section(const PointSet& X, const Point& s, const std::vector<Index>& H) {
    const auto& sp = *X.space();
    std::set<Index> seen;
    for (auto h : H) {
        if (h >= sp.dim()) throw std::out_of_range("section coordinate out of range");
        if (!seen.insert(h).second) throw std::invalid_argument("section coordinates must be repetition-free");
    }
    Relation r{static_cast<unsigned>(H.size()), sp.base(), {}};
    for_tuples(r.arity, sp.base(), [&](const Tuple& q) {
        if (X.contains(with_coords(s, H, q))) r.tuples.insert(q);
    });
    return r;
}

bool is_sensitive_cut(const Relation& X, const Relation& R) {
    if (X.arity != R.arity || X.base != R.base) throw std::invalid_argument("relations differ in arity or base");
    for (auto& t : X.tuples)
        if (!R.contains(t)) throw std::invalid_argument("X is not a subset of R");
    Relation rest{R.arity, R.base, {}};
    for (auto& t : R.tuples)
        if (!X.contains(t)) rest.tuples.insert(t);
    for (unsigned i = 0; i < R.arity; ++i)
        if (cyl_rel(X, i) != cyl_rel(rest, i)) return false;
    return true;
}

namespace {

bool irreflexive(const Relation& r) {
    for (auto& t : r.tuples)
        if (t[0] == t[1]) return false;
    return true;
}
bool antisymmetric(const Relation& r) {
    for (auto& t : r.tuples)
        if (t[0] != t[1] && r.contains({t[1], t[0]})) return false;
    return true;
}
bool transitive(const Relation& r) {
    for (auto& a : r.tuples)
        for (auto& b : r.tuples)
            if (a[1] == b[0] && !r.contains({a[0], b[1]})) return false;
    return true;
}

}  // namespace

bool is_strict_linear_order(const Relation& rel, const std::set<std::uint32_t>& W) {
    if (rel.arity != 2) throw std::invalid_argument("order relation must be binary");
    if (!irreflexive(rel) || !antisymmetric(rel) || !transitive(rel)) return false;
    std::set<std::uint32_t> dom, rng;
    for (auto& t : rel.tuples) {
        dom.insert(t[0]);
        rng.insert(t[1]);
    }
    if (dom != W || rng != W) return false;
    for (auto u : W)
        for (auto v : W)
            if (u != v && !rel.contains({u, v}) && !rel.contains({v, u})) return false;
    return true;
}

bool is_strict_total_order(const Relation& rel, const std::set<std::uint32_t>& W) {
    if (rel.arity != 2) throw std::invalid_argument("order relation must be binary");
    for (auto& t : rel.tuples)
        if (!W.count(t[0]) || !W.count(t[1])) return false;
    if (!irreflexive(rel) || !antisymmetric(rel) || !transitive(rel)) return false;
    for (auto u : W)
        for (auto v : W)
            if (u != v && !rel.contains({u, v}) && !rel.contains({v, u})) return false;
    return true;
}

bool is_uniform_equivalence(const Relation& rel, std::uint32_t base, unsigned n) {
    if (rel.arity != 2) throw std::invalid_argument("equivalence relation must be binary");
    for (std::uint32_t u = 0; u < base; ++u)
        if (!rel.contains({u, u})) return false;
    for (auto& t : rel.tuples)
        if (!rel.contains({t[1], t[0]})) return false;
    if (!transitive(rel)) return false;
    for (std::uint32_t u = 0; u < base; ++u) {
        unsigned size = 0;
        for (std::uint32_t v = 0; v < base; ++v) size += rel.contains({u, v});
        if (size != n) return false;
    }
    return true;
}

bool express_oracle(const PointSet& X) {
    const auto& sp = *X.space();
    if (sp.dim() < 3) throw std::invalid_argument("express_oracle needs dimension >= 3");
    const std::uint32_t U = sp.base();
    bool ok = true;
    X.bits().for_each([&](std::size_t cell) {
        if (!ok) return;
        Point s = sp.point(cell);
        Relation R = section(X, s, {0, 1, 2});
        Relation Z{3, U, {}}, less{2, U, {}};
        std::set<std::uint32_t> W;
        for_tuples(3, U, [&](const Tuple& q) {
            Point p = with_coords(s, {0, 1, 2}, q);
            if (in_cylinder(X, p, {0}) && in_cylinder(X, p, {2})) Z.tuples.insert(q);
        });
        for_tuples(2, U, [&](const Tuple& q) {
            if (in_cylinder(X, with_coords(s, {0, 1}, q), {2})) less.tuples.insert(q);
        });
        for (std::uint32_t u = 0; u < U; ++u)
            if (in_cylinder(X, with_coords(s, {0}, {u}), {1, 2})) W.insert(u);
        if (!is_sensitive_cut(R, Z)) return;
        if (!is_strict_linear_order(less, W)) return;
        std::set<Tuple> triples;
        for (auto u : W)
            for (auto v : W)
                for (auto w : W)
                    if (less.contains({u, v}) && less.contains({v, w})) triples.insert({u, v, w});
        if (Z.tuples != triples) return;
        ok = false;
    });
    return ok;
}

bool equiv_oracle(const PointSet& X, unsigned n) {
    const auto& sp = *X.space();
    if (n < 2 || sp.dim() < n + 1) throw std::invalid_argument("equiv_oracle needs n >= 2 and dimension >= n+1");
    std::vector<Index> ks;
    for (Index k = 2; k <= n; ++k) ks.push_back(k);
    for (std::size_t c = 0; c < sp.cells(); ++c)
        if (X.contains_cell(c) != in_cylinder(X, sp.point(c), ks))
            throw PreconditionError("equiv_oracle: element is not closed under c_2..c_n");
    bool ok = true;
    X.bits().for_each([&](std::size_t cell) {
        if (ok && is_uniform_equivalence(section(X, sp.point(cell), {0, 1}), sp.base(), n)) ok = false;
    });
    return ok;
}

std::set<Index> dimension_set(const PointSet& X) {
    const auto& sp = *X.space();
    std::set<Index> out;
    for (Index i = 0; i < sp.dim(); ++i)
        for (std::size_t c = 0; c < sp.cells(); ++c)
            if (!X.contains_cell(c) && in_cylinder(X, sp.point(c), {i})) {
                out.insert(i);
                break;
            }
    return out;
}

bool is_regular(const PointSet& X) {
    const auto& sp = *X.space();
    auto D = dimension_set(X);
    std::map<Tuple, bool> seen;
    for (std::size_t c = 0; c < sp.cells(); ++c) {
        Point p = sp.point(c);
        Tuple key;
        for (auto i : D) key.push_back(p[i]);
        bool m = X.contains_cell(c);
        auto [it, fresh] = seen.emplace(key, m);
        if (!fresh && it->second != m) return false;
    }
    return true;
}

MasterPointFacts master_point_facts(const PointSet& X, const Point& s) {
    const auto& sp = *X.space();
    const std::uint32_t U = sp.base();
    MasterPointFacts f{};
    Relation R = section(X, s, {0, 1, 2});
    Relation Z{3, U, {}};
    for_tuples(3, U, [&](const Tuple& q) {
        Point p = with_coords(s, {0, 1, 2}, q);
        if (in_cylinder(X, p, {0}) && in_cylinder(X, p, {2})) Z.tuples.insert(q);
    });
    f.sensitive_cut = is_sensitive_cut(R, Z);
    Relation less{2, U, {}}, shifted{2, U, {}};
    for_tuples(2, U, [&](const Tuple& q) {
        if (in_cylinder(X, with_coords(s, {0, 1}, q), {2})) less.tuples.insert(q);
        if (in_cylinder(X, with_coords(s, {1, 2}, q), {0})) shifted.tuples.insert(q);
    });
    f.closure_match = less == shifted;
    f.irreflexive = irreflexive(less);
    f.asymmetric = true;
    for (auto& t : less.tuples) f.asymmetric &= !less.contains({t[1], t[0]});
    f.transitive = transitive(less);
    std::set<std::uint32_t> dom, rng;
    for (auto& t : less.tuples) {
        dom.insert(t[0]);
        rng.insert(t[1]);
    }
    f.dom_rng_comparable = true;
    for (auto u : dom)
        for (auto v : rng)
            if (!less.contains({u, v}) && !less.contains({v, u})) f.dom_rng_comparable = false;
    return f;
}

UniformPointFacts uniform_point_facts(const PointSet& A, const Point& s, unsigned n) {
    const std::uint32_t U = A.space()->base();
    Relation R = section(A, s, {0, 1});
    UniformPointFacts f{};
    f.domain_full = true;
    for (std::uint32_t u = 0; u < U; ++u) {
        bool any = false;
        for (std::uint32_t v = 0; v < U; ++v) any |= R.contains({u, v});
        f.domain_full &= any;
    }
    f.symmetric = true;
    for (auto& t : R.tuples) f.symmetric &= R.contains({t[1], t[0]});
    f.transitive = transitive(R);
    f.reflexive = true;
    for (std::uint32_t u = 0; u < U; ++u) f.reflexive &= R.contains({u, u});

    // tuples u_0..u_{m-1} pairwise distinct with R(u_i,u_j) for i<j
    std::function<bool(std::vector<std::uint32_t>&, unsigned)> chain = [&](std::vector<std::uint32_t>& us,
                                                                           unsigned m) {
        if (us.size() == m) return true;
        for (std::uint32_t v = 0; v < U; ++v) {
            bool good = true;
            for (auto u : us) good = good && u != v && R.contains({u, v});
            if (!good) continue;
            us.push_back(v);
            if (chain(us, m)) return true;
            us.pop_back();
        }
        return false;
    };
    f.block_smaller = false;
    for (std::uint32_t u = 0; u < U && !f.block_smaller; ++u) {
        std::vector<std::uint32_t> us{u};
        if (!chain(us, n)) f.block_smaller = true;
    }
    std::vector<std::uint32_t> none;
    f.block_larger = chain(none, n + 1);
    return f;
}

}  // namespace ca
