#include "cyl/term.hpp"

#include <algorithm>
#include <functional>

namespace ca {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

Term make(Op op, std::string name, Index i, Index j, const Term* a, const Term* b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->name = std::move(name);
    n->i = i;
    n->j = j;
    std::size_t h = mix(static_cast<std::size_t>(op) * 1315423911u, std::hash<std::string>{}(n->name));
    h = mix(h, i);
    h = mix(h, j * 7919u);
    if (a) {
        n->a = *a;
        n->size += a->size();
        n->depth = a->depth() + 1;
        h = mix(h, a->hash());
    }
    if (b) {
        n->b = *b;
        n->size += b->size();
        n->depth = std::max(n->depth, b->depth() + 1);
        h = mix(h, b->hash());
    }
    n->hash = h;
    return Term(std::move(n));
}

const Term& zero_term() {
    static const Term z = make(Op::Zero, "", 0, 0, nullptr, nullptr);
    return z;
}


}  // namespace

Term::Term() : n_(zero_term().n_) {}

Op Term::op() const { return n_->op; }
const std::string& Term::name() const { return n_->name; }
Index Term::i() const { return n_->i; }
Index Term::j() const { return n_->j; }
const Term& Term::left() const { return n_->a; }
const Term& Term::right() const { return n_->b; }
std::size_t Term::size() const { return n_->size; }
std::size_t Term::depth() const { return n_->depth; }
std::size_t Term::hash() const { return n_->hash; }

bool Term::operator==(const Term& o) const {
    if (n_ == o.n_) return true;
    if (n_->hash != o.n_->hash || n_->size != o.n_->size) return false;
    return compare(*this, o) == 0;
}

int compare(const Term& a, const Term& b) {
    if (a.n_ == b.n_) return 0;
    if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
    switch (a.op()) {
        case Op::Var:
            return a.name() < b.name() ? -1 : (a.name() == b.name() ? 0 : 1);
        case Op::Zero:
        case Op::One:
            return 0;
        case Op::Diag:
            if (a.i() != b.i()) return a.i() < b.i() ? -1 : 1;
            if (a.j() != b.j()) return a.j() < b.j() ? -1 : 1;
            return 0;
        case Op::Cyl:
            if (a.i() != b.i()) return a.i() < b.i() ? -1 : 1;
            return compare(a.child(), b.child());
        case Op::Complement:
            return compare(a.child(), b.child());
        default: {
            int c = compare(a.left(), b.left());
            return c ? c : compare(a.right(), b.right());
        }
    }
}

Term var(const std::string& name) { return make(Op::Var, name, 0, 0, nullptr, nullptr); }
Term zero() { return zero_term(); }
Term one() {
    static const Term o = make(Op::One, "", 0, 0, nullptr, nullptr);
    return o;
}
Term sum(const Term& a, const Term& b) { return make(Op::Sum, "", 0, 0, &a, &b); }
Term prod(const Term& a, const Term& b) { return make(Op::Product, "", 0, 0, &a, &b); }
Term symdiff(const Term& a, const Term& b) { return make(Op::SymDiff, "", 0, 0, &a, &b); }
Term comp(const Term& a) { return make(Op::Complement, "", 0, 0, &a, nullptr); }
Term cyl(Index i, const Term& a) { return make(Op::Cyl, "", i, 0, &a, nullptr); }
Term diag(Index i, Index j) { return make(Op::Diag, "", i, j, nullptr, nullptr); }
Term minus(const Term& a, const Term& b) { return prod(a, comp(b)); }

Term cyls(const std::vector<Index>& idx, const Term& t) {
    Term r = t;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) r = cyl(*it, r);
    return r;
}

Term cyl_prefix(Index m, const Term& t) {
    std::vector<Index> idx;
    for (Index k = 0; k < m; ++k) idx.push_back(k);
    return cyls(idx, t);
}

Term sum_all(const std::vector<Term>& ts) {
    if (ts.empty()) return zero();
    Term r = ts[0];
    for (std::size_t k = 1; k < ts.size(); ++k) r = sum(r, ts[k]);
    return r;
}

Term prod_all(const std::vector<Term>& ts) {
    if (ts.empty()) return one();
    Term r = ts[0];
    for (std::size_t k = 1; k < ts.size(); ++k) r = prod(r, ts[k]);
    return r;
}

bool Equation::operator<(const Equation& o) const {
    int c = compare(lhs, o.lhs);
    return c ? c < 0 : compare(rhs, o.rhs) < 0;
}

Equation leq(const Term& l, const Term& r) { return Equation{sum(l, r), r}; }

Renaming::Renaming(std::map<Index, Index> m) {
    std::set<Index> seen;
    for (auto [k, v] : m) {
        if (!seen.insert(v).second) throw std::invalid_argument("renaming is not injective");
        if (k != v) m_[k] = v;
    }
}

Renaming Renaming::swap(Index i, Index j) { return Renaming({{i, j}, {j, i}}); }

Renaming Renaming::from_permutation(const std::vector<Index>& perm) {
    std::map<Index, Index> m;
    for (Index k = 0; k < perm.size(); ++k) m[k] = perm[k];
    Renaming r(m);
    if (!r.is_permutation_of(static_cast<Index>(perm.size())))
        throw std::invalid_argument("not a permutation");
    return r;
}

Index Renaming::operator()(Index i) const {
    auto it = m_.find(i);
    return it == m_.end() ? i : it->second;
}

bool Renaming::is_permutation_of(Index d) const {
    std::set<Index> img;
    for (auto [k, v] : m_) {
        if (k >= d || v >= d) return false;
        img.insert(v);
    }
    for (auto [k, v] : m_)
        if (!img.count(k)) return false;
    return true;
}

Renaming Renaming::compose(const Renaming& other) const {
    std::map<Index, Index> m;
    std::set<Index> dom;
    for (auto [k, v] : other.m_) dom.insert(k);
    for (auto [k, v] : m_) dom.insert(k);
    for (Index k : dom) m[k] = (*this)(other(k));
    return Renaming(m);
}

Renaming Renaming::inverse() const {
    std::map<Index, Index> m;
    for (auto [k, v] : m_) m[v] = k;
    Renaming r(m);
    for (auto [k, v] : r.m_)
        if (!m_.count(v)) throw std::invalid_argument("renaming is not a finite permutation");
    return r;
}

namespace {

template <class F>
void visit(const Term& t, F&& f) {
    f(t);
    switch (t.op()) {
        case Op::Sum:
        case Op::Product:
        case Op::SymDiff:
            visit(t.left(), f);
            visit(t.right(), f);
            break;
        case Op::Complement:
        case Op::Cyl:
            visit(t.child(), f);
            break;
        default:
            break;
    }
}

}  // namespace

std::set<Index> indices(const Term& t) {
    std::set<Index> r;
    visit(t, [&](const Term& u) {
        if (u.op() == Op::Cyl) r.insert(u.i());
        if (u.op() == Op::Diag) {
            r.insert(u.i());
            r.insert(u.j());
        }
    });
    return r;
}

std::set<Index> indices(const Equation& e) {
    auto r = indices(e.lhs);
    auto s = indices(e.rhs);
    r.insert(s.begin(), s.end());
    return r;
}

std::optional<Index> max_index(const Term& t) {
    auto s = indices(t);
    if (s.empty()) return std::nullopt;
    return *s.rbegin();
}

std::optional<Index> max_index(const Equation& e) {
    auto s = indices(e);
    if (s.empty()) return std::nullopt;
    return *s.rbegin();
}

std::set<std::string> variables(const Term& t) {
    std::set<std::string> r;
    visit(t, [&](const Term& u) {
        if (u.is_var()) r.insert(u.name());
    });
    return r;
}

std::set<std::string> variables(const Equation& e) {
    auto r = variables(e.lhs);
    auto s = variables(e.rhs);
    r.insert(s.begin(), s.end());
    return r;
}

std::vector<std::string> variables_in_order(const Equation& e) {
    std::vector<std::string> r;
    auto add = [&](const Term& u) {
        if (u.is_var() && std::find(r.begin(), r.end(), u.name()) == r.end()) r.push_back(u.name());
    };
    visit(e.lhs, add);
    visit(e.rhs, add);
    return r;
}

namespace {

template <class Leaf>
Term rebuild(const Term& t, Leaf&& leaf) {
    switch (t.op()) {
        case Op::Sum:
            return sum(rebuild(t.left(), leaf), rebuild(t.right(), leaf));
        case Op::Product:
            return prod(rebuild(t.left(), leaf), rebuild(t.right(), leaf));
        case Op::SymDiff:
            return symdiff(rebuild(t.left(), leaf), rebuild(t.right(), leaf));
        case Op::Complement:
            return comp(rebuild(t.child(), leaf));
        case Op::Cyl:
            return leaf.cyl(t.i(), rebuild(t.child(), leaf));
        default:
            return leaf(t);
    }
}

struct RenameLeaf {
    const Renaming& r;
    Term operator()(const Term& t) const {
        if (t.op() == Op::Diag) return diag(r(t.i()), r(t.j()));
        return t;
    }
    Term cyl(Index i, const Term& c) const { return cyl_(r(i), c); }
    static Term cyl_(Index i, const Term& c) { return ::ca::cyl(i, c); }
};

struct SubstLeaf {
    const Substitution& s;
    Term operator()(const Term& t) const {
        if (t.is_var()) {
            auto it = s.find(t.name());
            if (it != s.end()) return it->second;
        }
        return t;
    }
    Term cyl(Index i, const Term& c) const { return ::ca::cyl(i, c); }
};

}  // namespace

Term rename(const Term& t, const Renaming& r) {
    if (r.map().empty()) return t;
    return rebuild(t, RenameLeaf{r});
}
Equation rename(const Equation& e, const Renaming& r) { return {rename(e.lhs, r), rename(e.rhs, r)}; }

Term substitute(const Term& t, const Substitution& s) {
    if (s.empty()) return t;
    return rebuild(t, SubstLeaf{s});
}
Equation substitute(const Equation& e, const Substitution& s) {
    return {substitute(e.lhs, s), substitute(e.rhs, s)};
}

namespace {

void print(const Term& t, std::string& out, bool bare) {
    switch (t.op()) {
        case Op::Var:
            out += t.name();
            return;
        case Op::Zero:
            out += '0';
            return;
        case Op::One:
            out += '1';
            return;
        case Op::Diag:
            out += 'd' + std::to_string(t.i()) + ',' + std::to_string(t.j());
            return;
        case Op::Complement:
            out += '~';
            print(t.child(), out, false);
            return;
        case Op::Cyl:
            out += 'c' + std::to_string(t.i()) + '(';
            print(t.child(), out, true);
            out += ')';
            return;
        default: {
            const char* sym = t.op() == Op::Sum ? " + " : t.op() == Op::Product ? " & " : " ^ ";
            if (!bare) out += '(';
            print(t.left(), out, false);
            out += sym;
            print(t.right(), out, false);
            if (!bare) out += ')';
        }
    }
}

}  // namespace

std::string to_string(const Term& t) {
    std::string s;
    print(t, s, true);
    return s;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

}  // namespace ca
