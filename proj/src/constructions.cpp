#include "cyl/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyl/builders.hpp"
#include "cyl/oracle.hpp"
#include "cyl/sat.hpp"

namespace ca {

bool AxiomReport::all_pass() const { return failures() == 0; }

std::size_t AxiomReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const AxiomResult& r) { return !r.verdict.valid(); }));
}

AxiomReport check_ca_axioms(const AtomAlgebra& A, const CheckMode& mode, const Limits& lim) {
    AxiomReport rep;
    for (auto& ax : ca_axiom_instances(A.dim())) rep.results.push_back({ax, check(A, ax.equation, mode, lim)});
    return rep;
}

// ---- split algebra

SplitAlgebra SplitAlgebra::build(Index dim, const std::vector<std::uint32_t>& sizes, const Limits& lim) {
    if (dim < 3) throw std::invalid_argument("split algebra needs dimension at least 3");
    if (sizes.size() != dim) throw std::invalid_argument("split algebra needs one block size per coordinate");
    if (sizes[0] != 1) throw std::invalid_argument("V_0 must be a singleton");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] < 2) throw std::invalid_argument("V_i must have at least two elements for i >= 1");
    std::uint32_t U = std::accumulate(sizes.begin(), sizes.end(), 0u);
    auto sp = CylSpace::make(dim, U, lim);
    std::vector<std::uint32_t> lo(dim);
    for (Index i = 1; i < dim; ++i) lo[i] = lo[i - 1] + sizes[i - 1];
    BitVector gb(sp->cells());
    for (std::size_t c = 0; c < sp->cells(); ++c) {
        bool in = true;
        for (Index i = 0; i < dim && in; ++i) {
            auto u = sp->coord(c, i);
            in = u >= lo[i] && u < lo[i] + sizes[i];
        }
        gb.set(c, in);
    }
    SplitAlgebra S;
    S.g_ = PointSet(sp, std::move(gb));
    S.base_ = SetAlgebra::generate(sp, {S.g_}, lim.atom_budget);
    if (S.base_.truncated()) throw BudgetError("closure of g exceeded the atom budget");
    auto ga = S.base_.decompose(S.g_);
    if (ga.count() != 1) throw std::runtime_error("g is not an atom of the generated algebra");
    S.g_atom_ = ga.first();
    for (Index i = 0; i < dim; ++i)
        for (Index j = i + 1; j < dim; ++j)
            if (!(S.g_ & ca::diag(sp, i, j)).is_empty()) throw std::runtime_error("g meets a diagonal");
    std::size_t n = S.base_.atom_count();
    S.rest_of_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
        if (a != S.g_atom_) {
            S.rest_of_[a] = static_cast<long>(S.rest_.size());
            S.rest_.push_back(a);
        }
    const auto& B = S.base_.atom_structure();
    std::size_t m = S.rest_.size() + 2;
    std::vector<std::vector<BitVector>> c(dim, std::vector<BitVector>(m)), d(dim, std::vector<BitVector>(dim));
    std::vector<std::string> labels;
    for (auto a : S.rest_) labels.push_back(B.label(a));
    labels.push_back("g'");
    labels.push_back("g''");
    for (Index i = 0; i < dim; ++i) {
        for (std::size_t r = 0; r < S.rest_.size(); ++r) {
            Element e{BitVector(S.rest_.size()), 0};
            e.b.set(r);
            c[i][r] = S.to_atoms(S.cyl(i, e));
        }
        c[i][m - 2] = c[i][m - 1] = S.to_atoms(S.cyl(i, S.g_prime()));
        for (Index j = 0; j < dim; ++j) d[i][j] = S.to_atoms(S.diag(i, j));
    }
    S.atoms_ = AtomAlgebra(dim, std::move(c), std::move(d), std::move(labels));
    return S;
}

SplitAlgebra::Element SplitAlgebra::canon(const BitVector& s) const {
    Element e{BitVector(rest_.size()), 0};
    s.for_each([&](std::size_t a) {
        if (a == g_atom_) e.h = 3;
        else e.b.set(static_cast<std::size_t>(rest_of_[a]));
    });
    return e;
}

BitVector SplitAlgebra::base_atoms(const Element& x) const {
    BitVector s(base_.atom_count());
    x.b.for_each([&](std::size_t r) { s.set(rest_[r]); });
    if (x.h) s.set(g_atom_);
    return s;
}

SplitAlgebra::Element SplitAlgebra::zero() const { return {BitVector(rest_.size()), 0}; }
SplitAlgebra::Element SplitAlgebra::one() const { return {BitVector(rest_.size(), true), 3}; }
SplitAlgebra::Element SplitAlgebra::join(const Element& a, const Element& b) const {
    return {a.b | b.b, static_cast<std::uint8_t>(a.h | b.h)};
}
SplitAlgebra::Element SplitAlgebra::meet(const Element& a, const Element& b) const {
    return {a.b & b.b, static_cast<std::uint8_t>(a.h & b.h)};
}
SplitAlgebra::Element SplitAlgebra::sym(const Element& a, const Element& b) const {
    return {a.b ^ b.b, static_cast<std::uint8_t>(a.h ^ b.h)};
}
SplitAlgebra::Element SplitAlgebra::complement(const Element& a) const {
    return {~a.b, static_cast<std::uint8_t>(3 & ~a.h)};
}
SplitAlgebra::Element SplitAlgebra::cyl(Index i, const Element& x) const {
    return canon(base_.atom_structure().cyl(i, base_atoms(x)));
}
SplitAlgebra::Element SplitAlgebra::diag(Index i, Index j) const {
    return canon(base_.atom_structure().diag(i, j));
}
SplitAlgebra::Element SplitAlgebra::from_base(const PointSet& x) const { return canon(base_.decompose(x)); }

std::optional<PointSet> SplitAlgebra::to_base(const Element& x) const {
    if (x.h == 1 || x.h == 2) return std::nullopt;
    return base_.element(base_atoms(x));
}

SplitAlgebra::Element SplitAlgebra::g_prime() const { return {BitVector(rest_.size()), 1}; }
SplitAlgebra::Element SplitAlgebra::g_second() const { return {BitVector(rest_.size()), 2}; }

BitVector SplitAlgebra::to_atoms(const Element& x) const {
    BitVector s(rest_.size() + 2);
    x.b.for_each([&](std::size_t r) { s.set(r); });
    if (x.h & 1) s.set(rest_.size());
    if (x.h & 2) s.set(rest_.size() + 1);
    return s;
}

SplitAlgebra::Element SplitAlgebra::from_atoms(const BitVector& s) const {
    Element e{BitVector(rest_.size()), 0};
    for (std::size_t r = 0; r < rest_.size(); ++r) e.b.set(r, s.test(r));
    e.h = static_cast<std::uint8_t>((s.test(rest_.size()) ? 1 : 0) | (s.test(rest_.size() + 1) ? 2 : 0));
    return e;
}

std::string SplitAlgebra::to_string(const Element& x) const { return atoms_.element_to_string(to_atoms(x)); }

std::vector<HenkinResult> henkin_matrix(const SplitAlgebra& A, const Limits& lim) {
    std::vector<HenkinResult> out;
    for (Index i = 0; i < A.dim(); ++i)
        for (Index j = 0; j < A.dim(); ++j)
            if (i != j) out.push_back({i, j, check(A.atom_structure(), build_henkin(i, j), {}, lim)});
    return out;
}

// ---- partition witness

PartitionWitness build_partition_witness(Index dim, unsigned n, unsigned blocks, const Limits& lim) {
    if (dim < 2) throw std::invalid_argument("partition witness needs dimension at least 2");
    if (n < 2 || blocks < 2) throw std::invalid_argument("partition witness needs n >= 2 and at least two blocks");
    auto sp = CylSpace::make(dim, n * blocks, lim);
    BitVector gb(sp->cells());
    for (std::size_t c = 0; c < sp->cells(); ++c) gb.set(c, sp->coord(c, 0) / n == sp->coord(c, 1) / n);
    PartitionWitness w;
    w.g = PointSet(sp, std::move(gb));
    w.n = n;
    w.blocks = blocks;
    w.algebra = SetAlgebra::generate(sp, {w.g}, lim.atom_budget);
    if (w.algebra.truncated()) throw BudgetError("closure of the partition generator exceeded the atom budget");
    return w;
}

std::optional<PointSet> find_irregular_element(const SetAlgebra& alg) {
    const auto& sp = *alg.space();
    const auto& A = alg.atom_structure();
    const auto& atoms = alg.atoms();
    std::vector<std::uint32_t> atom_of(sp.cells());
    for (std::size_t a = 0; a < atoms.size(); ++a)
        atoms[a].bits().for_each([&](std::size_t c) { atom_of[c] = static_cast<std::uint32_t>(a); });
    const Index d = sp.dim();
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::map<Tuple, BitVector> classes;
        for (std::size_t c = 0; c < sp.cells(); ++c) {
            Tuple key;
            for (Index i = 0; i < d; ++i)
                if ((mask >> i) & 1) key.push_back(sp.coord(c, i));
            auto [it, fresh] = classes.try_emplace(key, A.atoms());
            it->second.set(atom_of[c]);
        }
        sat::Solver s;
        std::vector<std::uint32_t> x(A.atoms());
        for (auto& v : x) v = s.new_var();
        for (Index i = 0; i < d; ++i) {
            if ((mask >> i) & 1) continue;
            for (std::size_t a = 0; a < A.atoms(); ++a)
                A.cyl_image(i, a).for_each([&](std::size_t b) {
                    if (b != a) s.add_clause({sat::neg(x[a]), sat::pos(x[b])});
                });
        }
        std::vector<sat::Lit> some;
        for (auto& [key, members] : classes) {
            if (members.count() < 2) continue;
            std::uint32_t y = s.new_var();
            std::vector<sat::Lit> in{sat::neg(y)}, out{sat::neg(y)};
            members.for_each([&](std::size_t a) {
                in.push_back(sat::pos(x[a]));
                out.push_back(sat::neg(x[a]));
            });
            s.add_clause(in);
            s.add_clause(out);
            some.push_back(sat::pos(y));
        }
        if (some.empty()) continue;
        s.add_clause(some);
        auto r = s.solve();
        if (r == sat::Result::Unknown) throw std::runtime_error("regularity search gave no answer");
        if (r == sat::Result::Sat) {
            BitVector e(A.atoms());
            for (std::size_t a = 0; a < A.atoms(); ++a) e.set(a, s.model_value(x[a]));
            return alg.element(e);
        }
    }
    return std::nullopt;
}

EkStatus ek_status(Index dim, unsigned n, unsigned blocks, unsigned k, const Limits& lim) {
    if (k < 2) throw std::invalid_argument("e_k needs k >= 2");
    EkStatus st;
    st.k = k;
    st.dim = std::max<Index>(dim, k + 1);
    auto w = build_partition_witness(st.dim, n, blocks, lim);
    st.term = holds(w.algebra, build_e_n(k, st.dim), {}, lim);
    std::vector<Index> ks;
    for (Index i = 2; i <= k; ++i) ks.push_back(i);
    auto closed = w.algebra.closed_elements(ks, lim.carrier_budget);
    st.closed_elements = closed.size();
    for (auto& X : closed)
        if (!equiv_oracle(X, k)) {
            st.oracle_holds = false;
            st.oracle_witness = X;
            break;
        }
    return st;
}

// ---- reducts and symmetrization

AtomAlgebra rd_reduct(const SetAlgebra& alg, const Renaming& rho) { return alg.atom_structure().reduct(rho); }

std::vector<Renaming> all_permutations(Index dim) {
    std::vector<Index> p(dim);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Renaming> out;
    do out.push_back(Renaming::from_permutation(p));
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

AtomAlgebra build_symmetrized(const AtomAlgebra& A, const Limits& lim) {
    auto perms = all_permutations(A.dim());
    if (perms.size() * A.atoms() > lim.atom_budget)
        throw BudgetError("symmetrized product needs " + std::to_string(perms.size() * A.atoms()) + " atoms");
    std::vector<AtomAlgebra> fs;
    for (auto& r : perms) fs.push_back(A.reduct(r));
    return AtomAlgebra::product(fs);
}

}  // namespace ca
