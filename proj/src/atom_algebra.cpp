#include "cyl/atom_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ca {

AtomAlgebra::AtomAlgebra(Index dim, std::vector<std::vector<BitVector>> cyl_image,
                         std::vector<std::vector<BitVector>> diagonal, std::vector<std::string> labels)
    : dim_(dim), cyl_(std::move(cyl_image)), diag_(std::move(diagonal)), labels_(std::move(labels)) {
    if (cyl_.size() != dim_ || diag_.size() != dim_) throw std::invalid_argument("atom algebra: table size mismatch");
    n_ = dim_ ? cyl_[0].size() : 0;
    for (auto& row : cyl_)
        if (row.size() != n_) throw std::invalid_argument("atom algebra: ragged cylindrification table");
    if (labels_.empty())
        for (std::size_t a = 0; a < n_; ++a) labels_.push_back("a" + std::to_string(a));
    offsets_ = {0};
    build_preimages();
}

void AtomAlgebra::build_preimages() {
    pre_.assign(dim_, std::vector<std::vector<std::size_t>>(n_));
    for (Index i = 0; i < dim_; ++i)
        for (std::size_t b = 0; b < n_; ++b) cyl_[i][b].for_each([&](std::size_t a) { pre_[i][a].push_back(b); });
}

BitVector AtomAlgebra::cyl(Index i, const BitVector& x) const {
    BitVector r(n_);
    BitVector covered(n_);
    x.for_each([&](std::size_t a) {
        if (covered.test(a)) return;
        r |= cyl_[i][a];
        covered.set(a);
    });
    return r;
}

AtomAlgebra AtomAlgebra::with_cyl_image(Index i, std::size_t a, BitVector img) const {
    auto t = cyl_;
    t[i][a] = std::move(img);
    return AtomAlgebra(dim_, std::move(t), diag_, labels_);
}

AtomAlgebra AtomAlgebra::reduct(const Renaming& rho) const {
    if (!rho.is_permutation_of(dim_)) throw std::invalid_argument("reduct needs a permutation of the dimension");
    std::vector<std::vector<BitVector>> c(dim_), d(dim_, std::vector<BitVector>(dim_));
    for (Index i = 0; i < dim_; ++i) {
        c[i] = cyl_[rho(i)];
        for (Index j = 0; j < dim_; ++j) d[i][j] = diag_[rho(i)][rho(j)];
    }
    return AtomAlgebra(dim_, std::move(c), std::move(d), labels_);
}

AtomAlgebra AtomAlgebra::product(const std::vector<AtomAlgebra>& fs) {
    if (fs.empty()) throw std::invalid_argument("product of no algebras");
    Index d = fs[0].dim();
    std::size_t n = 0;
    std::vector<std::size_t> off;
    for (auto& f : fs) {
        if (f.dim() != d) throw std::invalid_argument("product factors differ in dimension");
        off.push_back(n);
        n += f.atoms();
    }
    auto lift = [&](std::size_t k, const BitVector& x) {
        BitVector r(n);
        x.for_each([&](std::size_t a) { r.set(off[k] + a); });
        return r;
    };
    std::vector<std::vector<BitVector>> c(d, std::vector<BitVector>(n)), dg(d, std::vector<BitVector>(d, BitVector(n)));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t a = 0; a < fs[k].atoms(); ++a) {
            labels.push_back(std::to_string(k) + ":" + fs[k].label(a));
            for (Index i = 0; i < d; ++i) c[i][off[k] + a] = lift(k, fs[k].cyl_image(i, a));
        }
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) dg[i][j] |= lift(k, fs[k].diag(i, j));
    }
    AtomAlgebra p(d, std::move(c), std::move(dg), std::move(labels));
    p.offsets_ = off;
    return p;
}

std::vector<BitVector> AtomAlgebra::cyl_classes(Index i) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < n_; ++a)
        cyl_[i][a].for_each([&](std::size_t b) { parent[find(b)] = find(a); });
    std::vector<BitVector> out;
    std::vector<long> slot(n_, -1);
    for (std::size_t a = 0; a < n_; ++a) {
        auto r = find(a);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(out.size());
            out.emplace_back(n_);
        }
        out[static_cast<std::size_t>(slot[r])].set(a);
    }
    return out;
}

std::string AtomAlgebra::element_to_string(const BitVector& x) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    x.for_each([&](std::size_t a) {
        os << (first ? "" : ",") << labels_[a];
        first = false;
    });
    os << '}';
    return os.str();
}

SetAlgebra SetAlgebra::full(SpacePtr sp) {
    SetAlgebra a;
    a.sp_ = std::move(sp);
    a.full_ = true;
    return a;
}

namespace {

// Refines the partition by `s`; returns the ids of blocks that split (new ids, both halves).
std::vector<std::uint32_t> refine(std::vector<std::uint32_t>& id, std::uint32_t& blocks, const BitVector& s) {
    std::vector<std::int64_t> in(blocks, -1), out(blocks, -1);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> nid(id.size());
    for (std::size_t c = 0; c < id.size(); ++c) {
        auto& slot = s.test(c) ? in[id[c]] : out[id[c]];
        if (slot < 0) slot = next++;
        nid[c] = static_cast<std::uint32_t>(slot);
    }
    std::vector<std::uint32_t> split;
    for (std::uint32_t b = 0; b < blocks; ++b)
        if (in[b] >= 0 && out[b] >= 0) {
            split.push_back(static_cast<std::uint32_t>(in[b]));
            split.push_back(static_cast<std::uint32_t>(out[b]));
        }
    id.swap(nid);
    blocks = next;
    return split;
}

}  // namespace

SetAlgebra SetAlgebra::generate(SpacePtr sp, const std::vector<PointSet>& gens, std::uint64_t atom_cap) {
    SetAlgebra A;
    A.sp_ = sp;
    A.gens_ = gens;
    const std::size_t n = sp->cells();
    std::vector<std::uint32_t> id(n, 0);
    std::uint32_t blocks = 1;
    auto block_set = [&](std::uint32_t b) {
        BitVector r(n);
        for (std::size_t c = 0; c < n; ++c)
            if (id[c] == b) r.set(c);
        return r;
    };
    for (auto& g : gens) {
        if (!g.space()->same(*sp)) throw std::invalid_argument("generator lives in a different space");
        refine(id, blocks, g.bits());
    }
    for (Index i = 0; i < sp->dim(); ++i)
        for (Index j = i + 1; j < sp->dim(); ++j) refine(id, blocks, diag(sp, i, j).bits());

    // worklist of block contents still to be cylindrified
    std::vector<BitVector> work;
    for (std::uint32_t b = 0; b < blocks; ++b) work.push_back(block_set(b));
    while (!work.empty() && blocks <= atom_cap) {
        BitVector B = std::move(work.back());
        work.pop_back();
        PointSet P(sp, B);
        for (Index i = 0; i < sp->dim() && blocks <= atom_cap; ++i) {
            auto split = refine(id, blocks, cyl(i, P).bits());
            for (auto b : split) work.push_back(block_set(b));
        }
    }
    A.truncated_ = blocks > atom_cap || !work.empty();

    // canonical atom order: by least cell
    std::vector<std::int64_t> order(blocks, -1);
    std::uint32_t k = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (order[id[c]] < 0) order[id[c]] = k++;
    A.atom_of_cell_.resize(n);
    A.atoms_.assign(blocks, PointSet::empty(sp));
    std::vector<BitVector> bits(blocks, BitVector(n));
    for (std::size_t c = 0; c < n; ++c) {
        auto a = static_cast<std::uint32_t>(order[id[c]]);
        A.atom_of_cell_[c] = a;
        bits[a].set(c);
    }
    for (std::uint32_t a = 0; a < blocks; ++a) A.atoms_[a] = PointSet(sp, std::move(bits[a]));
    return A;
}

void SetAlgebra::ensure_atoms() const {
    if (!full_ || !atoms_.empty()) return;
    std::size_t n = sp_->cells();
    atom_of_cell_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        BitVector b(n);
        b.set(c);
        atoms_.emplace_back(sp_, std::move(b));
        atom_of_cell_[c] = static_cast<std::uint32_t>(c);
    }
}

std::size_t SetAlgebra::atom_count() const {
    if (full_) return sp_->cells();
    return atoms_.size();
}

const std::vector<PointSet>& SetAlgebra::atoms() const {
    ensure_atoms();
    return atoms_;
}

bool SetAlgebra::contains(const PointSet& x) const {
    if (full_) return x.space()->same(*sp_);
    std::vector<int> state(atoms_.size(), -1);
    for (std::size_t c = 0; c < sp_->cells(); ++c) {
        int v = x.contains_cell(c) ? 1 : 0;
        auto& s = state[atom_of_cell_[c]];
        if (s < 0) s = v;
        else if (s != v) return false;
    }
    return true;
}

BitVector SetAlgebra::decompose(const PointSet& x) const {
    ensure_atoms();
    if (!contains(x)) throw std::invalid_argument("element is not in the carrier");
    BitVector r(atoms_.size());
    x.bits().for_each([&](std::size_t c) { r.set(atom_of_cell_[c]); });
    return r;
}

PointSet SetAlgebra::element(const BitVector& atom_set) const {
    ensure_atoms();
    BitVector b(sp_->cells());
    atom_set.for_each([&](std::size_t a) { b |= atoms_[a].bits(); });
    return PointSet(sp_, std::move(b));
}

std::vector<PointSet> SetAlgebra::elements(std::uint64_t limit) const {
    std::size_t n = atom_count();
    if (n >= 63 || (std::uint64_t{1} << n) > limit)
        throw BudgetError("carrier has 2^" + std::to_string(n) + " elements, above the listing limit " +
                          std::to_string(limit));
    std::vector<PointSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        BitVector s(n);
        for (std::size_t a = 0; a < n; ++a)
            if ((m >> a) & 1) s.set(a);
        out.push_back(element(s));
    }
    return out;
}

const AtomAlgebra& SetAlgebra::atom_structure(std::uint64_t cell_limit) const {
    if (structure_) return *structure_;
    if (full_ && sp_->cells() > cell_limit)
        throw BudgetError("full carrier over " + std::to_string(sp_->cells()) + " cells is too large for an atom structure");
    ensure_atoms();
    Index d = sp_->dim();
    std::size_t n = atoms_.size();
    std::vector<std::vector<BitVector>> c(d, std::vector<BitVector>(n)), dg(d, std::vector<BitVector>(d));
    for (Index i = 0; i < d; ++i) {
        for (std::size_t a = 0; a < n; ++a) c[i][a] = decompose(cyl(i, atoms_[a]));
        for (Index j = 0; j < d; ++j) dg[i][j] = decompose(diag(sp_, i, j));
    }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        auto pts = atoms_[a].points();
        std::string l = "<";
        for (Index k = 0; k < d; ++k) l += (k ? "," : "") + std::to_string(pts[0][k]);
        l += ">";
        if (pts.size() > 1) l += "+" + std::to_string(pts.size() - 1);
        labels.push_back(l);
    }
    structure_ = std::make_shared<AtomAlgebra>(d, std::move(c), std::move(dg), std::move(labels));
    return *structure_;
}

std::vector<PointSet> SetAlgebra::closed_elements(Index i, std::uint64_t limit) const {
    return closed_elements(std::vector<Index>{i}, limit);
}

std::vector<PointSet> SetAlgebra::closed_elements(const std::vector<Index>& ks, std::uint64_t limit) const {
    const auto& A = atom_structure();
    std::size_t n = A.atoms();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (Index k : ks) {
        if (k >= sp_->dim()) throw std::out_of_range("closed_elements index out of range");
        for (std::size_t a = 0; a < n; ++a)
            A.cyl_image(k, a).for_each([&](std::size_t b) { parent[find(b)] = find(a); });
    }
    std::vector<BitVector> classes;
    std::vector<long> slot(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        auto r = find(a);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(classes.size());
            classes.emplace_back(n);
        }
        classes[static_cast<std::size_t>(slot[r])].set(a);
    }
    std::size_t m = classes.size();
    if (m >= 63 || (std::uint64_t{1} << m) > limit)
        throw BudgetError("2^" + std::to_string(m) + " closed elements exceed the listing limit");
    std::vector<PointSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        BitVector s(n);
        for (std::size_t k = 0; k < m; ++k)
            if ((mask >> k) & 1) s |= classes[k];
        out.push_back(element(s));
    }
    return out;
}

}  // namespace ca
