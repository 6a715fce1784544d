#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyl/bits.hpp"
#include "cyl/space.hpp"
#include "cyl/term.hpp"

namespace ca {

// A finite cylindric-type algebra presented by its atom structure: elements
// are sets of atoms, c_i is the additive extension of its value on atoms, and
// the diagonals are fixed atom sets. Every finite CA has this form, and so
// does every corruption of one produced by editing a single table entry.
class AtomAlgebra {
public:
    using Element = BitVector;

    AtomAlgebra() = default;
    // cyl_image[i][a] = c_i({a}); diagonal[i][j] = d_ij.
    AtomAlgebra(Index dim, std::vector<std::vector<BitVector>> cyl_image, std::vector<std::vector<BitVector>> diagonal,
                std::vector<std::string> labels = {});

    Index dim() const { return dim_; }
    std::size_t atoms() const { return n_; }
    const std::string& label(std::size_t a) const { return labels_[a]; }

    BitVector zero() const { return BitVector(n_); }
    BitVector one() const { return BitVector(n_, true); }
    BitVector join(const BitVector& a, const BitVector& b) const { return a | b; }
    BitVector meet(const BitVector& a, const BitVector& b) const { return a & b; }
    BitVector sym(const BitVector& a, const BitVector& b) const { return a ^ b; }
    BitVector complement(const BitVector& a) const { return ~a; }
    BitVector cyl(Index i, const BitVector& x) const;
    BitVector diag(Index i, Index j) const { return diag_[i][j]; }
    const BitVector& cyl_image(Index i, std::size_t a) const { return cyl_[i][a]; }
    // atoms b with a <= c_i(b)
    const std::vector<std::size_t>& cyl_preimage(Index i, std::size_t a) const { return pre_[i][a]; }

    // Copy with c_i({a}) replaced; used for mutation tests.
    AtomAlgebra with_cyl_image(Index i, std::size_t a, BitVector img) const;
    // Operation i of the result is operation rho(i) of this algebra.
    AtomAlgebra reduct(const Renaming& rho) const;
    // Direct product; atoms are the disjoint union of the factors' atoms.
    static AtomAlgebra product(const std::vector<AtomAlgebra>& factors);
    // Factor offsets of a product built by product().
    const std::vector<std::size_t>& factor_offsets() const { return offsets_; }

    // Maximal atom sets closed under c_i (the classes of the relation a ~ b iff b <= c_i a),
    // meaningful when c_i is a closure operator on atoms.
    std::vector<BitVector> cyl_classes(Index i) const;
    std::string element_to_string(const BitVector& x) const;

private:
    void build_preimages();
    Index dim_ = 0;
    std::size_t n_ = 0;
    std::vector<std::vector<BitVector>> cyl_;
    std::vector<std::vector<BitVector>> diag_;
    std::vector<std::vector<std::vector<std::size_t>>> pre_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> offsets_;
};

// Cylindric set algebra over a space: either all subsets (Full) or the
// subalgebra generated by a list of PointSets, stored as its atom partition.
class SetAlgebra {
public:
    static SetAlgebra full(SpacePtr sp);
    static SetAlgebra generate(SpacePtr sp, const std::vector<PointSet>& gens, std::uint64_t atom_cap = 4096);

    const SpacePtr& space() const { return sp_; }
    bool is_full() const { return full_; }
    bool truncated() const { return truncated_; }
    const std::vector<PointSet>& generators() const { return gens_; }

    // Atoms of the carrier (Full: singletons, computed on demand).
    std::size_t atom_count() const;
    const std::vector<PointSet>& atoms() const;
    // log2 of the carrier size (= atom count)
    double carrier_log2() const { return static_cast<double>(atom_count()); }
    bool contains(const PointSet& x) const;
    // Atom set of a carrier element; throws if x is not in the carrier.
    BitVector decompose(const PointSet& x) const;
    PointSet element(const BitVector& atom_set) const;
    // All carrier elements when at most `limit` of them exist.
    std::vector<PointSet> elements(std::uint64_t limit) const;

    // Atom-structure presentation. Full carriers need cells within `cell_limit`.
    const AtomAlgebra& atom_structure(std::uint64_t cell_limit = 4096) const;

    // c_i-closed carrier elements (unions of c_i-classes of atoms), if at most `limit`.
    std::vector<PointSet> closed_elements(Index i, std::uint64_t limit = 20000) const;
    // elements closed under every c_k for k in ks
    std::vector<PointSet> closed_elements(const std::vector<Index>& ks, std::uint64_t limit = 20000) const;

private:
    SpacePtr sp_;
    bool full_ = false;
    bool truncated_ = false;
    std::vector<PointSet> gens_;
    mutable std::vector<PointSet> atoms_;
    mutable std::vector<std::uint32_t> atom_of_cell_;
    mutable std::shared_ptr<AtomAlgebra> structure_;
    void ensure_atoms() const;
};

}  // namespace ca
