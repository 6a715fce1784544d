#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyl/atom_algebra.hpp"
#include "cyl/axioms.hpp"
#include "cyl/validity.hpp"

namespace ca {

struct AxiomResult {
    AxiomInstance axiom;
    Verdict verdict;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const;
    std::size_t failures() const;
};

// Every axiom instance with indices below dim(A), checked over the whole carrier.
AxiomReport check_ca_axioms(const AtomAlgebra& A, const CheckMode& mode = {}, const Limits& lim = {});

// Base algebra B generated by g = V_0 x V_1 x ... (V_0 a singleton) with the
// atom g split into g' and g''. Elements are (b, h): b a set of B-atoms other
// than g, h a mask over {g', g''}.
class SplitAlgebra {
public:
    struct Element {
        BitVector b;
        std::uint8_t h = 0;  // bit 0: g', bit 1: g''
        bool operator==(const Element&) const = default;
    };

    static SplitAlgebra build(Index dim, const std::vector<std::uint32_t>& sizes, const Limits& lim = {});

    Index dim() const { return base_.space()->dim(); }
    const SetAlgebra& base() const { return base_; }
    const PointSet& g() const { return g_; }
    std::size_t g_atom() const { return g_atom_; }
    // number of base atoms other than g
    std::size_t rest_atoms() const { return rest_.size(); }

    Element zero() const;
    Element one() const;
    Element join(const Element& a, const Element& b) const;
    Element meet(const Element& a, const Element& b) const;
    Element sym(const Element& a, const Element& b) const;
    Element complement(const Element& a) const;
    Element cyl(Index i, const Element& x) const;
    Element diag(Index i, Index j) const;

    Element from_base(const PointSet& x) const;
    std::optional<PointSet> to_base(const Element& x) const;  // defined when h is 0 or 3
    Element g_prime() const;
    Element g_second() const;

    // Atoms: the base atoms other than g in order, then g', g''.
    const AtomAlgebra& atom_structure() const { return atoms_; }
    BitVector to_atoms(const Element& x) const;
    Element from_atoms(const BitVector& s) const;
    std::string to_string(const Element& x) const;

private:
    Element canon(const BitVector& base_atoms) const;
    BitVector base_atoms(const Element& x) const;
    SetAlgebra base_;
    PointSet g_;
    std::size_t g_atom_ = 0;
    std::vector<std::size_t> rest_;    // rest index -> base atom
    std::vector<long> rest_of_;        // base atom -> rest index (-1 for g)
    AtomAlgebra atoms_;
};

struct HenkinResult {
    Index i, j;
    Verdict verdict;
};
// e_ij for all ordered pairs of distinct indices below dim, over the whole carrier.
std::vector<HenkinResult> henkin_matrix(const SplitAlgebra& A, const Limits& lim = {});

struct PartitionWitness {
    SetAlgebra algebra;
    PointSet g;  // { s : s_0 and s_1 in the same block }
    unsigned n = 0, blocks = 0;
};
PartitionWitness build_partition_witness(Index dim, unsigned n, unsigned blocks, const Limits& lim = {});

// Exact: for every coordinate set D, no carrier element closed under c_i (i not
// in D) has two cells with equal D-projections on opposite sides. Returns the
// first irregular element found, if any.
std::optional<PointSet> find_irregular_element(const SetAlgebra& alg);

struct EkStatus {
    unsigned k = 0;
    Index dim = 0;             // dimension of the witness used
    Verdict term;              // e_k over the carrier
    bool oracle_holds = true;  // equiv_oracle over every c_2..c_k-closed element
    std::size_t closed_elements = 0;
    std::optional<PointSet> oracle_witness;
};
// Status of e_k in the partition witness (n, blocks) of dimension max(dim, k+1).
EkStatus ek_status(Index dim, unsigned n, unsigned blocks, unsigned k, const Limits& lim = {});

// Rd^rho: operation i is operation rho(i) of the algebra.
AtomAlgebra rd_reduct(const SetAlgebra& alg, const Renaming& rho);
// Product of the reducts over all permutations of the dimension.
AtomAlgebra build_symmetrized(const AtomAlgebra& A, const Limits& lim = {});
std::vector<Renaming> all_permutations(Index dim);

}  // namespace ca
