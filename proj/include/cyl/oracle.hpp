#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cyl/space.hpp"

namespace ca {

// Direct-semantics predicates computed from tuples and membership tests only.

using Tuple = std::vector<std::uint32_t>;

struct Relation {
    unsigned arity = 0;
    std::uint32_t base = 0;
    std::set<Tuple> tuples;
    bool contains(const Tuple& t) const { return tuples.count(t) > 0; }
    bool operator==(const Relation& o) const = default;
};

Relation relation(unsigned arity, std::uint32_t base, std::set<Tuple> tuples);

// x[s,H] = { q : s(H/q) in x }
Relation section(const PointSet& X, const Point& s, const std::vector<Index>& H);

// c_i X = c_i(R - X) for all i < arity, c_i taken in the full set algebra on U^arity.
bool is_sensitive_cut(const Relation& X, const Relation& R);

// Irreflexive, antisymmetric, transitive, domain = range = W, and any two
// distinct members of W comparable. No finite nonempty W admits one.
bool is_strict_linear_order(const Relation& rel, const std::set<std::uint32_t>& W);
// Ordinary strict total order on W: rel ⊆ W×W, irreflexive, transitive, total on distinct pairs.
bool is_strict_total_order(const Relation& rel, const std::set<std::uint32_t>& W);

bool is_uniform_equivalence(const Relation& rel, std::uint32_t base, unsigned n);

// Right-hand side of the characterization of the master equation at X.
bool express_oracle(const PointSet& X);

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
// For X = c_2...c_n X: no s in X has X[s,01] a uniform-n equivalence on U.
bool equiv_oracle(const PointSet& X, unsigned n);

std::set<Index> dimension_set(const PointSet& X);
bool is_regular(const PointSet& X);

// Per-point readings of the master-equation components at s, from sections.
struct MasterPointFacts {
    bool sensitive_cut;   // x[s,012] is a sensitive cut of (c0x·c2x)[s,012]
    bool closure_match;   // c2x[s,01] = c0x[s,12]
    bool irreflexive, asymmetric, transitive;  // asymmetric: uv in R excludes vu in R, u = v included
    bool dom_rng_comparable;  // every u in Dom, v in Rg (u = v allowed): uv or vu in c2x[s,01]
};
MasterPointFacts master_point_facts(const PointSet& X, const Point& s);

// Per-point readings of the uniform-block components, R = a[s,01].
struct UniformPointFacts {
    bool domain_full, symmetric, transitive, reflexive;
    bool block_smaller;  // some u has fewer than n-1 R-related distinct partners forming a clique
    bool block_larger;   // n+1 pairwise distinct elements pairwise related (i<j)
};
UniformPointFacts uniform_point_facts(const PointSet& A, const Point& s, unsigned n);

}  // namespace ca
