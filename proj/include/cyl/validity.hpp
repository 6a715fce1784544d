#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cyl/atom_algebra.hpp"
#include "cyl/eval.hpp"
#include "cyl/space.hpp"
#include "cyl/term.hpp"

namespace ca {

enum class VerdictKind { Valid, Fails, UnknownTruncated };
std::string to_string(VerdictKind k);

struct CheckMode {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    static CheckMode exhaustive_mode() { return {}; }
    static CheckMode sampled(std::uint64_t count, std::uint64_t seed) { return {false, count, seed}; }
};

struct Verdict {
    VerdictKind kind = VerdictKind::Valid;
    std::map<std::string, BitVector> witness;  // atom sets (AtomAlgebra checks)
    Assignment point_witness;                 // PointSets (SetAlgebra checks)
    std::string method;                       // enumeration | sat | sampled | refused
    std::uint64_t assignments_checked = 0;
    std::string note;
    bool valid() const { return kind == VerdictKind::Valid; }
    bool fails() const { return kind == VerdictKind::Fails; }
};

bool holds_at(const AtomAlgebra& A, const Equation& e, const std::map<std::string, BitVector>& a);

// Exhaustive: enumeration when atoms*vars <= lim.enumeration_bits, else SAT refutation.
Verdict check(const AtomAlgebra& A, const Equation& e, const CheckMode& mode = {}, const Limits& lim = {});
// Forces a particular exhaustive route; used to cross-check the two.
Verdict check_by_enumeration(const AtomAlgebra& A, const Equation& e);
Verdict check_by_sat(const AtomAlgebra& A, const Equation& e);

// Validity in a set algebra. Exhaustive checks on Full carriers are refused
// above lim.full_exhaustive_cells; truncated carriers give UnknownTruncated.
Verdict holds(const SetAlgebra& alg, const Equation& e, const CheckMode& mode = {}, const Limits& lim = {});

}  // namespace ca
