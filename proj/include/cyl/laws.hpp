#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyl/atom_algebra.hpp"
#include "cyl/space.hpp"
#include "cyl/term.hpp"

namespace ca {

struct LawReport {
    std::map<std::string, std::uint64_t> checked;   // law -> instances checked
    std::vector<std::string> failures;              // one line per failed instance
    bool ok() const { return failures.empty(); }
};

// x -> s^i_j x from the c_j-closed to the c_i-closed carrier elements: bijection
// with inverse s^j_i, Boolean homomorphism, commutes with c_k and fixes d_km for
// k, m outside {i, j}, sends c_i to c_j and d_ik to d_jk. Exhaustive.
LawReport check_substitution_isomorphism(const SetAlgebra& alg, Index i, Index j, std::uint64_t limit = 20000);

// The transposition identities on `samples` seeded subsets per identity and
// index choice, including p_ij t(x...) = rho(t)(p_ij x...) for each term of the corpus.
LawReport check_transposition_identities(const SpacePtr& sp, std::uint64_t samples, std::uint64_t seed,
                                         const std::vector<Term>& corpus);

}  // namespace ca
