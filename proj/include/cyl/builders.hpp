#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cyl/term.hpp"

namespace ca {

// s^i_j t = c_i(d_ij · t)
Term subst_term(Index i, Index j, const Term& t);

// Term whose value at s is membership of s(01/s_i s_j) in t. The (1,0) case
// cylindrifies the spare index 2 first, so t must be 2-closed for the contract.
Term pair_subst_term(Index i, Index j, const Term& t, std::optional<Index> dim_bound = std::nullopt);

// s^{12}_{01} t = s^2_1 s^1_0 t : value at s is membership of s(12/s_0 s_1).
Term shift_pair_term(const Term& t);

struct MasterParts {
    Term x, z, beta, gamma, iota, sigma, tau, lambda, omega;
    Equation equation;  // x <= c_0c_1c_2(beta + gamma + omega)
};
MasterParts build_master(std::optional<Index> dim_bound = std::nullopt);
Equation build_master_equation(std::optional<Index> dim_bound = std::nullopt);

// Components over the variable a; equation substitutes a := c_2...c_n x.
struct UniformParts {
    unsigned n;
    Term a, delta, sigma, tau, rho, mu_less, mu_more, eta;
    Equation equation;  // eta(c_2...c_n x) = 1
};
UniformParts build_uniform(unsigned n, std::optional<Index> dim_bound = std::nullopt);
Equation build_e_n(unsigned n, std::optional<Index> dim_bound = std::nullopt);

// c_j(x·y·c_i(x−y)) <= c_i(c_j x − d_ij)
Equation build_henkin(Index i, Index j);

// c_0...c_{m-1} prod{-d_ij : i<j<m}
Term build_a_m(unsigned m, std::optional<Index> dim_bound = std::nullopt);

struct InductiveMatch {
    Equation premise_free;  // the equation e with E = e(c_i x̄)
    Index i;
};
std::vector<InductiveMatch> inductive_premise_match(const Equation& E);

}  // namespace ca
