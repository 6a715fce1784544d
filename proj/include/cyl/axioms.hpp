#pragma once

#include <string>
#include <vector>

#include "cyl/term.hpp"

namespace ca {

struct AxiomInstance {
    std::string group;   // C0 .. C7, or "display" for the closure-operator list
    std::string schema;  // short schema name
    Equation equation;
};

// C0 is a fixed Boolean basis: commutativity and associativity of +, Huntington's
// equation, and definitions of &, ^, 1 and 0 in terms of + and ~.
std::vector<AxiomInstance> boolean_axioms();

// All schema instances with indices below `bound`; i, j, k range over distinct
// indices wherever the schema asks for distinct ones.
std::vector<AxiomInstance> ca_axiom_instances(Index bound);

}  // namespace ca
