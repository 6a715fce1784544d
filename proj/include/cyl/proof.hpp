#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyl/eval.hpp"
#include "cyl/term.hpp"

namespace ca {

enum class Rule { Axiom, Reflexivity, Symmetry, Transitivity, Congruence, Substitution, Inductive };
std::string to_string(Rule r);

struct Derivation {
    Rule rule = Rule::Axiom;
    std::vector<std::size_t> premises;  // theorem ids
    std::string axiom;                  // group/schema for Axiom
    Equation instance;                  // Axiom: the schema instance
    Term context{nullptr};              // Congruence: one occurrence of the hole variable
    Substitution subst;                 // Substitution
    Term term{nullptr};                 // Reflexivity
    Index index = 0;                    // Inductive: eliminated index
    std::optional<Index> max_index;     // over premises and introduced material
    std::size_t size = 1;               // derivation tree size
};

struct Theorem {
    std::size_t id = 0;
    Equation equation;
    Derivation derivation;
    // Further derivations that reached the same canonical equation later on.
    std::vector<Derivation> alternatives;
    // Maximum index over the recorded derivations; audits need dimension above it.
    std::optional<Index> max_index_used;
    bool has_rule(Rule r) const;
};

extern const char* const kHole;  // name of the hole variable in congruence contexts

// Commutative operands sorted and variables renamed x, y, z, w, v4, ... by first
// occurrence, repeated to a fixed point.
Equation canonicalize(const Equation& e);
std::string canonical_name(std::size_t k);

class RuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// One-step rules on equations; results are canonicalized. Max index bookkeeping
// is done on Derivation records by the store.
Equation rule_symmetry(const Equation& a);
Equation rule_transitivity(const Equation& a, const Equation& b);  // a.rhs must equal b.lhs
Equation rule_congruence(const Equation& a, const Term& context);
Equation rule_substitution(const Equation& a, const Substitution& s);
// One conclusion per match of the recognizer, with the eliminated index.
std::vector<std::pair<Equation, Index>> rule_inductive(const Equation& a);

struct EnumerationBounds {
    Index index_bound = 3;
    unsigned term_depth = 4;
    unsigned variable_count = 2;
    std::uint64_t step_budget = 100000;  // rule applications
    bool inductive = true;
};

struct EnumerationStats {
    std::uint64_t steps = 0;
    std::size_t levels = 0;  // derivation sizes completed
    bool truncated = false;
    std::size_t inductive_conclusions = 0;  // inductive rule outputs, new or not
};

class TheoremStore {
public:
    const std::vector<Theorem>& theorems() const { return th_; }
    const Theorem& operator[](std::size_t id) const { return th_.at(id); }
    std::size_t size() const { return th_.size(); }
    std::optional<std::size_t> find(const Equation& canonical) const;

    // Builds a derivation record for `rule` from stored premises (sizes, max index).
    Derivation derive(Rule rule, std::vector<std::size_t> premises) const;
    // Adds a theorem or records an alternative derivation; returns (id, fresh).
    std::pair<std::size_t, bool> commit(const Equation& canonical, Derivation d);

    // Re-executes the primary derivation of `id` from its leaves.
    Equation replay(std::size_t id) const;
    Equation replay(const Derivation& d) const;

private:
    std::vector<Theorem> th_;
    std::map<std::string, std::size_t> index_;
};

// Every schema instance with indices below the bound, as store entries.
void add_axioms(TheoremStore& store, const EnumerationBounds& b);

// Fair enumeration by derivation size; new theorems of each size are committed
// in canonical order. `sink` sees each new theorem once and may stop the run.
EnumerationStats enumerate(const EnumerationBounds& b, TheoremStore& store,
                           const std::function<bool(const Theorem&)>& sink = {});

struct AuditResult {
    bool ok = true;
    std::size_t trials = 0;
    Index dim = 0;
    std::uint32_t base = 0;
    Assignment witness;  // on failure
    std::string describe() const;
};
// Sampled validity in seeded random full set algebras of dimension above
// max_index (at least 1), base 2 or 3.
AuditResult audit_soundness(const Equation& e, std::optional<Index> max_index, std::size_t trials, std::uint64_t seed);
AuditResult audit_soundness(const Theorem& t, std::size_t trials, std::uint64_t seed);

}  // namespace ca
