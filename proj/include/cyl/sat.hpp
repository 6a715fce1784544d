#pragma once

#include <cstdint>
#include <vector>

namespace ca::sat {

// Literal encoding: 2*var for positive, 2*var+1 for negated.
using Lit = std::uint32_t;
inline Lit pos(std::uint32_t v) { return v << 1; }
inline Lit neg(std::uint32_t v) { return (v << 1) | 1u; }
inline Lit negate(Lit l) { return l ^ 1u; }
inline std::uint32_t var_of(Lit l) { return l >> 1; }

enum class Result { Sat, Unsat, Unknown };

// Conflict-driven clause learning with two watched literals, VSIDS and Luby restarts.
class Solver {
public:
    std::uint32_t new_var();
    std::uint32_t num_vars() const { return static_cast<std::uint32_t>(assign_.size()); }
    // Returns false if the clause set became trivially unsatisfiable.
    bool add_clause(std::vector<Lit> lits);
    Result solve(std::uint64_t conflict_limit = 0);  // 0 = no limit
    bool model_value(std::uint32_t v) const { return model_[v] == 1; }
    std::uint64_t conflicts() const { return conflicts_; }

private:
    struct Clause {
        std::vector<Lit> lits;
        bool learnt = false;
    };
    std::int8_t value(Lit l) const {
        auto a = assign_[var_of(l)];
        if (a < 0) return -1;
        return static_cast<std::int8_t>((l & 1u) ? !a : a);
    }
    void enqueue(Lit l, std::int32_t reason);
    std::int32_t propagate();
    void analyze(std::int32_t confl, std::vector<Lit>& learnt, std::uint32_t& bt_level);
    void backtrack(std::uint32_t level);
    std::int64_t pick_branch();
    void bump(std::uint32_t v);
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    void heap_insert(std::uint32_t v);
    std::uint32_t heap_pop();
    std::uint32_t level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

    std::vector<Clause> clauses_;
    std::vector<std::vector<std::uint32_t>> watches_;  // per literal: clauses watching it
    std::vector<std::int8_t> assign_;
    std::vector<std::int8_t> model_;
    std::vector<std::int8_t> polarity_;
    std::vector<std::uint32_t> level_;
    std::vector<std::int32_t> reason_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<std::uint32_t> heap_;
    std::vector<std::int64_t> heap_pos_;
    std::vector<std::uint8_t> seen_;
    bool unsat_ = false;
    std::uint64_t conflicts_ = 0;
};

}  // namespace ca::sat
