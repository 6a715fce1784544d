#include "cyl/sat.hpp"

#include <algorithm>

namespace ca::sat {

std::uint32_t Solver::new_var() {
    auto v = static_cast<std::uint32_t>(assign_.size());
    assign_.push_back(-1);
    polarity_.push_back(1);  // prefer false first
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    seen_.push_back(0);
    heap_pos_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
}

bool Solver::add_clause(std::vector<Lit> lits) {
    if (unsat_) return false;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t k = 0; k < lits.size(); ++k) {
        if (k + 1 < lits.size() && lits[k + 1] == negate(lits[k])) return true;  // tautology
        auto v = level_[var_of(lits[k])] == 0 ? value(lits[k]) : -1;
        if (v == 1) return true;
        if (v == 0) continue;
        kept.push_back(lits[k]);
    }
    if (kept.empty()) {
        unsat_ = true;
        return false;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0) unsat_ = true;
        return !unsat_;
    }
    auto idx = static_cast<std::uint32_t>(clauses_.size());
    watches_[negate(kept[0])].push_back(idx);
    watches_[negate(kept[1])].push_back(idx);
    clauses_.push_back({std::move(kept), false});
    return true;
}

void Solver::enqueue(Lit l, std::int32_t reason) {
    auto v = var_of(l);
    assign_[v] = static_cast<std::int8_t>(!(l & 1u));
    level_[v] = level();
    reason_[v] = reason;
    trail_.push_back(l);
}

// Returns index of a conflicting clause or -1.
std::int32_t Solver::propagate() {
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];  // p became true; clauses watching p contain ¬p
        auto& ws = watches_[p];
        std::size_t i = 0, j = 0;
        Lit falsel = negate(p);
        while (i < ws.size()) {
            auto ci = ws[i++];
            auto& c = clauses_[ci].lits;
            if (c[0] == falsel) std::swap(c[0], c[1]);
            if (value(c[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k)
                if (value(c[k]) != 0) {
                    std::swap(c[1], c[k]);
                    watches_[negate(c[1])].push_back(ci);
                    moved = true;
                    break;
                }
            if (moved) continue;
            ws[j++] = ci;
            if (value(c[0]) == 0) {
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return static_cast<std::int32_t>(ci);
            }
            enqueue(c[0], static_cast<std::int32_t>(ci));
        }
        ws.resize(j);
    }
    return -1;
}

void Solver::analyze(std::int32_t confl, std::vector<Lit>& learnt, std::uint32_t& bt_level) {
    learnt.clear();
    learnt.push_back(0);
    int pending = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t idx = trail_.size();
    std::vector<std::uint32_t> touched;
    do {
        auto& c = clauses_[static_cast<std::size_t>(confl)].lits;
        for (std::size_t k = have_p ? 1 : 0; k < c.size(); ++k) {
            Lit q = c[k];
            auto v = var_of(q);
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            touched.push_back(v);
            bump(v);
            if (level_[v] == level()) ++pending;
            else learnt.push_back(q);
        }
        while (!seen_[var_of(trail_[--idx])]) {
        }
        p = trail_[idx];
        have_p = true;
        confl = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --pending;
        if (pending > 0) {
            // reason clause has p at position 0 by construction of propagate
            auto& rc = clauses_[static_cast<std::size_t>(confl)].lits;
            if (rc[0] != p) {
                auto it = std::find(rc.begin(), rc.end(), p);
                std::iter_swap(rc.begin(), it);
            }
        }
    } while (pending > 0);
    learnt[0] = negate(p);
    for (auto v : touched) seen_[v] = 0;
    bt_level = 0;
    if (learnt.size() > 1) {
        std::size_t best = 1;
        for (std::size_t k = 2; k < learnt.size(); ++k)
            if (level_[var_of(learnt[k])] > level_[var_of(learnt[best])]) best = k;
        std::swap(learnt[1], learnt[best]);
        bt_level = level_[var_of(learnt[1])];
    }
}

void Solver::backtrack(std::uint32_t lvl) {
    if (level() <= lvl) return;
    for (std::size_t k = trail_.size(); k-- > trail_lim_[lvl];) {
        auto v = var_of(trail_[k]);
        polarity_[v] = static_cast<std::int8_t>(trail_[k] & 1u);
        assign_[v] = -1;
        reason_[v] = -1;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
}

void Solver::bump(std::uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::heap_up(std::size_t i) {
    auto v = heap_[i];
    while (i > 0) {
        auto p = (i - 1) / 2;
        if (activity_[heap_[p]] >= activity_[v]) break;
        heap_[i] = heap_[p];
        heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
        i = p;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int64_t>(i);
}

void Solver::heap_down(std::size_t i) {
    auto v = heap_[i];
    while (true) {
        auto l = 2 * i + 1;
        if (l >= heap_.size()) break;
        auto c = (l + 1 < heap_.size() && activity_[heap_[l + 1]] > activity_[heap_[l]]) ? l + 1 : l;
        if (activity_[heap_[c]] <= activity_[v]) break;
        heap_[i] = heap_[c];
        heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
        i = c;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int64_t>(i);
}

void Solver::heap_insert(std::uint32_t v) {
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

std::uint32_t Solver::heap_pop() {
    auto v = heap_[0];
    heap_pos_[v] = -1;
    heap_[0] = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_pos_[heap_[0]] = 0;
        heap_down(0);
    }
    return v;
}

std::int64_t Solver::pick_branch() {
    while (!heap_.empty()) {
        auto v = heap_pop();
        if (assign_[v] < 0) return v;
    }
    return -1;
}

namespace {
std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1;
        --seq;
        i = i % size;
    }
    return std::uint64_t{1} << seq;
}
}  // namespace

Result Solver::solve(std::uint64_t conflict_limit) {
    if (unsat_) return Result::Unsat;
    if (propagate() >= 0) {
        unsat_ = true;
        return Result::Unsat;
    }
    std::vector<Lit> learnt;
    std::uint64_t restart_no = 0;
    std::uint64_t budget = 100 * luby(restart_no);
    std::uint64_t since_restart = 0;
    while (true) {
        auto confl = propagate();
        if (confl >= 0) {
            ++conflicts_;
            ++since_restart;
            if (level() == 0) {
                unsat_ = true;
                return Result::Unsat;
            }
            std::uint32_t bt = 0;
            analyze(confl, learnt, bt);
            backtrack(bt);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                auto idx = static_cast<std::int32_t>(clauses_.size());
                watches_[negate(learnt[0])].push_back(static_cast<std::uint32_t>(idx));
                watches_[negate(learnt[1])].push_back(static_cast<std::uint32_t>(idx));
                clauses_.push_back({learnt, true});
                enqueue(learnt[0], idx);
            }
            var_inc_ *= 1.0 / 0.95;
            if (conflict_limit && conflicts_ >= conflict_limit) {
                backtrack(0);
                return Result::Unknown;
            }
        } else {
            if (since_restart >= budget) {
                backtrack(0);
                since_restart = 0;
                budget = 100 * luby(++restart_no);
            }
            auto v = pick_branch();
            if (v < 0) {
                model_ = assign_;
                backtrack(0);
                return Result::Sat;
            }
            trail_lim_.push_back(trail_.size());
            auto var = static_cast<std::uint32_t>(v);
            enqueue(polarity_[var] ? neg(var) : pos(var), -1);
        }
    }
}

}  // namespace ca::sat
