#pragma once
// Independent reference implementations used only by tests.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyl/space.hpp"
#include "cyl/term.hpp"

namespace ref {

using ca::Index;
using ca::Point;

// Random term over the given variables with indices < dim.
ca::Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, Index dim, unsigned depth);

// Point-by-point semantics: membership of a single point, quantifying over U for c_i.
// `member(var, point)` answers variable membership.
struct NaiveEvaluator {
    Index dim;
    std::uint32_t base;
    std::function<bool(const std::string&, const Point&)> member;
    bool in(const ca::Term& t, const Point& s) const;
};

// Generated subalgebra by repeated closure of a set of elements under
// complement, pairwise union and every c_i (no atoms involved).
std::set<ca::BitVector> worklist_closure(const ca::SpacePtr& sp, const std::vector<ca::PointSet>& gens,
                                          std::size_t cap = 1u << 16);

// All points of U^d in lexicographic order.
std::vector<Point> all_points(Index dim, std::uint32_t base);

}  // namespace ref
