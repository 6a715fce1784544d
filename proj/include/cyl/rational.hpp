#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cyl/term.hpp"

namespace ca {

using Rational = boost::multiprecision::cpp_rational;

// Element of the two-element set V_block (block >= 3).
struct Tagged {
    Index block = 3;
    std::uint8_t bit = 0;
    auto operator<=>(const Tagged&) const = default;
};

// A member of the base U: rationals for V_0 = V_1 = V_2, tagged pairs above.
using UValue = std::variant<Rational, Tagged>;
std::string to_string(const UValue& v);

class MalformedPoint : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Sequence with s_i in V_i that differs from the reference p at finitely many
// places; p = (0, 0, 0, (3,0), (4,0), ...).
class RationalPoint {
public:
    RationalPoint() = default;
    static UValue reference(Index i);
    // Throws MalformedPoint when a value lies outside V_i.
    static RationalPoint of(const std::map<Index, UValue>& values);

    UValue at(Index i) const;
    const Rational& rat(Index i) const;  // i <= 2
    RationalPoint with(Index i, const UValue& v) const;  // s(i/v)
    // indices where s differs from p
    const std::map<Index, UValue>& support() const { return diff_; }
    std::optional<Index> max_support() const;
    bool operator==(const RationalPoint& o) const { return diff_ == o.diff_; }
    std::string to_string(Index trunc_dim) const;

private:
    std::map<Index, UValue> diff_;
};

// s_0 < s_1 < s_2 (every s_i lies in V_i by construction).
bool in_T(const RationalPoint& s, Index trunc_dim);
// number of i > 2 with s_i != p_i
std::size_t flip_count(const RationalPoint& s);
// T plus: s_1 is the midpoint of s_0, s_2 iff the flip count is even.
bool rational_g_membership(const RationalPoint& s, Index trunc_dim);

struct CutWitness {
    UValue u, v;
    bool u_in_g = false;  // exactly one of s(i/u), s(i/v) is in g
};
// Values u, v with s(i/u), s(i/v) in T on opposite sides of g; verified before return.
CutWitness cut_witnesses(const RationalPoint& s, Index i, Index trunc_dim);

// Seeded point of T with support below trunc_dim; about half lie in g.
RationalPoint random_T_point(std::mt19937_64& rng, Index trunc_dim);
Rational random_rational(std::mt19937_64& rng, long span = 20, long max_den = 12);

// Order automorphism of the rationals, piecewise linear between the padded
// breakpoints lo < a_1 < ... < a_n < hi, identity outside [lo, hi].
class PLMap {
public:
    PLMap() = default;  // identity
    Rational operator()(const Rational& x) const;
    PLMap inverse() const;
    const std::vector<Rational>& from() const { return a_; }
    const std::vector<Rational>& to() const { return b_; }

private:
    friend PLMap pl_automorphism(const std::vector<Rational>&, const std::vector<Rational>&,
                                 std::optional<std::pair<Rational, Rational>>);
    std::vector<Rational> a_, b_;  // padded
};

// Maps a_k to b_k. Padding defaults to one below the least and one above the greatest value.
PLMap pl_automorphism(const std::vector<Rational>& a, const std::vector<Rational>& b,
                      std::optional<std::pair<Rational, Rational>> padding = std::nullopt);

// Order automorphism on the rationals, swaps inside finitely many blocks V_m, identity elsewhere.
struct GoodPermutation {
    PLMap order;
    std::set<Index> swapped;
    UValue operator()(const UValue& v) const;
    RationalPoint operator()(const RationalPoint& s) const;
    // identity on each listed element
    bool fixes(const std::vector<UValue>& S) const;
};

// A good permutation taking s to z, for s, z in T.
GoodPermutation transporter(const RationalPoint& s, const RationalPoint& z, Index trunc_dim);

}  // namespace ca
