#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyl/bits.hpp"
#include "cyl/term.hpp"

namespace ca {

using Point = std::vector<std::uint32_t>;

struct Limits {
    std::uint64_t cell_budget = std::uint64_t{1} << 20;
    std::uint64_t carrier_budget = 20000;  // listed elements
    std::uint64_t atom_budget = 4096;      // atoms of a generated algebra
    std::uint64_t full_exhaustive_cells = 512;  // Full carriers checked exhaustively only up to this
    std::uint32_t enumeration_bits = 10;   // atoms*vars bound for plain enumeration, SAT above
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The tuple space U^d with U = {0..base-1}; cells in lexicographic order,
// coordinate 0 most significant.
class CylSpace {
public:
    static std::shared_ptr<const CylSpace> make(Index dim, std::uint32_t base, const Limits& lim = {});

    Index dim() const { return dim_; }
    std::uint32_t base() const { return base_; }
    std::size_t cells() const { return cells_; }
    std::size_t stride(Index i) const { return stride_[i]; }

    std::size_t cell(const Point& p) const;
    Point point(std::size_t cell) const;
    std::uint32_t coord(std::size_t cell, Index i) const { return static_cast<std::uint32_t>((cell / stride_[i]) % base_); }
    // cell with coordinate i replaced by u
    std::size_t with(std::size_t cell, Index i, std::uint32_t u) const {
        return cell - static_cast<std::size_t>(coord(cell, i)) * stride_[i] + static_cast<std::size_t>(u) * stride_[i];
    }
    const BitVector& axis_zero_mask(Index i) const { return zero_mask_[i]; }
    bool same(const CylSpace& o) const { return dim_ == o.dim_ && base_ == o.base_; }
    std::string describe() const;

private:
    CylSpace(Index dim, std::uint32_t base, std::size_t cells);
    Index dim_;
    std::uint32_t base_;
    std::size_t cells_;
    std::vector<std::size_t> stride_;
    std::vector<BitVector> zero_mask_;
};

using SpacePtr = std::shared_ptr<const CylSpace>;

class PointSet {
public:
    PointSet() = default;
    PointSet(SpacePtr sp, BitVector bits);
    static PointSet empty(SpacePtr sp);
    static PointSet full(SpacePtr sp);
    static PointSet of_points(SpacePtr sp, const std::vector<Point>& pts);
    static PointSet random(SpacePtr sp, std::mt19937_64& rng);

    const SpacePtr& space() const { return sp_; }
    const BitVector& bits() const { return bits_; }
    bool contains(const Point& p) const { return bits_.test(sp_->cell(p)); }
    bool contains_cell(std::size_t c) const { return bits_.test(c); }
    std::size_t count() const { return bits_.count(); }
    bool is_empty() const { return bits_.none(); }
    std::vector<Point> points() const;
    std::string to_string() const;  // {(0,1,0),(1,1,0)}

    bool operator==(const PointSet& o) const { return bits_ == o.bits_ && sp_->same(*o.sp_); }
    bool operator!=(const PointSet& o) const { return !(*this == o); }
    bool operator<(const PointSet& o) const { return bits_ < o.bits_; }
    bool subset_of(const PointSet& o) const { return bits_.subset_of(o.bits_); }

    PointSet operator|(const PointSet& o) const;
    PointSet operator&(const PointSet& o) const;
    PointSet operator^(const PointSet& o) const;
    PointSet operator-(const PointSet& o) const;
    PointSet operator~() const;

private:
    SpacePtr sp_;
    BitVector bits_;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& p) const { return p.bits().hash(); }
};

PointSet cyl(Index i, const PointSet& X);
PointSet diag(const SpacePtr& sp, Index i, Index j);
// s in result iff s with coordinates i and j exchanged is in X
PointSet transposition(Index i, Index j, const PointSet& X);

// Parse "{(0,1,0),(1,1,0)}" (also "{}"), tuples of length dim.
PointSet parse_point_set(const SpacePtr& sp, const std::string& text);

}  // namespace ca
