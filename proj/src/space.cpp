#include "cyl/space.hpp"

#include <cctype>
#include <sstream>

namespace ca {

CylSpace::CylSpace(Index dim, std::uint32_t base, std::size_t cells)
    : dim_(dim), base_(base), cells_(cells), stride_(dim) {
    std::size_t s = 1;
    for (Index i = dim; i-- > 0;) {
        stride_[i] = s;
        s *= base;
    }
    for (Index i = 0; i < dim; ++i) {
        BitVector m(cells);
        for (std::size_t c = 0; c < cells; ++c)
            if (coord(c, i) == 0) m.set(c);
        zero_mask_.push_back(std::move(m));
    }
}

std::shared_ptr<const CylSpace> CylSpace::make(Index dim, std::uint32_t base, const Limits& lim) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (base < 1) throw std::invalid_argument("base size must be >= 1");
    std::uint64_t cells = 1;
    for (Index i = 0; i < dim; ++i) {
        cells *= base;
        if (cells > lim.cell_budget)
            throw BudgetError("space " + std::to_string(base) + "^" + std::to_string(dim) + " exceeds cell budget " +
                              std::to_string(lim.cell_budget));
    }
    return std::shared_ptr<const CylSpace>(new CylSpace(dim, base, static_cast<std::size_t>(cells)));
}

std::size_t CylSpace::cell(const Point& p) const {
    if (p.size() != dim_) throw std::invalid_argument("point has wrong length");
    std::size_t c = 0;
    for (Index i = 0; i < dim_; ++i) {
        if (p[i] >= base_) throw std::invalid_argument("point coordinate outside base");
        c = c * base_ + p[i];
    }
    return c;
}

Point CylSpace::point(std::size_t cell) const {
    Point p(dim_);
    for (Index i = 0; i < dim_; ++i) p[i] = coord(cell, i);
    return p;
}

std::string CylSpace::describe() const {
    return "U^" + std::to_string(dim_) + ", |U| = " + std::to_string(base_);
}

PointSet::PointSet(SpacePtr sp, BitVector bits) : sp_(std::move(sp)), bits_(std::move(bits)) {
    if (bits_.size() != sp_->cells()) throw std::invalid_argument("bit length does not match space");
}

PointSet PointSet::empty(SpacePtr sp) {
    auto n = sp->cells();
    return PointSet(std::move(sp), BitVector(n));
}

PointSet PointSet::full(SpacePtr sp) {
    auto n = sp->cells();
    return PointSet(std::move(sp), BitVector(n, true));
}

PointSet PointSet::of_points(SpacePtr sp, const std::vector<Point>& pts) {
    BitVector b(sp->cells());
    for (auto& p : pts) b.set(sp->cell(p));
    return PointSet(std::move(sp), std::move(b));
}

PointSet PointSet::random(SpacePtr sp, std::mt19937_64& rng) {
    BitVector b(sp->cells());
    for (auto& w : b.words()) w = rng();
    b = b & BitVector(sp->cells(), true);
    return PointSet(std::move(sp), std::move(b));
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> r;
    bits_.for_each([&](std::size_t c) { r.push_back(sp_->point(c)); });
    return r;
}

std::string PointSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    bits_.for_each([&](std::size_t c) {
        if (!first) os << ',';
        first = false;
        os << '(';
        for (Index i = 0; i < sp_->dim(); ++i) os << (i ? "," : "") << sp_->coord(c, i);
        os << ')';
    });
    os << '}';
    return os.str();
}

PointSet PointSet::operator|(const PointSet& o) const { return PointSet(sp_, bits_ | o.bits_); }
PointSet PointSet::operator&(const PointSet& o) const { return PointSet(sp_, bits_ & o.bits_); }
PointSet PointSet::operator^(const PointSet& o) const { return PointSet(sp_, bits_ ^ o.bits_); }
PointSet PointSet::operator-(const PointSet& o) const {
    BitVector b = bits_;
    b.minus(o.bits_);
    return PointSet(sp_, std::move(b));
}
PointSet PointSet::operator~() const { return PointSet(sp_, ~bits_); }

PointSet cyl(Index i, const PointSet& X) {
    const auto& sp = *X.space();
    if (i >= sp.dim()) throw std::out_of_range("cylindrification index " + std::to_string(i) + " out of range");
    std::size_t st = sp.stride(i);
    // fold every slice onto coordinate 0 of axis i, then spread back
    BitVector base(sp.cells());
    for (std::uint32_t u = 0; u < sp.base(); ++u) base |= X.bits().shifted_down(u * st);
    base &= sp.axis_zero_mask(i);
    BitVector out = base;
    for (std::uint32_t u = 1; u < sp.base(); ++u) out |= base.shifted_up(u * st);
    return PointSet(X.space(), std::move(out));
}

PointSet diag(const SpacePtr& sp, Index i, Index j) {
    if (i >= sp->dim() || j >= sp->dim()) throw std::out_of_range("diagonal index out of range");
    BitVector b(sp->cells(), i == j);
    if (i != j)
        for (std::size_t c = 0; c < sp->cells(); ++c)
            if (sp->coord(c, i) == sp->coord(c, j)) b.set(c);
    return PointSet(sp, std::move(b));
}

PointSet transposition(Index i, Index j, const PointSet& X) {
    const auto& sp = *X.space();
    if (i >= sp.dim() || j >= sp.dim()) throw std::out_of_range("transposition index out of range");
    if (i == j) return X;
    BitVector b(sp.cells());
    X.bits().for_each([&](std::size_t c) {
        auto a = sp.coord(c, i), z = sp.coord(c, j);
        b.set(sp.with(sp.with(c, i, z), j, a));
    });
    return PointSet(X.space(), std::move(b));
}

PointSet parse_point_set(const SpacePtr& sp, const std::string& text) {
    std::vector<Point> pts;
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    auto expect = [&](char c) {
        skip();
        if (p >= text.size() || text[p] != c)
            throw std::invalid_argument(std::string("point set: expected '") + c + "' at offset " + std::to_string(p));
        ++p;
    };
    expect('{');
    skip();
    if (p < text.size() && text[p] == '}') return PointSet::empty(sp);
    while (true) {
        expect('(');
        Point pt;
        while (true) {
            skip();
            std::size_t start = p;
            while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
            if (p == start) throw std::invalid_argument("point set: expected coordinate at offset " + std::to_string(p));
            pt.push_back(static_cast<std::uint32_t>(std::stoul(text.substr(start, p - start))));
            skip();
            if (p < text.size() && text[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        expect(')');
        pts.push_back(pt);
        skip();
        if (p < text.size() && text[p] == ',') {
            ++p;
            continue;
        }
        break;
    }
    expect('}');
    return PointSet::of_points(sp, pts);
}

}  // namespace ca
