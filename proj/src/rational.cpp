#include "cyl/rational.hpp"

#include <algorithm>
#include <sstream>

namespace ca {

namespace {

bool fits(Index i, const UValue& v) {
    if (i <= 2) return std::holds_alternative<Rational>(v);
    auto* t = std::get_if<Tagged>(&v);
    return t && t->block == i && t->bit <= 1;
}

}  // namespace

std::string to_string(const UValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return r->str();
    auto& t = std::get<Tagged>(v);
    return "(" + std::to_string(t.block) + "," + std::to_string(t.bit) + ")";
}

UValue RationalPoint::reference(Index i) {
    if (i <= 2) return Rational(0);
    return Tagged{i, 0};
}

RationalPoint RationalPoint::of(const std::map<Index, UValue>& values) {
    RationalPoint s;
    for (auto& [i, v] : values) s = s.with(i, v);
    return s;
}

UValue RationalPoint::at(Index i) const {
    auto it = diff_.find(i);
    return it == diff_.end() ? reference(i) : it->second;
}

const Rational& RationalPoint::rat(Index i) const {
    static const Rational zero(0);
    if (i > 2) throw std::out_of_range("rational coordinate index above 2");
    auto it = diff_.find(i);
    return it == diff_.end() ? zero : std::get<Rational>(it->second);
}

RationalPoint RationalPoint::with(Index i, const UValue& v) const {
    if (!fits(i, v)) throw MalformedPoint("value " + ca::to_string(v) + " is not in V_" + std::to_string(i));
    RationalPoint s = *this;
    if (v == reference(i)) s.diff_.erase(i);
    else s.diff_[i] = v;
    return s;
}

std::optional<Index> RationalPoint::max_support() const {
    if (diff_.empty()) return std::nullopt;
    return diff_.rbegin()->first;
}

std::string RationalPoint::to_string(Index trunc_dim) const {
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < trunc_dim; ++i) os << (i ? "," : "") << ca::to_string(at(i));
    os << ",p...)";
    return os.str();
}

static void check_trunc(const RationalPoint& s, Index trunc_dim) {
    if (trunc_dim < 4) throw std::invalid_argument("truncation dimension must be at least 4");
    if (auto m = s.max_support(); m && *m >= trunc_dim)
        throw MalformedPoint("point differs from p at index " + std::to_string(*m) + ", beyond the truncation");
}

bool in_T(const RationalPoint& s, Index trunc_dim) {
    check_trunc(s, trunc_dim);
    return s.rat(0) < s.rat(1) && s.rat(1) < s.rat(2);
}

std::size_t flip_count(const RationalPoint& s) {
    return static_cast<std::size_t>(
        std::count_if(s.support().begin(), s.support().end(), [](auto& kv) { return kv.first > 2; }));
}

bool rational_g_membership(const RationalPoint& s, Index trunc_dim) {
    if (!in_T(s, trunc_dim)) return false;
    bool mid = s.rat(1) * 2 == s.rat(0) + s.rat(2);
    return mid == (flip_count(s) % 2 == 0);
}

CutWitness cut_witnesses(const RationalPoint& s, Index i, Index trunc_dim) {
    if (!in_T(s, trunc_dim)) throw std::invalid_argument("cut witnesses need a point of T");
    if (i >= trunc_dim) throw std::out_of_range("index beyond the truncation");
    const Rational &s0 = s.rat(0), &s1 = s.rat(1), &s2 = s.rat(2);
    CutWitness w;
    if (i == 1) {
        Rational u = (s0 + s2) / 2;
        w.u = u;
        w.v = Rational((s0 + u) / 2);
    } else if (i == 0) {
        Rational u = 2 * s1 - s2;
        w.u = u;
        w.v = Rational(u - 1);
    } else if (i == 2) {
        Rational u = 2 * s1 - s0;
        w.u = u;
        w.v = Rational(u + 1);
    } else {
        auto t = std::get<Tagged>(s.at(i));
        w.u = t;
        w.v = Tagged{i, static_cast<std::uint8_t>(1 - t.bit)};
    }
    auto su = s.with(i, w.u), sv = s.with(i, w.v);
    if (!in_T(su, trunc_dim) || !in_T(sv, trunc_dim))
        throw std::logic_error("cut witness left T at index " + std::to_string(i));
    bool gu = rational_g_membership(su, trunc_dim), gv = rational_g_membership(sv, trunc_dim);
    if (gu == gv) throw std::logic_error("cut witness failed at index " + std::to_string(i));
    w.u_in_g = gu;
    return w;
}

Rational random_rational(std::mt19937_64& rng, long span, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den), num(-span * max_den, span * max_den);
    long d = den(rng);
    return Rational(num(rng), d);
}

RationalPoint random_T_point(std::mt19937_64& rng, Index trunc_dim) {
    std::map<Index, UValue> v;
    Rational a = random_rational(rng), b = random_rational(rng);
    while (a == b) b = random_rational(rng);
    if (b < a) std::swap(a, b);
    Rational m;
    if (rng() % 2) m = (a + b) / 2;
    else {
        std::uniform_int_distribution<long> k(1, 7);
        m = a + (b - a) * Rational(k(rng), 8);
    }
    v[0] = a;
    v[1] = m;
    v[2] = b;
    for (Index i = 3; i < trunc_dim; ++i) v[i] = Tagged{i, static_cast<std::uint8_t>(rng() % 2)};
    return RationalPoint::of(v);
}

Rational PLMap::operator()(const Rational& x) const {
    if (a_.empty() || x <= a_.front() || x >= a_.back()) return x;
    auto it = std::upper_bound(a_.begin(), a_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - a_.begin()) - 1;
    return (x - a_[k]) * (b_[k + 1] - b_[k]) / (a_[k + 1] - a_[k]) + b_[k];
}

PLMap PLMap::inverse() const {
    PLMap m;
    m.a_ = b_;
    m.b_ = a_;
    return m;
}

PLMap pl_automorphism(const std::vector<Rational>& a, const std::vector<Rational>& b,
                      std::optional<std::pair<Rational, Rational>> padding) {
    if (a.empty() || a.size() != b.size()) throw std::invalid_argument("breakpoint lists must be nonempty and of equal length");
    for (std::size_t k = 1; k < a.size(); ++k)
        if (!(a[k - 1] < a[k]) || !(b[k - 1] < b[k])) throw std::invalid_argument("breakpoints must be strictly increasing");
    Rational lo = std::min(a.front(), b.front()) - 1, hi = std::max(a.back(), b.back()) + 1;
    if (padding) {
        lo = padding->first;
        hi = padding->second;
        if (!(lo < a.front() && lo < b.front() && hi > a.back() && hi > b.back()))
            throw std::invalid_argument("padding must lie strictly outside both lists");
    }
    PLMap m;
    m.a_.push_back(lo);
    m.b_.push_back(lo);
    m.a_.insert(m.a_.end(), a.begin(), a.end());
    m.b_.insert(m.b_.end(), b.begin(), b.end());
    m.a_.push_back(hi);
    m.b_.push_back(hi);
    for (std::size_t k = 0; k + 1 < m.a_.size(); ++k) {
        Rational mid = (m.a_[k] + m.a_[k + 1]) / 2;
        if (!(m(m.a_[k]) < m(mid) && m(mid) < m(m.a_[k + 1])))
            throw std::logic_error("piecewise map is not increasing on a segment");
    }
    for (std::size_t k = 0; k < a.size(); ++k)
        if (m(a[k]) != b[k]) throw std::logic_error("piecewise map misses a breakpoint");
    return m;
}

UValue GoodPermutation::operator()(const UValue& v) const {
    if (auto* r = std::get_if<Rational>(&v)) return order(*r);
    auto t = std::get<Tagged>(v);
    if (swapped.count(t.block)) t.bit ^= 1u;
    return t;
}

RationalPoint GoodPermutation::operator()(const RationalPoint& s) const {
    std::map<Index, UValue> v;
    Index top = 3;
    if (auto m = s.max_support()) top = std::max(top, *m + 1);
    if (!swapped.empty()) top = std::max(top, *swapped.rbegin() + 1);
    for (Index i = 0; i < top; ++i) v[i] = (*this)(s.at(i));
    return RationalPoint::of(v);
}

bool GoodPermutation::fixes(const std::vector<UValue>& S) const {
    return std::all_of(S.begin(), S.end(), [&](const UValue& v) { return (*this)(v) == v; });
}

GoodPermutation transporter(const RationalPoint& s, const RationalPoint& z, Index trunc_dim) {
    if (!in_T(s, trunc_dim) || !in_T(z, trunc_dim)) throw std::invalid_argument("transporter needs points of T");
    GoodPermutation p;
    p.order = pl_automorphism({s.rat(0), s.rat(1), s.rat(2)}, {z.rat(0), z.rat(1), z.rat(2)});
    for (Index i = 3; i < trunc_dim; ++i)
        if (s.at(i) != z.at(i)) p.swapped.insert(i);
    if (!(p(s) == z)) throw std::logic_error("transporter does not take s to z");
    return p;
}

}  // namespace ca
