#include "cyl/bits.hpp"

namespace ca {

BitVector::BitVector(std::size_t n, bool fill) : n_(n), w_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    trim();
}

void BitVector::trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

bool BitVector::any() const {
    for (auto x : w_)
        if (x) return true;
    return false;
}

bool BitVector::all() const { return count() == n_; }

bool BitVector::subset_of(const BitVector& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool BitVector::intersects(const BitVector& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::size_t BitVector::next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (x) return wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
        if (++wi == w_.size()) return n_;
        x = w_[wi];
    }
}

BitVector& BitVector::operator|=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}
BitVector& BitVector::operator&=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}
BitVector& BitVector::operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}
BitVector& BitVector::minus(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector r = *this;
    for (auto& x : r.w_) x = ~x;
    r.trim();
    return r;
}

BitVector BitVector::shifted_up(std::size_t k) const {
    BitVector r(n_);
    std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t i = w_.size(); i-- > ws;) {
        std::uint64_t v = w_[i - ws] << bs;
        if (bs && i - ws > 0) v |= w_[i - ws - 1] >> (64 - bs);
        r.w_[i] = v;
    }
    r.trim();
    return r;
}

BitVector BitVector::shifted_down(std::size_t k) const {
    BitVector r(n_);
    std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t i = 0; i + ws < w_.size(); ++i) {
        std::uint64_t v = w_[i + ws] >> bs;
        if (bs && i + ws + 1 < w_.size()) v |= w_[i + ws + 1] << (64 - bs);
        r.w_[i] = v;
    }
    return r;
}

bool BitVector::operator<(const BitVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
}

std::size_t BitVector::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
    for (auto x : w_) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

std::vector<std::size_t> BitVector::members() const {
    std::vector<std::size_t> r;
    for_each([&](std::size_t i) { r.push_back(i); });
    return r;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
}

}  // namespace ca
