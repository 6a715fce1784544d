#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ca {

// Fixed-length dense bitset. Bits past size() are always kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n, bool fill = false);

    std::size_t size() const { return n_; }
    std::size_t word_count() const { return w_.size(); }
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }
    bool all() const;
    bool subset_of(const BitVector& o) const;
    bool intersects(const BitVector& o) const;
    // Index of first set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const;
    std::size_t first() const { return next(0); }

    BitVector& operator|=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    BitVector& operator^=(const BitVector& o);
    BitVector& minus(const BitVector& o);
    BitVector operator~() const;
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    // Shift towards higher indices (<<) or lower indices (>>); bits falling off are dropped.
    BitVector shifted_up(std::size_t k) const;
    BitVector shifted_down(std::size_t k) const;

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVector& o) const;
    std::size_t hash() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
    std::vector<std::size_t> members() const;
    std::string to_string() const;  // '0'/'1' characters, index 0 first

private:
    void trim();
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& b) const { return b.hash(); }
};

}  // namespace ca
