#pragma once

// Fixed-size dynamic bitset backed by the word kernels.  Used for residual
// vertex sets and adjacency rows of the interlacing graph.

#include "widecat/kernels.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace widecat {

class DynBitset {
public:
    DynBitset() = default;

    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0)
    {
    }

    std::size_t size() const { return nbits_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set_first_n(std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            set(i);
    }

    DynBitset& operator&=(const DynBitset& o)
    {
        kernels::bits_and(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }

    DynBitset& operator|=(const DynBitset& o)
    {
        kernels::bits_or(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }

    // *this &= ~o
    DynBitset& andnot_assign(const DynBitset& o)
    {
        kernels::bits_andnot(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }

    std::size_t count() const
    {
        return static_cast<std::size_t>(kernels::bits_popcount(w_.data(), w_.size()));
    }

    std::size_t count_and(const DynBitset& o) const
    {
        return static_cast<std::size_t>(
            kernels::bits_and_popcount(w_.data(), o.w_.data(), w_.size()));
    }

    bool none() const { return kernels::bits_none(w_.data(), w_.size()); }
    bool any() const { return !none(); }

    // Index of the lowest set bit, or size() when empty.
    std::size_t find_first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] != 0)
                return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return nbits_;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w != 0) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const DynBitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    std::size_t hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t w : w_) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

} // namespace widecat
