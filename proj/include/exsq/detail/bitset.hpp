#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace exsq::detail {

// Fixed-width (chosen at runtime) bitset used by the clique search.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

    std::size_t bits() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool none() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Index of the lowest set bit, or bits() when empty.
    std::size_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return bits_;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    // this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t bits_ = 0;
};

}  // namespace exsq::detail
