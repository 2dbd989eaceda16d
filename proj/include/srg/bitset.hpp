#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace srg {

// Fixed-width dynamic bitset tuned for adjacency rows: the hot operation is
// popcount of the AND of two rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); i++) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); i++)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Calls fn(i) for every set bit in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t wi = 0; wi < w_.size(); wi++) {
            uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace srg
