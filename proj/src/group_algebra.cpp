#include "sparsehom/group_algebra.hpp"

#include <bit>

namespace sparsehom {

namespace {

constexpr int kMaxDim = 16;

// Permute the 64 bits of x by position -> position ^ s (s < 64).
std::uint64_t xor_permute_word(std::uint64_t x, unsigned s) {
    static constexpr std::uint64_t masks[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (unsigned t = 0; t < 6; ++t) {
        unsigned shift = 1u << t;
        if (s & shift) x = ((x & masks[t]) << shift) | ((x >> shift) & masks[t]);
    }
    return x;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int k) : k_(k) {
    if (k < 0 || k > kMaxDim) throw GraphError("group algebra dimension out of range");
    words_.assign(std::size_t{1} << (k > 6 ? k - 6 : 0), 0);
}

GroupAlgebraElement GroupAlgebraElement::unit(int k) {
    GroupAlgebraElement e(k);
    e.flip(0);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::generator(int k, std::uint32_t v) {
    GroupAlgebraElement e(k);
    e.flip(0);
    e.flip(v & ((std::uint32_t{1} << k) - 1));  // v = 0 collapses to the zero element
    return e;
}

bool GroupAlgebraElement::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

GroupAlgebraElement &GroupAlgebraElement::operator+=(const GroupAlgebraElement &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement &o) const {
    // out = sum over set bits i of *this of (o shifted by XOR i); iterate the
    // sparser operand.
    int pop_a = 0, pop_b = 0;
    for (auto w : words_) pop_a += std::popcount(w);
    for (auto w : o.words_) pop_b += std::popcount(w);
    const GroupAlgebraElement &a = pop_a <= pop_b ? *this : o;
    const GroupAlgebraElement &b = pop_a <= pop_b ? o : *this;

    GroupAlgebraElement out(k_);
    const std::size_t nwords = words_.size();
    const std::uint32_t total = std::uint32_t{1} << k_;
    for (std::uint32_t base = 0; base < total; base += 64) {
        std::uint64_t w = a.words_[base >> 6];
        while (w) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            w &= w - 1;
            std::uint32_t i = base + bit;
            unsigned lo = i & 63;
            std::uint32_t hi = i >> 6;
            for (std::size_t j = 0; j < nwords; ++j)
                out.words_[j ^ hi] ^= xor_permute_word(b.words_[j], lo);
        }
    }
    return out;
}

}  // namespace sparsehom
