#pragma once

#include <cstdint>
#include <vector>

#include "sparsehom/graph.hpp"

namespace sparsehom {

/// Element of GF(2)[Z_2^k]: a characteristic vector of length 2^k.
/// Addition is XOR; multiplication is XOR-convolution. Generators of the
/// form e_0 + e_v square to zero, which is what kills non-multilinear
/// monomials during detection.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(int k);

    static GroupAlgebraElement zero(int k) { return GroupAlgebraElement(k); }
    static GroupAlgebraElement unit(int k);  // e_0
    static GroupAlgebraElement generator(int k, std::uint32_t v);  // e_0 + e_v

    int dimension() const { return k_; }
    bool is_zero() const;

    GroupAlgebraElement &operator+=(const GroupAlgebraElement &o);
    GroupAlgebraElement operator+(const GroupAlgebraElement &o) const {
        auto r = *this;
        r += o;
        return r;
    }
    GroupAlgebraElement operator*(const GroupAlgebraElement &o) const;

    bool operator==(const GroupAlgebraElement &o) const {
        return k_ == o.k_ && words_ == o.words_;
    }

    bool get(std::uint32_t idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1; }
    void flip(std::uint32_t idx) { words_[idx >> 6] ^= std::uint64_t{1} << (idx & 63); }

private:
    int k_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ring adaptor for circuit evaluation; holds one generator per host vertex.
struct Gf2GroupRing {
    using Value = GroupAlgebraElement;
    int k;
    std::vector<GroupAlgebraElement> vertex_values;

    Value zero() const { return GroupAlgebraElement::zero(k); }
    Value one() const { return GroupAlgebraElement::unit(k); }
    Value add(const Value &a, const Value &b) const { return a + b; }
    Value mul(const Value &a, const Value &b) const { return a * b; }
    const Value &y(Vertex v) const { return vertex_values[v]; }
};

}  // namespace sparsehom
