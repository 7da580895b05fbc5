#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sparsehom/graph.hpp"

namespace sparsehom {

/// Symmetry-breaking predicate on a homomorphism's host images. Two forms:
///   Less:  sigma(a) < sigma(b)
///   MinOf: sigma(a) = min over sigma of `members` (a is itself a member)
struct SymmetryConstraint {
    enum class Kind { Less, MinOf };

    Kind kind;
    Vertex a = -1;
    Vertex b = -1;            // Less only
    std::vector<Vertex> members;  // MinOf only; includes a

    static SymmetryConstraint less(Vertex a, Vertex b) {
        SymmetryConstraint c;
        c.kind = Kind::Less;
        c.a = a;
        c.b = b;
        return c;
    }
    static SymmetryConstraint min_of(Vertex a, std::vector<Vertex> members) {
        SymmetryConstraint c;
        c.kind = Kind::MinOf;
        c.a = a;
        c.members = std::move(members);
        return c;
    }

    /// Pattern vertices the constraint reads.
    std::vector<Vertex> referenced() const {
        if (kind == Kind::Less) return {a, b};
        return members;
    }

    /// Evaluate on a full assignment pattern vertex -> host vertex.
    bool satisfied(const std::vector<Vertex> &image) const {
        if (kind == Kind::Less) return image[a] < image[b];
        Vertex m = image[members.front()];
        for (Vertex v : members) m = std::min(m, image[v]);
        return image[a] == m;
    }

    std::string to_string() const;
};

using ConstraintSet = std::vector<SymmetryConstraint>;

inline bool all_satisfied(const ConstraintSet &cs, const std::vector<Vertex> &image) {
    for (const auto &c : cs)
        if (!c.satisfied(image)) return false;
    return true;
}

}  // namespace sparsehom
