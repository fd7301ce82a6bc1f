#pragma once

#include "toric/integer.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Integer box prod_i [lo_i, hi_i] in M. An empty box has some lo_i > hi_i.
struct Box {
    LatticeVector lo;
    LatticeVector hi;

    std::size_t dim() const { return lo.size(); }
    bool empty() const;
    bool contains(const LatticeVector& p) const;
    /// Number of lattice points.
    Integer volume() const;
    /// The box grown by `margin` in every direction.
    Box expanded(const Integer& margin) const;

    /// Calls f on every lattice point, lexicographic order.
    template <typename F>
    void for_each_point(F&& f) const {
        if (empty())
            return;
        LatticeVector p = lo;
        const std::size_t n = dim();
        for (;;) {
            f(static_cast<const LatticeVector&>(p));
            std::size_t i = n;
            while (i > 0 && p[i - 1] == hi[i - 1]) {
                p[i - 1] = lo[i - 1];
                --i;
            }
            if (i == 0)
                return;
            ++p[i - 1];
        }
    }

    /// Lattice points of expanded(1) that are not in the box.
    std::vector<LatticeVector> outer_shell() const;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Smallest box containing all points; nullopt for an empty list.
std::optional<Box> bounding_box(const std::vector<LatticeVector>& points);

} // namespace toric
