#include "toric/box.hpp"

#include <algorithm>

namespace toric {

bool Box::empty() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (lo[i] > hi[i])
            return true;
    return false;
}

bool Box::contains(const LatticeVector& p) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (p[i] < lo[i] || p[i] > hi[i])
            return false;
    return true;
}

Integer Box::volume() const {
    if (empty())
        return 0;
    Integer v = 1;
    for (std::size_t i = 0; i < dim(); ++i)
        v *= hi[i] - lo[i] + 1;
    return v;
}

Box Box::expanded(const Integer& margin) const {
    Box b = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
        b.lo[i] -= margin;
        b.hi[i] += margin;
    }
    return b;
}

std::vector<LatticeVector> Box::outer_shell() const {
    std::vector<LatticeVector> shell;
    expanded(1).for_each_point([&](const LatticeVector& p) {
        if (!contains(p))
            shell.push_back(p);
    });
    return shell;
}

std::optional<Box> bounding_box(const std::vector<LatticeVector>& points) {
    if (points.empty())
        return std::nullopt;
    Box b{points.front(), points.front()};
    for (const auto& p : points)
        for (std::size_t i = 0; i < p.size(); ++i) {
            b.lo[i] = std::min(b.lo[i], p[i]);
            b.hi[i] = std::max(b.hi[i], p[i]);
        }
    return b;
}

} // namespace toric
