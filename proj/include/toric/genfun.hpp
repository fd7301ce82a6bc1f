#pragma once

#include "toric/box.hpp"
#include "toric/cone.hpp"
#include "toric/laurent.hpp"

#include <map>
#include <vector>

namespace toric {

/// One piece of a half-open triangulation. Facet i (opposite generator i) is
/// part of the piece iff closed[i]; the piece is then
/// {sum l_i g_i : l_i >= 0 if closed[i], l_i > 0 otherwise}.
struct HalfOpenSimplicialCone {
    std::vector<LatticeVector> generators;
    /// Positions of the generators in the parent cone's ray list.
    std::vector<std::size_t> ray_indices;
    std::vector<bool> closed;
};

/// Decomposes a full-dimensional pointed cone into disjoint half-open
/// simplicial cones on its own rays: a pulling triangulation, with facets
/// opened according to a generic interior reference point.
/// Throws NotPointed or NotFullDimensional.
std::vector<HalfOpenSimplicialCone> triangulate_halfopen(const Cone& c);

/// Lattice points of the half-open fundamental parallelepiped
/// {sum l_i g_i : l_i in [0,1) if closed[i], l_i in (0,1] otherwise}.
/// There are |det(g)| of them. Throws DependentGenerators.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& generators,
                                                 const std::vector<bool>& closed);

/// Rational generating function of the lattice points of shift + c.
RationalGF cone_genfun(const LatticeVector& shift, const Cone& c);

/// Coefficients of a series restricted to a box; absent exponents are zero.
struct SeriesBox {
    Box box;
    std::map<LatticeVector, Integer> coefficients;

    Integer at(const LatticeVector& e) const {
        auto it = coefficients.find(e);
        return it == coefficients.end() ? Integer(0) : it->second;
    }
    friend bool operator==(const SeriesBox&, const SeriesBox&) = default;
};

/// Indicator of (shift + c) on the box, by testing every lattice point
/// against the inequalities of c.
SeriesBox truncated_series(const LatticeVector& shift, const Cone& c, const Box& box);

/// Laurent expansion of f on the box, each 1/(1 - x^g) read as sum_k x^{k g}.
/// The factors must lie in a common pointed cone (NotPointed otherwise).
SeriesBox expand_series(const RationalGF& f, const Box& box);

} // namespace toric
