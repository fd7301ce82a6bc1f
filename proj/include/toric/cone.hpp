#pragma once

#include "toric/integer.hpp"

#include <utility>
#include <vector>

namespace toric {

/// Generators of a polyhedral cone: a lineality-space basis plus the extreme
/// rays of the pointed quotient. The cone is span(lineality) + cone(rays).
struct ConeGenerators {
    std::vector<LatticeVector> lineality;
    std::vector<LatticeVector> rays;
};

/// Double description: generators of {x in R^n : <a, x> >= 0 for every a}.
/// Inequalities are added one at a time; new rays come only from adjacent
/// pairs, so the output rays are exactly the extreme rays, primitive.
ConeGenerators double_description(const std::vector<LatticeVector>& inequalities,
                                  std::size_t ambient_dim);

/// A rational polyhedral cone carrying both descriptions.
///
/// `rays` generates the cone; for a non-pointed cone the lineality space
/// appears as +/- pairs. `inequalities` cuts it out as {x : <u, x> >= 0};
/// equations of the linear span appear as +/- pairs.
struct Cone {
    std::size_t ambient_dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<LatticeVector> inequalities;
    std::size_t dim = 0;
    bool pointed = true;

    bool contains(const LatticeVector& x) const;
    bool full_dimensional() const { return dim == ambient_dim; }
};

/// Cone generated by `generators`. Zero generators are ignored; rays are made
/// primitive and reduced to the extreme ones (input order is kept for
/// pointed cones). A cone containing a line is accepted and flagged.
Cone cone_from_rays(std::size_t ambient_dim, const std::vector<LatticeVector>& generators);

/// {u : <u, y> >= 0 for all y in c}.
Cone dual_cone(const Cone& c);

/// True iff every generator of `a` lies in `b` and vice versa.
bool same_cone(const Cone& a, const Cone& b);

struct ConeFace {
    Cone cone;
    /// Indices into the parent cone's ray list.
    std::vector<std::size_t> ray_indices;
    std::size_t dim = 0;
};

struct FaceLattice {
    /// Sorted by (dim, ray_indices); faces.front() is the zero face and
    /// faces.back() the cone itself.
    std::vector<ConeFace> faces;
    /// (facet index, face index) pairs into `faces`.
    std::vector<std::pair<std::size_t, std::size_t>> facet_relation;
};

/// All faces of a pointed cone. Throws NotPointed otherwise.
FaceLattice face_lattice(const Cone& c);

} // namespace toric
