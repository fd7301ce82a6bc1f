#pragma once

#include "toric/cone.hpp"
#include "toric/integer.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

struct FanCone {
    /// Sorted indices into Fan::rays().
    std::vector<std::size_t> ray_ids;
    Cone cone;

    std::size_t dim() const { return cone.dim; }
};

/// A finite fan of strongly convex rational cones in N_R, closed under faces.
///
/// Cone ids are sorted by (dim, ray_ids), so id 0 is always the zero cone and
/// the rays come next in ray order.
class Fan {
public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<FanCone>& cones() const { return cones_; }
    const FanCone& cone(std::size_t id) const { return cones_.at(id); }
    std::size_t size() const { return cones_.size(); }

    /// Ids of the n-dimensional cones.
    const std::vector<std::size_t>& maximal_ids() const { return maximal_ids_; }
    /// (facet id, cone id) pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& face_relation() const { return face_relation_; }
    const std::vector<std::size_t>& facets_of(std::size_t id) const { return facets_.at(id); }
    const std::vector<std::size_t>& cofacets_of(std::size_t id) const { return cofacets_.at(id); }

    std::optional<std::size_t> find(const std::vector<std::size_t>& sorted_ray_ids) const;
    /// Id of the cone generated by the given ray alone.
    std::size_t ray_cone_id(std::size_t ray) const;

    /// Number of cones of each dimension 0..n.
    std::vector<std::size_t> f_vector() const;

private:
    friend Fan build_fan(std::size_t, const std::vector<LatticeVector>&,
                         const std::vector<std::vector<std::size_t>>&);

    std::size_t ambient_dim_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<FanCone> cones_;
    std::vector<std::size_t> maximal_ids_;
    std::vector<std::pair<std::size_t, std::size_t>> face_relation_;
    std::vector<std::vector<std::size_t>> facets_;
    std::vector<std::vector<std::size_t>> cofacets_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// Builds the face closure of the given cones and checks the fan axioms.
///
/// Rays are made primitive but keep their positions, so per-ray data (support
/// values) stays aligned with the input. Throws NonPointedCone if a cone
/// contains a line and FanAxiomViolation if two cones meet in a non-face, a
/// listed ray is not extreme in its cone, or a ray belongs to no cone.
Fan build_fan(std::size_t ambient_dim, const std::vector<LatticeVector>& rays,
              const std::vector<std::vector<std::size_t>>& maximal_cones);

struct CompletenessReport {
    bool complete = false;
    /// Empty when complete; otherwise names the unpaired ridge or the failing
    /// homology group.
    std::string witness;
};

/// Complete iff every (n-1)-cone lies in exactly two n-cones and the induced
/// cell complex on S^{n-1} has the homology of a sphere.
CompletenessReport check_complete(const Fan& f);

/// A piecewise linear function on a fan, integral on N.
struct SupportFunction {
    std::shared_ptr<const Fan> fan;
    std::vector<Integer> ray_values;
    /// One representative linear functional in M per cone id.
    std::vector<LatticeVector> h_sigma;

    std::size_t ambient_dim() const { return fan->ambient_dim(); }
    /// h evaluated at a lattice point of the given cone.
    Integer evaluate(std::size_t cone_id, const LatticeVector& point) const {
        return dot(h_sigma.at(cone_id), point);
    }
};

/// Solves <h_sigma, v> = value(v) over Z on the rays of every cone.
/// Throws NotLinearOnCone or NotIntegral.
SupportFunction support_from_ray_values(std::shared_ptr<const Fan> fan, std::vector<Integer> values);

/// Same function with all values negated.
SupportFunction negated(const SupportFunction& h);

/// The support function with h_sigma = a on every cone.
SupportFunction linear_support(std::shared_ptr<const Fan> fan, const LatticeVector& a);

/// h_K for the one-point polytope K = {a}, i.e. h_sigma = -a, whose Brion
/// sum is x^a.
SupportFunction point_support(std::shared_ptr<const Fan> fan, const LatticeVector& a);

/// A full-dimensional lattice polytope in M_R given by its vertices.
class LatticePolytope {
public:
    /// Reduces `points` to the extreme points of their convex hull.
    /// Throws DegeneratePolytope if the hull is not full-dimensional.
    LatticePolytope(std::size_t ambient_dim, const std::vector<LatticeVector>& points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }

    struct Facet {
        /// Primitive inner normal u; the facet is {p in K : <u, p> = offset}.
        LatticeVector normal;
        Integer offset;
        std::vector<std::size_t> vertex_ids;
    };
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const LatticeVector& p) const;
    bool contains_in_interior(const LatticeVector& p) const;

    /// Lattice points of K, in lexicographic order, by a bounding-box scan.
    std::vector<LatticeVector> lattice_points() const;

private:
    std::size_t ambient_dim_;
    std::vector<LatticeVector> vertices_;
    std::vector<Facet> facets_;
};

/// Convex hull facets of a point set by brute force over affinely independent
/// n-subsets with a supporting-hyperplane test.
std::vector<LatticePolytope::Facet> hull_facets(std::size_t ambient_dim,
                                                const std::vector<LatticeVector>& points);

struct NormalFan {
    std::shared_ptr<const Fan> fan;
    SupportFunction support;
    /// Maximal cone id for each polytope vertex.
    std::vector<std::size_t> vertex_cone;
};

/// Inner normal fan of K with h_K(v) = -min_{p in K} <p, v>.
NormalFan normal_fan_of_polytope(const LatticePolytope& p);

} // namespace toric
