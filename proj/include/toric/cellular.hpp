#pragma once

#include "toric/fan.hpp"
#include "toric/matrix.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace toric {

/// The regular CW structure on S^{n-1} cut out by a fan: one cell of
/// dimension dim(sigma) - 1 per cone, the zero cone giving the empty cell in
/// dimension -1.
///
/// Each cell is oriented by an ordered basis of span(sigma) taken greedily
/// from sigma's rays in ray order. Incidence numbers are computed once.
class CellComplex {
public:
    explicit CellComplex(std::shared_ptr<const Fan> fan);

    const Fan& fan() const { return *fan_; }
    std::shared_ptr<const Fan> fan_ptr() const { return fan_; }

    /// Cell dimension of a cone id (dim sigma - 1).
    int cell_dim(std::size_t cone_id) const { return static_cast<int>(fan_->cone(cone_id).dim()) - 1; }

    /// Orientation basis (as rays) of the given cone.
    const std::vector<LatticeVector>& orientation(std::size_t cone_id) const { return bases_.at(cone_id); }

    /// [sigma : tau]; zero unless tau is a facet of sigma.
    int incidence(std::size_t sigma, std::size_t tau) const;

private:
    std::shared_ptr<const Fan> fan_;
    std::vector<std::vector<LatticeVector>> bases_;
    /// Parallel to fan_->facets_of(sigma).
    std::vector<std::vector<int>> facet_signs_;
};

CellComplex cell_complex(std::shared_ptr<const Fan> fan);

int incidence(const CellComplex& cc, std::size_t sigma, std::size_t tau);

/// Augmented cellular chain complex of a subcomplex. Degree d runs from -1
/// (the empty cell) to n-1.
struct ChainComplex {
    std::size_t ambient_dim = 0;
    /// cells[d + 1] lists the cone ids of the degree-d cells.
    std::vector<std::vector<std::size_t>> cells;
    /// boundaries[d + 1] : C_d -> C_{d-1} for d = 0 .. n-1, sized
    /// rank(C_{d-1}) x rank(C_d). boundaries[0] is an empty placeholder.
    std::vector<IntegerMatrix> boundaries;

    std::size_t rank(int degree) const { return cells.at(static_cast<std::size_t>(degree + 1)).size(); }
    const IntegerMatrix& boundary(int degree) const {
        return boundaries.at(static_cast<std::size_t>(degree + 1));
    }
    int top_degree() const { return static_cast<int>(ambient_dim) - 1; }

    /// True iff every composite boundary(d-1) * boundary(d) vanishes.
    bool boundary_squares_to_zero() const;
};

/// Chain complex of the subcomplex consisting of the nonzero cones for which
/// `keep` holds. The empty cell is always present, so keep = nothing yields
/// the single rank-one module in degree -1. Throws NotFaceClosed.
ChainComplex chain_complex(const CellComplex& cc, const std::function<bool(std::size_t)>& keep);
ChainComplex chain_complex(const CellComplex& cc, const std::vector<bool>& keep);

/// Field over which homology dimensions are taken; torsion is always read
/// off the integral Smith normal form.
struct Coefficients {
    /// 0 stands for Q, otherwise a prime.
    Integer characteristic = 0;

    static Coefficients rational() { return {}; }
    static Coefficients modp(Integer p) { return {std::move(p)}; }
    bool is_rational() const { return characteristic == 0; }
};

struct HomologyResult {
    /// betti[d + 1] = dim of reduced H_d for d = -1 .. n-1.
    std::vector<std::size_t> betti;
    /// torsion[d + 1] = invariant factors > 1 of reduced H_d over Z.
    std::vector<std::vector<Integer>> torsion;

    std::size_t betti_at(int d) const { return betti.at(static_cast<std::size_t>(d + 1)); }
};

HomologyResult reduced_homology(const ChainComplex& c, const Coefficients& coefficients = {});

/// sum_k (-1)^k rank C^k where C^k collects the codimension-k cones,
/// the zero cone included.
Integer euler_characteristic(const ChainComplex& c);

/// sum_d (-1)^d rank C_d over d = -1 .. n-1, the empty cell included.
Integer reduced_euler_characteristic(const ChainComplex& c);

} // namespace toric
