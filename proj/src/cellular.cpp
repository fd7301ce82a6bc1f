#include "toric/cellular.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

namespace {

/// Sign of the change-of-basis determinant from `basis` to `frame`, both
/// ordered bases of the same subspace. Uses det(B^T F) = det(B^T B) det(C)
/// with the Gram determinant positive.
int orientation_sign(const std::vector<LatticeVector>& basis, const std::vector<LatticeVector>& frame) {
    const std::size_t d = basis.size();
    IntegerMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = dot(basis[i], frame[j]);
    return sign(determinant(m));
}

} // namespace

CellComplex::CellComplex(std::shared_ptr<const Fan> fan) : fan_(std::move(fan)) {
    const Fan& f = *fan_;
    const std::size_t n = f.ambient_dim();
    bases_.reserve(f.size());
    for (const auto& c : f.cones()) {
        std::vector<LatticeVector> basis;
        for (auto r : c.ray_ids) {
            basis.push_back(f.rays()[r]);
            if (rank(basis, n) < basis.size())
                basis.pop_back();
        }
        // Top cells follow the ambient orientation.
        if (basis.size() == n && n >= 2 && sign(determinant(IntegerMatrix::from_columns(basis, n))) < 0)
            std::swap(basis[0], basis[1]);
        bases_.push_back(std::move(basis));
    }

    facet_signs_.resize(f.size());
    for (std::size_t sigma = 0; sigma < f.size(); ++sigma) {
        const auto& sigma_rays = f.cone(sigma).ray_ids;
        for (auto tau : f.facets_of(sigma)) {
            const auto& tau_rays = f.cone(tau).ray_ids;
            std::vector<LatticeVector> frame = bases_[tau];
            for (auto r : sigma_rays) {
                if (std::binary_search(tau_rays.begin(), tau_rays.end(), r))
                    continue;
                frame.push_back(f.rays()[r]);
                break;
            }
            facet_signs_[sigma].push_back(orientation_sign(bases_[sigma], frame));
        }
    }
}

int CellComplex::incidence(std::size_t sigma, std::size_t tau) const {
    const auto& facets = fan_->facets_of(sigma);
    auto it = std::find(facets.begin(), facets.end(), tau);
    if (it == facets.end())
        return 0;
    return facet_signs_[sigma][static_cast<std::size_t>(it - facets.begin())];
}

CellComplex cell_complex(std::shared_ptr<const Fan> fan) {
    return CellComplex(std::move(fan));
}

int incidence(const CellComplex& cc, std::size_t sigma, std::size_t tau) {
    return cc.incidence(sigma, tau);
}

bool ChainComplex::boundary_squares_to_zero() const {
    for (int d = 1; d <= top_degree(); ++d)
        if (!(boundary(d - 1) * boundary(d)).is_zero())
            return false;
    return true;
}

ChainComplex chain_complex(const CellComplex& cc, const std::vector<bool>& keep) {
    const Fan& f = cc.fan();
    const std::size_t n = f.ambient_dim();
    std::vector<bool> kept(f.size(), false);
    for (std::size_t id = 0; id < f.size(); ++id)
        kept[id] = f.cone(id).dim() == 0 || (id < keep.size() && keep[id]);
    for (std::size_t id = 0; id < f.size(); ++id) {
        if (!kept[id])
            continue;
        for (auto tau : f.facets_of(id))
            if (!kept[tau])
                throw NotFaceClosed("cone " + std::to_string(id) + " is kept but its facet " +
                                    std::to_string(tau) + " is not");
    }

    ChainComplex c;
    c.ambient_dim = n;
    c.cells.assign(n + 1, {});
    std::vector<std::size_t> position(f.size(), 0);
    for (std::size_t id = 0; id < f.size(); ++id) {
        if (!kept[id])
            continue;
        auto& bucket = c.cells[f.cone(id).dim()];
        position[id] = bucket.size();
        bucket.push_back(id);
    }
    c.boundaries.assign(n + 1, IntegerMatrix());
    for (std::size_t k = 1; k <= n; ++k) {
        IntegerMatrix m(c.cells[k - 1].size(), c.cells[k].size());
        for (std::size_t j = 0; j < c.cells[k].size(); ++j) {
            std::size_t sigma = c.cells[k][j];
            for (auto tau : f.facets_of(sigma))
                m(position[tau], j) = cc.incidence(sigma, tau);
        }
        c.boundaries[k] = std::move(m);
    }
    return c;
}

ChainComplex chain_complex(const CellComplex& cc, const std::function<bool(std::size_t)>& keep) {
    std::vector<bool> mask(cc.fan().size());
    for (std::size_t id = 0; id < mask.size(); ++id)
        mask[id] = keep(id);
    return chain_complex(cc, mask);
}

HomologyResult reduced_homology(const ChainComplex& c, const Coefficients& coefficients) {
    const std::size_t levels = c.cells.size(); // degrees -1 .. n-1
    // ranks[k] = rank of the boundary leaving level k (k >= 1); 0 otherwise.
    std::vector<std::size_t> ranks(levels + 1, 0);
    std::vector<std::vector<Integer>> factors(levels + 1);
    for (std::size_t k = 1; k < levels; ++k) {
        const IntegerMatrix& b = c.boundaries[k];
        if (b.rows() == 0 || b.cols() == 0)
            continue;
        SNFResult snf = smith_normal_form(b);
        ranks[k] = coefficients.is_rational() ? snf.rank() : rank_mod_p(snf, coefficients.characteristic);
        factors[k] = snf.invariant_factors();
    }
    HomologyResult h;
    h.betti.resize(levels);
    h.torsion.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        h.betti[k] = c.cells[k].size() - ranks[k] - ranks[k + 1];
        for (const auto& f : factors[k + 1])
            if (f > 1)
                h.torsion[k].push_back(f);
    }
    return h;
}

Integer euler_characteristic(const ChainComplex& c) {
    Integer chi = 0;
    const std::size_t n = c.ambient_dim;
    for (std::size_t k = 0; k < c.cells.size(); ++k) {
        // level k holds cones of dimension k, codimension n - k
        if ((n - k) % 2 == 0)
            chi += c.cells[k].size();
        else
            chi -= c.cells[k].size();
    }
    return chi;
}

Integer reduced_euler_characteristic(const ChainComplex& c) {
    Integer chi = 0;
    for (std::size_t k = 0; k < c.cells.size(); ++k) {
        // level k is chain degree k - 1
        if (k % 2 == 1)
            chi += c.cells[k].size();
        else
            chi -= c.cells[k].size();
    }
    return chi;
}

} // namespace toric
