#include "toric/cellular.hpp"
#include "toric/fan.hpp"

namespace toric {

CompletenessReport check_complete(const Fan& f) {
    const std::size_t n = f.ambient_dim();
    if (f.maximal_ids().empty())
        return {false, "no " + std::to_string(n) + "-dimensional cone"};

    for (std::size_t id = 0; id < f.size(); ++id) {
        const auto& c = f.cone(id);
        if (c.dim() + 1 != n)
            continue;
        std::size_t count = 0;
        for (auto up : f.cofacets_of(id))
            if (f.cone(up).dim() == n)
                ++count;
        if (count != 2) {
            std::string rays;
            for (auto r : c.ray_ids)
                rays += (rays.empty() ? "" : ",") + std::to_string(r);
            return {false, "ridge on rays {" + rays + "} lies in " + std::to_string(count) +
                               " maximal cones"};
        }
    }

    // Non-owning alias: the cell complex only lives inside this call.
    std::shared_ptr<const Fan> alias(std::shared_ptr<const Fan>(), &f);
    CellComplex cc(alias);
    ChainComplex full = chain_complex(cc, std::vector<bool>(f.size(), true));
    HomologyResult h = reduced_homology(full);
    for (int d = -1; d <= static_cast<int>(n) - 1; ++d) {
        std::size_t expected = d == static_cast<int>(n) - 1 ? 1 : 0;
        if (h.betti_at(d) != expected || !h.torsion.at(static_cast<std::size_t>(d + 1)).empty())
            return {false, "reduced H_" + std::to_string(d) + " has rank " + std::to_string(h.betti_at(d)) +
                               ", expected " + std::to_string(expected)};
    }
    return {true, ""};
}

} // namespace toric
