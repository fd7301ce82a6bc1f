#include "toric/cone.hpp"

#include "toric/errors.hpp"
#include "toric/matrix.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

void check_length(const LatticeVector& v, std::size_t n) {
    if (v.size() != n)
        throw InvalidArgument("vector " + to_string(v) + " does not have length " + std::to_string(n));
}

std::vector<LatticeVector> with_negatives(const std::vector<LatticeVector>& vs) {
    std::vector<LatticeVector> out;
    out.reserve(2 * vs.size());
    for (const auto& v : vs) {
        out.push_back(v);
        out.push_back(negate(v));
    }
    return out;
}

} // namespace

ConeGenerators double_description(const std::vector<LatticeVector>& inequalities,
                                  std::size_t ambient_dim) {
    const std::size_t n = ambient_dim;
    ConeGenerators g;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        g.lineality.push_back(std::move(e));
    }
    std::vector<LatticeVector> processed;

    for (const auto& a : inequalities) {
        check_length(a, n);
        if (is_zero(a))
            continue;

        auto pivot = std::find_if(g.lineality.begin(), g.lineality.end(),
                                  [&](const LatticeVector& l) { return dot(a, l) != 0; });
        if (pivot != g.lineality.end()) {
            // The inequality cuts the lineality space: one lineality direction
            // turns into a ray, everything else is projected into a^perp.
            LatticeVector l0 = *pivot;
            Integer s0 = dot(a, l0);
            if (s0 < 0) {
                l0 = negate(l0);
                s0 = -s0;
            }
            std::vector<LatticeVector> lineality;
            for (auto it = g.lineality.begin(); it != g.lineality.end(); ++it) {
                if (it == pivot)
                    continue;
                Integer t = dot(a, *it);
                lineality.push_back(primitive_vector(subtract(scale(s0, *it), scale(t, l0))));
            }
            std::vector<LatticeVector> rays;
            for (const auto& r : g.rays) {
                Integer t = dot(a, r);
                rays.push_back(primitive_vector(subtract(scale(s0, r), scale(t, l0))));
            }
            rays.push_back(primitive_vector(l0));
            g.lineality = std::move(lineality);
            g.rays = std::move(rays);
        } else {
            std::vector<LatticeVector> positive, negative, rays;
            for (const auto& r : g.rays) {
                int s = sign(dot(a, r));
                if (s > 0)
                    positive.push_back(r);
                else if (s < 0)
                    negative.push_back(r);
                if (s >= 0)
                    rays.push_back(r);
            }
            const std::size_t pointed_dim = n - g.lineality.size();
            for (const auto& p : positive)
                for (const auto& q : negative) {
                    std::vector<LatticeVector> tight;
                    for (const auto& b : processed)
                        if (dot(b, p) == 0 && dot(b, q) == 0)
                            tight.push_back(b);
                    // p and q are adjacent iff they span a 2-face.
                    if (pointed_dim < 2 || rank(tight, n) != pointed_dim - 2)
                        continue;
                    rays.push_back(primitive_vector(subtract(scale(dot(a, p), q), scale(dot(a, q), p))));
                }
            g.rays = std::move(rays);
        }
        processed.push_back(a);
    }
    return g;
}

bool Cone::contains(const LatticeVector& x) const {
    for (const auto& u : inequalities)
        if (dot(u, x) < 0)
            return false;
    return true;
}

Cone cone_from_rays(std::size_t ambient_dim, const std::vector<LatticeVector>& generators) {
    const std::size_t n = ambient_dim;
    std::vector<LatticeVector> gens;
    for (const auto& v : generators) {
        check_length(v, n);
        if (is_zero(v))
            continue;
        LatticeVector p = primitive_vector(v);
        if (std::find(gens.begin(), gens.end(), p) == gens.end())
            gens.push_back(std::move(p));
    }

    Cone c;
    c.ambient_dim = n;
    c.dim = rank(gens, n);

    ConeGenerators dual = double_description(gens, n);
    c.inequalities = dual.rays;
    for (auto& e : with_negatives(dual.lineality))
        c.inequalities.push_back(std::move(e));

    ConeGenerators primal = double_description(c.inequalities, n);
    c.pointed = primal.lineality.empty();
    if (c.pointed) {
        for (const auto& g : gens) {
            std::vector<LatticeVector> tight;
            for (const auto& u : c.inequalities)
                if (dot(u, g) == 0)
                    tight.push_back(u);
            if (rank(tight, n) + 1 == n)
                c.rays.push_back(g);
        }
    } else {
        c.rays = primal.rays;
        for (auto& e : with_negatives(primal.lineality))
            c.rays.push_back(std::move(e));
    }
    return c;
}

Cone dual_cone(const Cone& c) {
    ConeGenerators g = double_description(c.rays, c.ambient_dim);
    std::vector<LatticeVector> gens = g.rays;
    for (auto& e : with_negatives(g.lineality))
        gens.push_back(std::move(e));
    return cone_from_rays(c.ambient_dim, gens);
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.ambient_dim != b.ambient_dim)
        return false;
    for (const auto& r : a.rays)
        if (!b.contains(r))
            return false;
    for (const auto& r : b.rays)
        if (!a.contains(r))
            return false;
    return true;
}

FaceLattice face_lattice(const Cone& c) {
    if (!c.pointed)
        throw NotPointed("face lattice requested for a cone containing a line");
    const std::size_t n = c.ambient_dim;
    const std::size_t m = c.rays.size();

    std::vector<std::vector<std::size_t>> tight_sets;
    for (const auto& u : c.inequalities) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < m; ++i)
            if (dot(u, c.rays[i]) == 0)
                t.push_back(i);
        tight_sets.push_back(std::move(t));
    }

    auto face_dim = [&](const std::vector<std::size_t>& idx) {
        std::vector<LatticeVector> rows;
        for (auto i : idx)
            rows.push_back(c.rays[i]);
        return rank(rows, n);
    };

    std::map<std::vector<std::size_t>, std::size_t> dims;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> facet_pairs;
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i)
        all[i] = i;
    dims[all] = c.dim;
    std::vector<std::vector<std::size_t>> queue{all};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto face = queue[head];
        const std::size_t d = dims[face];
        if (d == 0)
            continue;
        std::vector<std::vector<std::size_t>> facets;
        for (const auto& t : tight_sets) {
            std::vector<std::size_t> sub;
            std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
            if (sub.size() == face.size())
                continue;
            if (std::find(facets.begin(), facets.end(), sub) != facets.end())
                continue;
            if (face_dim(sub) + 1 != d)
                continue;
            facets.push_back(sub);
        }
        for (auto& f : facets) {
            facet_pairs.emplace_back(f, face);
            if (dims.emplace(f, d - 1).second)
                queue.push_back(f);
        }
    }

    std::vector<std::vector<std::size_t>> order;
    for (const auto& [idx, d] : dims)
        order.push_back(idx);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return std::pair(dims[a], a) < std::pair(dims[b], b);
    });
    std::map<std::vector<std::size_t>, std::size_t> position;
    FaceLattice lattice;
    for (const auto& idx : order) {
        position[idx] = lattice.faces.size();
        std::vector<LatticeVector> gens;
        for (auto i : idx)
            gens.push_back(c.rays[i]);
        lattice.faces.push_back(ConeFace{cone_from_rays(n, gens), idx, dims[idx]});
    }
    for (const auto& [facet, face] : facet_pairs)
        lattice.facet_relation.emplace_back(position[facet], position[face]);
    std::sort(lattice.facet_relation.begin(), lattice.facet_relation.end());
    return lattice;
}

} // namespace toric
