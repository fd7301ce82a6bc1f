#include "toric/fan.hpp"

#include "toric/box.hpp"
#include "toric/errors.hpp"
#include "toric/matrix.hpp"

#include <algorithm>
#include <set>

namespace toric {

std::optional<std::size_t> Fan::find(const std::vector<std::size_t>& sorted_ray_ids) const {
    auto it = index_.find(sorted_ray_ids);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Fan::ray_cone_id(std::size_t ray) const {
    return index_.at({ray});
}

std::vector<std::size_t> Fan::f_vector() const {
    std::vector<std::size_t> f(ambient_dim_ + 1, 0);
    for (const auto& c : cones_)
        ++f[c.dim()];
    return f;
}

namespace {

std::string ids_to_string(const std::vector<std::size_t>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

} // namespace

Fan build_fan(std::size_t ambient_dim, const std::vector<LatticeVector>& rays,
              const std::vector<std::vector<std::size_t>>& maximal_cones) {
    const std::size_t n = ambient_dim;
    Fan fan;
    fan.ambient_dim_ = n;
    for (const auto& r : rays) {
        if (r.size() != n)
            throw InvalidArgument("ray " + to_string(r) + " has the wrong dimension");
        if (is_zero(r))
            throw FanAxiomViolation("zero vector given as a ray");
        LatticeVector p = primitive_vector(r);
        if (std::find(fan.rays_.begin(), fan.rays_.end(), p) != fan.rays_.end())
            throw FanAxiomViolation("ray " + to_string(r) + " is listed twice");
        fan.rays_.push_back(std::move(p));
    }

    struct Generating {
        std::vector<std::size_t> ids;
        Cone cone;
        std::set<std::vector<std::size_t>> faces;
    };
    std::vector<Generating> generating;
    std::map<std::vector<std::size_t>, Cone> all_cones;
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> relation;

    for (const auto& listed : maximal_cones) {
        std::vector<std::size_t> ids = listed;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<LatticeVector> gens;
        for (auto i : ids) {
            if (i >= fan.rays_.size())
                throw InvalidArgument("ray index " + std::to_string(i) + " out of range");
            gens.push_back(fan.rays_[i]);
        }
        Cone c = cone_from_rays(n, gens);
        if (!c.pointed)
            throw NonPointedCone("cone on rays " + ids_to_string(ids) + " contains a line");
        if (c.rays.size() != ids.size())
            throw FanAxiomViolation("cone on rays " + ids_to_string(ids) +
                                    " has a listed ray that is not extreme");
        FaceLattice lattice = face_lattice(c);
        Generating g{ids, c, {}};
        std::vector<std::vector<std::size_t>> global;
        for (const auto& face : lattice.faces) {
            std::vector<std::size_t> gid;
            for (auto local : face.ray_indices)
                gid.push_back(ids[local]);
            std::sort(gid.begin(), gid.end());
            g.faces.insert(gid);
            all_cones.emplace(gid, face.cone);
            global.push_back(std::move(gid));
        }
        for (const auto& [facet, face] : lattice.facet_relation)
            relation.emplace(global[facet], global[face]);
        generating.push_back(std::move(g));
    }
    if (all_cones.empty())
        all_cones.emplace(std::vector<std::size_t>{}, cone_from_rays(n, {}));

    for (std::size_t a = 0; a < generating.size(); ++a)
        for (std::size_t b = a + 1; b < generating.size(); ++b) {
            const auto& ga = generating[a];
            const auto& gb = generating[b];
            std::vector<std::size_t> common;
            std::set_intersection(ga.ids.begin(), ga.ids.end(), gb.ids.begin(), gb.ids.end(),
                                  std::back_inserter(common));
            const std::string pair = ids_to_string(ga.ids) + " and " + ids_to_string(gb.ids);
            if (!ga.faces.count(common) || !gb.faces.count(common))
                throw FanAxiomViolation("cones " + pair + " share rays that do not span a common face");
            std::vector<LatticeVector> ineqs = ga.cone.inequalities;
            ineqs.insert(ineqs.end(), gb.cone.inequalities.begin(), gb.cone.inequalities.end());
            ConeGenerators meet = double_description(ineqs, n);
            const Cone& face = all_cones.at(common);
            for (const auto& r : meet.rays)
                if (!face.contains(r))
                    throw FanAxiomViolation("cones " + pair + " intersect in a non-face");
        }

    std::vector<bool> used(fan.rays_.size(), false);
    for (const auto& [ids, c] : all_cones)
        for (auto i : ids)
            used[i] = true;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw FanAxiomViolation("ray " + std::to_string(i) + " lies in no cone");

    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> order;
    for (const auto& [ids, c] : all_cones)
        order.emplace_back(c.dim, ids);
    std::sort(order.begin(), order.end());
    for (const auto& [d, ids] : order) {
        fan.index_[ids] = fan.cones_.size();
        fan.cones_.push_back(FanCone{ids, all_cones.at(ids)});
        if (d == n)
            fan.maximal_ids_.push_back(fan.cones_.size() - 1);
    }
    fan.facets_.assign(fan.cones_.size(), {});
    fan.cofacets_.assign(fan.cones_.size(), {});
    for (const auto& [facet, face] : relation) {
        std::size_t f = fan.index_.at(facet);
        std::size_t c = fan.index_.at(face);
        fan.face_relation_.emplace_back(f, c);
    }
    std::sort(fan.face_relation_.begin(), fan.face_relation_.end());
    for (const auto& [f, c] : fan.face_relation_) {
        fan.facets_[c].push_back(f);
        fan.cofacets_[f].push_back(c);
    }
    return fan;
}

SupportFunction support_from_ray_values(std::shared_ptr<const Fan> fan, std::vector<Integer> values) {
    const Fan& f = *fan;
    if (values.size() != f.rays().size())
        throw InvalidArgument("expected " + std::to_string(f.rays().size()) + " ray values, got " +
                              std::to_string(values.size()));
    const std::size_t n = f.ambient_dim();
    SupportFunction h{fan, std::move(values), {}};
    h.h_sigma.reserve(f.size());
    for (const auto& c : f.cones()) {
        std::vector<LatticeVector> rows;
        LatticeVector rhs;
        for (auto r : c.ray_ids) {
            rows.push_back(f.rays()[r]);
            rhs.push_back(h.ray_values[r]);
        }
        IntegerMatrix a = IntegerMatrix::from_rows(rows, n);
        auto x = solve_integral(a, rhs);
        if (!x) {
            std::string where = "cone on rays " + ids_to_string(c.ray_ids);
            if (solvable_rational(a, rhs))
                throw NotIntegral(where + " needs a non-integral linear part");
            throw NotLinearOnCone(where + ": ray values are not restrictions of a linear function");
        }
        h.h_sigma.push_back(std::move(*x));
    }
    for (const auto& [tau, sigma] : f.face_relation())
        for (auto r : f.cone(tau).ray_ids)
            if (dot(subtract(h.h_sigma[sigma], h.h_sigma[tau]), f.rays()[r]) != 0)
                throw InternalInvariantViolation("linear parts disagree on a common face");
    return h;
}

SupportFunction negated(const SupportFunction& h) {
    SupportFunction g{h.fan, {}, {}};
    for (const auto& v : h.ray_values)
        g.ray_values.push_back(-v);
    for (const auto& m : h.h_sigma)
        g.h_sigma.push_back(negate(m));
    return g;
}

SupportFunction linear_support(std::shared_ptr<const Fan> fan, const LatticeVector& a) {
    std::vector<Integer> values;
    for (const auto& r : fan->rays())
        values.push_back(dot(a, r));
    return support_from_ray_values(std::move(fan), std::move(values));
}

SupportFunction point_support(std::shared_ptr<const Fan> fan, const LatticeVector& a) {
    return linear_support(std::move(fan), negate(a));
}

std::vector<LatticePolytope::Facet> hull_facets(std::size_t ambient_dim,
                                                const std::vector<LatticeVector>& points) {
    const std::size_t n = ambient_dim;
    std::vector<LatticePolytope::Facet> facets;
    if (points.size() < n || n == 0)
        return facets;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i)
        pick[i] = i;
    for (;;) {
        std::vector<LatticeVector> diffs;
        for (std::size_t i = 1; i < n; ++i)
            diffs.push_back(subtract(points[pick[i]], points[pick[0]]));
        auto kernel = integer_kernel(IntegerMatrix::from_rows(diffs, n));
        if (kernel.size() == 1) {
            LatticeVector u = primitive_vector(kernel.front());
            Integer c = dot(u, points[pick[0]]);
            bool above = true, below = true;
            for (const auto& p : points) {
                Integer v = dot(u, p);
                above = above && v >= c;
                below = below && v <= c;
            }
            if (below && !above) {
                u = negate(u);
                c = -c;
                above = true;
                below = false;
            }
            if (above && !below &&
                std::none_of(facets.begin(), facets.end(), [&](const auto& f) { return f.normal == u; })) {
                LatticePolytope::Facet facet{u, c, {}};
                for (std::size_t i = 0; i < points.size(); ++i)
                    if (dot(u, points[i]) == c)
                        facet.vertex_ids.push_back(i);
                facets.push_back(std::move(facet));
            }
        }
        // Next n-subset in lexicographic order.
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == points.size() - n + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return facets;
}

LatticePolytope::LatticePolytope(std::size_t ambient_dim, const std::vector<LatticeVector>& points)
    : ambient_dim_(ambient_dim) {
    std::vector<LatticeVector> pts;
    for (const auto& p : points) {
        if (p.size() != ambient_dim)
            throw InvalidArgument("polytope point " + to_string(p) + " has the wrong dimension");
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(p);
    }
    std::vector<LatticeVector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(subtract(pts[i], pts[0]));
    if (ambient_dim == 0 || pts.size() < ambient_dim + 1 || rank(diffs, ambient_dim) != ambient_dim)
        throw DegeneratePolytope("points do not span a full-dimensional polytope");

    auto facets = hull_facets(ambient_dim, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticeVector> tight;
        for (const auto& f : facets)
            if (std::count(f.vertex_ids.begin(), f.vertex_ids.end(), i))
                tight.push_back(f.normal);
        if (rank(tight, ambient_dim) == ambient_dim)
            vertices_.push_back(pts[i]);
    }
    facets_ = hull_facets(ambient_dim, vertices_);
}

bool LatticePolytope::contains(const LatticeVector& p) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return dot(f.normal, p) >= f.offset; });
}

bool LatticePolytope::contains_in_interior(const LatticeVector& p) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return dot(f.normal, p) > f.offset; });
}

std::vector<LatticeVector> LatticePolytope::lattice_points() const {
    std::vector<LatticeVector> out;
    bounding_box(vertices_)->for_each_point([&](const LatticeVector& p) {
        if (contains(p))
            out.push_back(p);
    });
    return out;
}

NormalFan normal_fan_of_polytope(const LatticePolytope& p) {
    const std::size_t n = p.ambient_dim();
    std::vector<LatticeVector> rays;
    std::vector<Integer> values;
    for (const auto& f : p.facets()) {
        rays.push_back(f.normal);
        values.push_back(-f.offset);
    }
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < p.facets().size(); ++i) {
            const auto& vid = p.facets()[i].vertex_ids;
            if (std::find(vid.begin(), vid.end(), v) != vid.end())
                ids.push_back(i);
        }
        maximal.push_back(std::move(ids));
    }
    auto fan = std::make_shared<const Fan>(build_fan(n, rays, maximal));
    NormalFan result{fan, support_from_ray_values(fan, std::move(values)), {}};
    for (std::size_t v = 0; v < maximal.size(); ++v) {
        auto id = fan->find(maximal[v]);
        if (!id || fan->cone(*id).dim() != n)
            throw InternalInvariantViolation("vertex cone of the normal fan is not maximal");
        if (result.support.h_sigma[*id] != negate(p.vertices()[v]))
            throw InternalInvariantViolation("linear part at a vertex cone is not minus the vertex");
        result.vertex_cone.push_back(*id);
    }
    return result;
}

} // namespace toric
