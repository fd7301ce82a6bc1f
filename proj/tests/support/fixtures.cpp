#include "fixtures.hpp"

#include "toric/errors.hpp"
#include "toric/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace toric::testing {

LatticeVector vec(std::initializer_list<std::int64_t> xs) { return make_vector(xs); }

std::vector<Integer> ints(std::initializer_list<std::int64_t> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

std::shared_ptr<const Fan> share(Fan f) { return std::make_shared<const Fan>(std::move(f)); }

std::shared_ptr<const Fan> kite_fan() {
    static auto fan =
        share(build_fan(2, {vec({1, 1}), vec({0, 1}), vec({-1, 1}), vec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    return fan;
}

SupportFunction kite_support() { return support_from_ray_values(kite_fan(), ints({0, -2, 0, -2})); }

std::shared_ptr<const Fan> plane_fan() {
    return share(build_fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}}));
}

NormalFan octahedron_normal_fan() {
    return normal_fan_of_polytope(LatticePolytope(
        3, {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})}));
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

/// 0 for directions in the upper half plane (including the positive x-axis).
int half(const LatticeVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1; }

Integer cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

} // namespace

std::shared_ptr<const Fan> random_fan_2d(Rng& rng) {
    for (;;) {
        const int k = uniform(rng, 3, 7);
        std::vector<LatticeVector> rays;
        while (static_cast<int>(rays.size()) < k) {
            LatticeVector v = vec({uniform(rng, -3, 3), uniform(rng, -3, 3)});
            if (is_zero(v))
                continue;
            v = primitive_vector(v);
            if (std::find(rays.begin(), rays.end(), v) == rays.end())
                rays.push_back(v);
        }
        std::sort(rays.begin(), rays.end(), [](const LatticeVector& a, const LatticeVector& b) {
            if (half(a) != half(b))
                return half(a) < half(b);
            return cross(a, b) > 0;
        });
        bool ok = true;
        std::vector<std::vector<std::size_t>> cones;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            std::size_t j = (i + 1) % rays.size();
            ok = ok && cross(rays[i], rays[j]) > 0;
            cones.push_back({i, j});
        }
        if (ok)
            return share(build_fan(2, rays, cones));
    }
}

std::shared_ptr<const Fan> random_fan_3d(Rng& rng) {
    std::vector<LatticeVector> cube;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            for (int z = -1; z <= 1; ++z)
                if (x || y || z)
                    cube.push_back(vec({x, y, z}));
    for (;;) {
        std::shuffle(cube.begin(), cube.end(), rng);
        std::vector<LatticeVector> pts(cube.begin(), cube.begin() + uniform(rng, 4, 8));
        try {
            LatticePolytope p(3, pts);
            bool interior = std::all_of(p.facets().begin(), p.facets().end(),
                                        [](const auto& f) { return f.offset < 0; });
            if (!interior)
                continue;
            std::vector<std::vector<std::size_t>> cones;
            for (const auto& f : p.facets())
                cones.push_back(f.vertex_ids);
            return share(build_fan(3, p.vertices(), cones));
        } catch (const DegeneratePolytope&) {
        }
    }
}

Integer gauge_scale(const Fan& fan) {
    const std::size_t n = fan.ambient_dim();
    Integer scale = 1;
    for (auto id : fan.maximal_ids()) {
        std::vector<LatticeVector> basis;
        for (auto r : fan.cone(id).ray_ids) {
            basis.push_back(fan.rays()[r]);
            if (rank(basis, n) < basis.size())
                basis.pop_back();
        }
        IntegerMatrix a = IntegerMatrix::from_rows(basis, n);
        Integer det = abs(determinant(a));
        LatticeVector w = adjugate(a) * LatticeVector(n, 1);
        Integer den = det / gcd(content(w), det);
        scale = lcm(scale, den);
    }
    return scale;
}

namespace {

/// Walks around a complete 2-d fan, changing the linear part across each ray
/// by a multiple of the ray's normal. Only the last cone can fail to be
/// integral.
std::optional<SupportFunction> walk_support(const std::shared_ptr<const Fan>& fan, Rng& rng) {
    const auto& rays = fan->rays();
    std::vector<std::size_t> order(rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (half(rays[a]) != half(rays[b]))
            return half(rays[a]) < half(rays[b]);
        return cross(rays[a], rays[b]) > 0;
    });
    LatticeVector h = vec({uniform(rng, -2, 2), uniform(rng, -2, 2)});
    std::vector<Integer> values(rays.size());
    values[order[0]] = dot(h, rays[order[0]]);
    values[order[1]] = dot(h, rays[order[1]]);
    for (std::size_t j = 1; j + 1 < order.size(); ++j) {
        const LatticeVector& r = rays[order[j]];
        h = add(h, scale(uniform(rng, -2, 2), LatticeVector{-r[1], r[0]}));
        values[order[j + 1]] = dot(h, rays[order[j + 1]]);
    }
    try {
        return support_from_ray_values(fan, values);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

} // namespace

SupportFunction random_support(const std::shared_ptr<const Fan>& fan, Rng& rng) {
    const std::size_t n = fan->ambient_dim();
    for (int attempt = 0; attempt < 80; ++attempt) {
        if (n == 2 && attempt % 2 == 1) {
            if (auto h = walk_support(fan, rng))
                return *h;
            continue;
        }
        std::vector<Integer> values;
        for (std::size_t i = 0; i < fan->rays().size(); ++i)
            values.push_back(uniform(rng, -2, 2));
        try {
            return support_from_ray_values(fan, values);
        } catch (const DomainError&) {
        }
    }
    LatticeVector a(n);
    for (auto& x : a)
        x = uniform(rng, -2, 2);
    const Integer c = uniform(rng, -2, 2) * gauge_scale(*fan);
    std::vector<Integer> values;
    for (const auto& r : fan->rays())
        values.push_back(dot(a, r) + c);
    return support_from_ray_values(fan, values);
}

std::vector<LatticeVector> scan(const LatticeVector& lo, const LatticeVector& hi,
                                const std::function<bool(const LatticeVector&)>& keep) {
    std::vector<LatticeVector> out;
    LatticeVector p = lo;
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i])
            return out;
    for (;;) {
        if (keep(p))
            out.push_back(p);
        std::size_t i = n;
        while (i > 0 && p[i - 1] == hi[i - 1]) {
            p[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0)
            return out;
        ++p[i - 1];
    }
}

Integer oracle_signed_count(const Fan& fan, const std::vector<Integer>& values, const LatticeVector& b) {
    Integer total = 0;
    for (const auto& c : fan.cones()) {
        bool in = true;
        for (auto r : c.ray_ids)
            in = in && dot(b, fan.rays()[r]) >= -values[r];
        if (in)
            total += (fan.ambient_dim() - c.dim()) % 2 == 0 ? 1 : -1;
    }
    return total;
}

} // namespace toric::testing
