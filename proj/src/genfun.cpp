#include "toric/genfun.hpp"

#include "toric/errors.hpp"
#include "toric/matrix.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

std::vector<LatticeVector> pick(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> out;
    for (auto i : idx)
        out.push_back(rays[i]);
    return out;
}

/// Pulling triangulation of cone(rays[idx]) (of dimension d): cone over the
/// first ray joined with the triangulations of the facets missing it.
void pull(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx, std::size_t d,
          std::size_t ambient, std::vector<std::vector<std::size_t>>& out) {
    if (idx.size() == d) {
        out.push_back(idx);
        return;
    }
    const std::size_t apex = idx.front();
    Cone c = cone_from_rays(ambient, pick(rays, idx));
    std::set<std::vector<std::size_t>> seen;
    for (const auto& u : c.inequalities) {
        std::vector<std::size_t> facet;
        for (auto i : idx)
            if (dot(u, rays[i]) == 0)
                facet.push_back(i);
        if (facet.size() == idx.size() || std::count(facet.begin(), facet.end(), apex))
            continue;
        if (!seen.insert(facet).second || rank(pick(rays, facet), ambient) + 1 != d)
            continue;
        std::vector<std::vector<std::size_t>> sub;
        pull(rays, facet, d - 1, ambient, sub);
        for (auto& s : sub) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        std::vector<int> p;
        for (int k = 2; p.size() < 200; ++k)
            if (std::none_of(p.begin(), p.end(), [k](int q) { return k % q == 0; }))
                p.push_back(k);
        return p;
    }();
    return primes;
}

} // namespace

std::vector<HalfOpenSimplicialCone> triangulate_halfopen(const Cone& c) {
    if (!c.pointed)
        throw NotPointed("cannot triangulate a cone containing a line");
    if (!c.full_dimensional())
        throw NotFullDimensional("triangulation needs a full-dimensional cone");
    const std::size_t n = c.ambient_dim;

    std::vector<std::size_t> all(c.rays.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    std::vector<std::vector<std::size_t>> simplices;
    pull(c.rays, all, n, n, simplices);

    std::vector<HalfOpenSimplicialCone> pieces;
    std::vector<std::vector<LatticeVector>> normals;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        HalfOpenSimplicialCone piece{pick(c.rays, s), s, std::vector<bool>(n, true)};
        IntegerMatrix g = IntegerMatrix::from_columns(piece.generators, n);
        IntegerMatrix adj = adjugate(g);
        // Row i of sign(det) * adj(G) pairs to |det| with g_i and to 0 with the rest.
        const int s_det = sign(determinant(g));
        std::vector<LatticeVector> inner;
        for (std::size_t i = 0; i < n; ++i)
            inner.push_back(scale(s_det, adj.row(i)));
        normals.push_back(std::move(inner));
        pieces.push_back(std::move(piece));
    }

    // Reference point: prime-weighted sum of the rays, reweighted until it
    // avoids every facet hyperplane.
    const auto& primes = small_primes();
    for (std::size_t attempt = 0;; ++attempt) {
        LatticeVector q(n);
        for (std::size_t j = 0; j < c.rays.size(); ++j)
            q = add(q, scale(primes[(j + attempt * c.rays.size()) % primes.size()] + Integer(attempt), c.rays[j]));
        bool generic = true;
        for (const auto& piece_normals : normals)
            for (const auto& u : piece_normals)
                generic = generic && dot(u, q) != 0;
        if (!generic) {
            if (attempt > 1000)
                throw InternalInvariantViolation("no generic reference point found");
            continue;
        }
        for (std::size_t k = 0; k < pieces.size(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                pieces[k].closed[i] = dot(normals[k][i], q) > 0;
        return pieces;
    }
}

std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& generators,
                                                 const std::vector<bool>& closed) {
    const std::size_t n = generators.size();
    if (closed.size() != n)
        throw InvalidArgument("one facet flag per generator required");
    for (const auto& g : generators)
        if (g.size() != n)
            throw DependentGenerators("need n generators in dimension n");
    IntegerMatrix g = IntegerMatrix::from_columns(generators, n);
    Integer det = determinant(g);
    if (det == 0)
        throw DependentGenerators("generators are linearly dependent");
    IntegerMatrix adj = adjugate(g);
    if (det < 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                adj(i, j) = -adj(i, j);
    const Integer abs_det = abs(det);

    // Z^n / G Z^n is generated by U^{-1} e_i with orders d_i.
    SNFResult snf = smith_normal_form(g);
    IntegerMatrix u_inv = adjugate(snf.U);
    if (determinant(snf.U) < 0)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                u_inv(i, j) = -u_inv(i, j);
    std::vector<Integer> orders(n);
    for (std::size_t i = 0; i < n; ++i)
        orders[i] = snf.D(i, i);

    std::vector<LatticeVector> points;
    LatticeVector k(n);
    for (;;) {
        LatticeVector y = u_inv * k;
        // Coordinates l = adj y / |det|, reduced into the half-open unit cube.
        LatticeVector lambda = adj * y;
        LatticeVector p(n);
        for (std::size_t i = 0; i < n; ++i) {
            Integer r = lambda[i] - floor_div(lambda[i], abs_det) * abs_det;
            if (!closed[i] && r == 0)
                r = abs_det;
            p = add(p, scale(r, generators[i]));
        }
        for (auto& x : p)
            x /= abs_det;
        points.push_back(std::move(p));

        std::size_t i = n;
        while (i > 0 && k[i - 1] + 1 == orders[i - 1]) {
            k[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
        ++k[i - 1];
    }
    std::sort(points.begin(), points.end());
    return points;
}

RationalGF cone_genfun(const LatticeVector& shift, const Cone& c) {
    if (shift.size() != c.ambient_dim)
        throw InvalidArgument("shift has the wrong dimension");
    const std::size_t n = c.ambient_dim;
    auto pieces = triangulate_halfopen(c);

    std::vector<bool> used(c.rays.size(), false);
    for (const auto& piece : pieces)
        for (auto i : piece.ray_indices)
            used[i] = true;
    RationalGF f{LaurentPolynomial(n), {}};
    for (std::size_t i = 0; i < c.rays.size(); ++i)
        if (used[i])
            f.denominator.push_back(c.rays[i]);

    for (const auto& piece : pieces) {
        std::vector<LaurentPolynomial::Term> terms;
        for (auto& p : parallelepiped_points(piece.generators, piece.closed))
            terms.emplace_back(add(p, shift), 1);
        LaurentPolynomial num = LaurentPolynomial::from_terms(n, std::move(terms));
        std::vector<LatticeVector> missing;
        for (std::size_t i = 0; i < c.rays.size(); ++i)
            if (used[i] && !std::binary_search(piece.ray_indices.begin(), piece.ray_indices.end(), i))
                missing.push_back(c.rays[i]);
        f.numerator += multiply_binomials(std::move(num), missing);
    }
    return f;
}

SeriesBox truncated_series(const LatticeVector& shift, const Cone& c, const Box& box) {
    SeriesBox s{box, {}};
    box.for_each_point([&](const LatticeVector& p) {
        if (c.contains(subtract(p, shift)))
            s.coefficients.emplace(p, 1);
    });
    return s;
}

SeriesBox expand_series(const RationalGF& f, const Box& box) {
    const std::size_t n = box.dim();
    SeriesBox s{box, {}};
    if (box.empty())
        return s;

    LatticeVector ell(n);
    if (!f.denominator.empty()) {
        Cone span = cone_from_rays(n, f.denominator);
        if (!span.pointed)
            throw NotPointed("denominator directions do not lie in a pointed cone");
        for (const auto& u : span.inequalities)
            ell = add(ell, u);
        for (const auto& g : f.denominator)
            if (dot(ell, g) <= 0)
                throw InternalInvariantViolation("no positive grading for the denominator");
    }
    Integer budget = 0;
    for (std::size_t i = 0; i < n; ++i)
        budget += std::max(ell[i] * box.lo[i], ell[i] * box.hi[i]);

    auto within = [&](const LaurentPolynomial& p) {
        std::vector<LaurentPolynomial::Term> keep;
        for (const auto& t : p.terms())
            if (dot(ell, t.first) <= budget)
                keep.push_back(t);
        return LaurentPolynomial::from_terms(n, std::move(keep));
    };

    LaurentPolynomial acc = within(f.numerator);
    for (const auto& g : f.denominator) {
        LaurentPolynomial power = acc;
        LaurentPolynomial total = acc;
        for (;;) {
            power = within(power.shifted(g));
            if (power.is_zero())
                break;
            total += power;
        }
        acc = std::move(total);
    }
    for (const auto& [e, c] : acc.terms())
        if (box.contains(e))
            s.coefficients.emplace(e, c);
    return s;
}

} // namespace toric
