#include "fixtures.hpp"

#include "toric/brion.hpp"
#include "toric/errors.hpp"
#include "toric/genfun.hpp"
#include "toric/matrix.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace toric;
using namespace toric::testing;

namespace {

SupportFunction polytope_support(std::vector<LatticeVector> vertices) {
    const std::size_t n = vertices.front().size();
    return normal_fan_of_polytope(LatticePolytope(n, vertices)).support;
}

LatticePolytope unit_square() { return LatticePolytope(2, {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})}); }

LaurentPolynomial poly(std::initializer_list<std::pair<LatticeVector, std::int64_t>> terms) {
    std::vector<LaurentPolynomial::Term> t;
    std::size_t dim = 0;
    for (const auto& [e, c] : terms) {
        t.push_back({e, c});
        dim = e.size();
    }
    return LaurentPolynomial::from_terms(dim, t);
}

DegreeCohomology only(std::size_t n, std::size_t k) {
    DegreeCohomology d;
    d.dims.assign(n + 1, 0);
    d.dims[k] = 1;
    d.torsion.assign(n + 1, {});
    d.chi = k % 2 ? -1 : 1;
    return d;
}

/// dim H^k of a 2-d fan at b, from ray inequalities and component counting
/// on the graph they cut out of the circle.
std::vector<std::size_t> circle_graph_cohomology(const Fan& fan, const std::vector<Integer>& values,
                                                 const LatticeVector& b) {
    const std::size_t k = fan.rays().size();
    std::vector<bool> in(k);
    std::size_t vertices = 0;
    for (std::size_t r = 0; r < k; ++r) {
        in[r] = dot(b, fan.rays()[r]) >= -values[r];
        vertices += in[r];
    }
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    std::size_t edges = 0, components = vertices;
    for (auto id : fan.maximal_ids()) {
        auto r0 = fan.cone(id).ray_ids[0], r1 = fan.cone(id).ray_ids[1];
        if (!in[r0] || !in[r1])
            continue;
        ++edges;
        auto a = root(r0), c = root(r1);
        if (a != c) {
            parent[a] = c;
            --components;
        }
    }
    if (vertices == 0)
        return {0, 0, 1};
    // H^0 = reduced H_1, H^1 = reduced H_0.
    return {edges + components - vertices, components - 1, 0};
}

} // namespace

TEST(Membership, KiteExamples) {
    SupportFunction h = kite_support();
    auto fan = kite_fan();
    EXPECT_FALSE(membership(h, *fan->find({0, 1}), vec({0, -1})));
    EXPECT_TRUE(membership(h, 0, vec({100, -100})));
    EXPECT_TRUE(membership(h, fan->ray_cone_id(0), vec({0, 0})));
    EXPECT_FALSE(membership(h, fan->ray_cone_id(1), vec({0, 0})));
}

TEST(Subcomplex, KiteExamples) {
    SupportFunction h = kite_support();
    auto fan = kite_fan();
    EXPECT_TRUE(subcomplex_S(h, vec({0, -1})).empty());
    EXPECT_EQ(subcomplex_S(h, vec({0, 0})), (std::vector<std::size_t>{fan->ray_cone_id(0), fan->ray_cone_id(2)}));
}

TEST(Subcomplex, InteriorPointOfPolytopeGivesFullSphere) {
    SupportFunction h = polytope_support({vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({2, 2})});
    auto s = subcomplex_S(h, vec({1, 1}));
    EXPECT_EQ(s.size(), h.fan->size() - 1);
}

TEST(GradedCohomology, KiteExamples) {
    SupportFunction h = kite_support();
    EXPECT_EQ(graded_cohomology(h, vec({0, -1})), only(2, 2));
    for (auto b : {vec({0, 0}), vec({-1, 1}), vec({0, 1}), vec({1, 1})})
        EXPECT_EQ(graded_cohomology(h, b), only(2, 1)) << to_string(b);
    EXPECT_TRUE(graded_cohomology(h, vec({5, 5})).is_zero());
}

TEST(GradedCohomology, SquareAtOrigin) {
    SupportFunction h = normal_fan_of_polytope(unit_square()).support;
    EXPECT_EQ(graded_cohomology(h, vec({0, 0})), only(2, 0));
}

TEST(SignedCount, KiteExamples) {
    SupportFunction h = kite_support();
    EXPECT_EQ(signed_count(h, vec({0, -1})), 1);
    EXPECT_EQ(signed_count(h, vec({0, 0})), -1);
    // Only ray (1,1) and the cones on it that pass: a contractible arc.
    EXPECT_EQ(signed_count(h, vec({5, -3})), 0);
    EXPECT_TRUE(graded_cohomology(h, vec({5, -3})).is_zero());
}

TEST(DegreeRegion, Examples) {
    Box kite = degree_region(kite_support()).box;
    for (auto b : {vec({0, -1}), vec({0, 0}), vec({-1, 1}), vec({0, 1}), vec({1, 1})})
        EXPECT_TRUE(kite.contains(b)) << to_string(b);

    DegreeRegion zero = degree_region(support_from_ray_values(kite_fan(), ints({0, 0, 0, 0})));
    EXPECT_EQ(zero.box, (Box{vec({0, 0}), vec({0, 0})}));
    EXPECT_EQ(zero.candidates, (std::vector<LatticeVector>{vec({0, 0})}));

    Box segment = degree_region(polytope_support({vec({0}), vec({2})})).box;
    for (int a = 0; a <= 2; ++a)
        EXPECT_TRUE(segment.contains(vec({a})));
    EXPECT_EQ(arrangement_box(polytope_support({vec({0}), vec({2})})), segment);
}

TEST(CohomologyTable, KiteHasFiveEntries) {
    CohomologyTable t = cohomology_table(kite_support());
    EXPECT_EQ(t.entries.size(), 5u);
    EXPECT_TRUE(t.shell_checked);
    EXPECT_EQ(t.at(vec({0, -1})), only(2, 2));
    EXPECT_EQ(t.total_dim(0), 0u);
    EXPECT_EQ(t.total_dim(1), 4u);
    EXPECT_EQ(t.total_dim(2), 1u);
}

TEST(CohomologyTable, SquareIsAllDegreeZero) {
    CohomologyTable t = cohomology_table(normal_fan_of_polytope(unit_square()).support);
    ASSERT_EQ(t.entries.size(), 4u);
    for (auto b : {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})})
        EXPECT_EQ(t.at(b), only(2, 0));
}

TEST(CohomologyTable, NegatedDoubleSquareIsTopDegreeAtInteriorPoint) {
    SupportFunction h = negated(polytope_support({vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({2, 2})}));
    CohomologyTable t = cohomology_table(h);
    ASSERT_EQ(t.entries.size(), 1u);
    EXPECT_EQ(t.entries.begin()->first, vec({-1, -1}));
    EXPECT_EQ(t.entries.begin()->second, only(2, 2));
}

TEST(CohomologyTable, BoxOverrideStillChecksShell) {
    TableOptions small;
    small.box = Box{vec({0, 0}), vec({0, 0})};
    EXPECT_THROW(cohomology_table(kite_support(), small), ShellCheckFailed);
    TableOptions large;
    large.box = Box{vec({-4, -4}), vec({4, 4})};
    CohomologyTable t = cohomology_table(kite_support(), large);
    EXPECT_EQ(t.entries, cohomology_table(kite_support()).entries);
}

TEST(ChiPolynomial, Examples) {
    EXPECT_EQ(chi_polynomial(kite_support()),
              poly({{vec({0, 0}), -1}, {vec({-1, 1}), -1}, {vec({0, 1}), -1}, {vec({1, 1}), -1}, {vec({0, -1}), 1}}));
    EXPECT_EQ(chi_polynomial(normal_fan_of_polytope(unit_square()).support),
              poly({{vec({0, 0}), 1}, {vec({1, 0}), 1}, {vec({0, 1}), 1}, {vec({1, 1}), 1}}));
    EXPECT_EQ(chi_polynomial(point_support(kite_fan(), vec({2, -3}))), poly({{vec({2, -3}), 1}}));
    EXPECT_EQ(chi_polynomial(linear_support(kite_fan(), vec({2, -3}))), poly({{vec({-2, 3}), 1}}));
}

TEST(BrionSum, KiteTerms) {
    auto terms = brion_terms(kite_support());
    ASSERT_EQ(terms.size(), 4u);
    auto one = LaurentPolynomial::constant(2, 1);
    EXPECT_TRUE(rational_equal(terms[0], {one.shifted(vec({-2, 2})), {vec({-1, 1}), vec({1, 0})}}));
    EXPECT_TRUE(rational_equal(brion_sum(kite_support()), RationalGF::polynomial(chi_polynomial(kite_support()))));
}

TEST(BrionSum, SegmentTerms) {
    SupportFunction h = polytope_support({vec({0}), vec({2})});
    auto terms = brion_terms(h);
    ASSERT_EQ(terms.size(), 2u);
    auto one = LaurentPolynomial::constant(1, 1);
    RationalGF at2{one.shifted(vec({2})), {vec({-1})}};
    RationalGF at0{one, {vec({1})}};
    EXPECT_TRUE((rational_equal(terms[0], at0) && rational_equal(terms[1], at2)) ||
                (rational_equal(terms[0], at2) && rational_equal(terms[1], at0)));
    EXPECT_TRUE(rational_equal(brion_sum(h), RationalGF::polynomial(one + one.shifted(vec({1})) + one.shifted(vec({2})))));
}

TEST(BrionSum, ZeroSupportSumsToOne) {
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        SupportFunction h = support_from_ray_values(fan, std::vector<Integer>(fan->rays().size(), 0));
        EXPECT_TRUE(rational_equal(brion_sum(h), RationalGF::polynomial(LaurentPolynomial::constant(fan->ambient_dim(), 1))));
    }
}

TEST(VerifyIdentity, KiteAllChecksPass) {
    VerificationReport r = verify_identity(kite_support());
    EXPECT_TRUE(r.identity_holds);
    EXPECT_TRUE(r.all_checks_pass());
    std::vector<std::string> names;
    for (const auto& c : r.checks)
        names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{"top_cohomology", "h0_hn_exclusive", "reduced_euler_coefficient",
                                               "euler_characteristic", "boundary_squares_to_zero", "shell"}));
}

TEST(Properties, ChoiceOfLowerConeLinearPartsIsIrrelevant) {
    Rng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        const std::size_t n = fan->ambient_dim();
        SupportFunction h = random_support(fan, rng);
        SupportFunction moved = h;
        for (std::size_t id = 0; id < fan->size(); ++id) {
            if (fan->cone(id).dim() == n)
                continue;
            std::vector<LatticeVector> rays;
            for (auto r : fan->cone(id).ray_ids)
                rays.push_back(fan->rays()[r]);
            IntegerMatrix a = rays.empty() ? IntegerMatrix(0, n) : IntegerMatrix::from_rows(rays, n);
            std::vector<LatticeVector> kernel =
                rays.empty() ? std::vector<LatticeVector>{} : integer_kernel(a);
            if (rays.empty())
                for (std::size_t i = 0; i < n; ++i) {
                    LatticeVector e(n);
                    e[i] = 1;
                    kernel.push_back(e);
                }
            for (const auto& m : kernel)
                moved.h_sigma[id] = add(moved.h_sigma[id], scale(uniform(rng, -3, 3), m));
        }
        Box b = arrangement_box(h).expanded(2);
        b.for_each_point([&](const LatticeVector& p) {
            for (std::size_t id = 0; id < fan->size(); ++id)
                ASSERT_EQ(membership(h, id, p), membership(moved, id, p));
        });
    }
}

TEST(Properties, SignedCountIsEulerCharacteristicOfCohomology) {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        SupportFunction h = random_support(fan, rng);
        CohomologyEngine engine(h);
        arrangement_box(h).expanded(1).for_each_point([&](const LatticeVector& b) {
            const DegreeCohomology& d = engine.cohomology(b);
            Integer alt = 0;
            for (std::size_t k = 0; k < d.dims.size(); ++k)
                alt += (k % 2 ? -1 : 1) * static_cast<long>(d.dims[k]);
            ASSERT_EQ(alt, d.chi);
            ASSERT_EQ(engine.signed_count(b), d.chi);
            ASSERT_EQ(oracle_signed_count(*fan, h.ray_values, b), d.chi);
            const std::size_t n = fan->ambient_dim();
            if (d.dims[n] != 0)
                for (std::size_t k = 0; k < n; ++k)
                    ASSERT_EQ(d.dims[k], 0u);
        });
        EXPECT_TRUE(engine.boundaries_ok());
    }
}

TEST(Properties, TwoDimensionalCohomologyMatchesGraphCounting) {
    Rng rng(54);
    for (int trial = 0; trial < 40; ++trial) {
        auto fan = random_fan_2d(rng);
        SupportFunction h = random_support(fan, rng);
        arrangement_box(h).expanded(1).for_each_point([&](const LatticeVector& b) {
            ASSERT_EQ(graded_cohomology(h, b).dims, circle_graph_cohomology(*fan, h.ray_values, b)) << to_string(b);
        });
    }
}

TEST(Properties, ModPDimensionsAgreeWithoutTorsion) {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        SupportFunction h = random_support(fan, rng);
        TableOptions q, p;
        p.coefficients = Coefficients::modp(3);
        CohomologyTable a = cohomology_table(h, q), b = cohomology_table(h, p);
        EXPECT_EQ(a.entries, b.entries);
    }
}

TEST(Properties, TableTotalsSatisfyExclusivityAndIdentity) {
    Rng rng(56);
    for (int trial = 0; trial < 30; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        SupportFunction h = random_support(fan, rng);
        VerificationReport r = verify_identity(h);
        EXPECT_TRUE(r.identity_holds);
        EXPECT_TRUE(r.all_checks_pass());
        EXPECT_EQ(r.table.total_dim(0) * r.table.total_dim(fan->ambient_dim()), 0u);
    }
}

TEST(Properties, LinearSupportGivesOneMonomial) {
    Rng rng(57);
    for (int trial = 0; trial < 20; ++trial) {
        auto fan = trial % 2 ? random_fan_3d(rng) : random_fan_2d(rng);
        LatticeVector a(fan->ambient_dim());
        for (auto& x : a)
            x = uniform(rng, -3, 3);
        EXPECT_EQ(chi_polynomial(linear_support(fan, a)), LaurentPolynomial::monomial(negate(a)));
        VerificationReport r = verify_identity(point_support(fan, a));
        EXPECT_TRUE(r.identity_holds);
        EXPECT_EQ(r.chi_polynomial, LaurentPolynomial::monomial(a));
    }
}
