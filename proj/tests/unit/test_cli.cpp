#include "fixtures.hpp"

#include "toric/errors.hpp"
#include "toric/report.hpp"
#include "toric/spec_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace toric;
using namespace toric::testing;

namespace {

const char* kite_document = R"(dim: 2
rays: [[1,1],[0,1],[-1,1],[0,-1]]
maximal_cones: [[0,1],[1,2],[2,3],[3,0]]
support: [0,-2,0,-2]
)";

const char* square_document = "dim: 2\npolytope: [[0,0],[1,0],[0,1],[1,1]]\n";

template <typename E>
E parse_error(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const E& e) {
        return e;
    }
    ADD_FAILURE() << "no " << typeid(E).name() << " for:\n" << text;
    return E("missing");
}

bool has_line(const std::string& text, const std::string& line) {
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        if (text.compare(start, end - start, line) == 0)
            return true;
        start = end + 1;
    }
    return false;
}

FanSpec random_spec(Rng& rng) {
    FanSpec s;
    if (uniform(rng, 0, 2) == 0) {
        s.dim = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<LatticeVector> pts;
        for (int k = 0; k < uniform(rng, 1, 5); ++k) {
            LatticeVector p(s.dim);
            for (auto& x : p)
                x = uniform(rng, -9, 9);
            pts.push_back(p);
        }
        s.polytope = pts;
        return s;
    }
    auto fan = uniform(rng, 0, 1) ? random_fan_2d(rng) : random_fan_3d(rng);
    s.dim = fan->ambient_dim();
    s.rays = fan->rays();
    for (auto id : fan->maximal_ids())
        s.maximal_cones.push_back(fan->cone(id).ray_ids);
    if (uniform(rng, 0, 1)) {
        std::vector<Integer> v;
        for (std::size_t i = 0; i < s.rays.size(); ++i)
            v.push_back(uniform(rng, -1000, 1000));
        s.support = v;
    }
    return s;
}

} // namespace

TEST(ParseSpec, KiteDocument) {
    FanSpec s = parse_spec(kite_document);
    EXPECT_EQ(s.dim, 2u);
    EXPECT_EQ(s.rays.size(), 4u);
    EXPECT_EQ(s.maximal_cones.size(), 4u);
    ASSERT_TRUE(s.support);
    EXPECT_EQ(*s.support, ints({0, -2, 0, -2}));
    EXPECT_FALSE(s.is_polytope());
}

TEST(ParseSpec, PolytopeForm) {
    FanSpec s = parse_spec(square_document);
    EXPECT_TRUE(s.is_polytope());
    EXPECT_EQ(s.polytope->size(), 4u);
    EXPECT_TRUE(s.rays.empty());
}

TEST(ParseSpec, BlockStyleIsAccepted) {
    FanSpec s = parse_spec("dim: 1\nrays:\n  - [1]\n  - [-1]\nmaximal_cones:\n  - [0]\n  - [1]\n");
    EXPECT_EQ(s.rays, (std::vector<LatticeVector>{vec({1}), vec({-1})}));
    EXPECT_FALSE(s.support);
}

TEST(ParseSpec, Errors) {
    auto wrong_length = parse_error<SchemaError>(
        "dim: 2\nrays: [[1,1],[0,1],[-1,1],[0,-1]]\nmaximal_cones: [[0,1],[1,2],[2,3],[3,0]]\nsupport: [0,-2,0]\n");
    EXPECT_EQ(wrong_length.line(), 4);

    auto unknown = parse_error<SchemaError>("dim: 1\nrays: [[1],[-1]]\nmaximal_cones: [[0],[1]]\ncolour: red\n");
    EXPECT_EQ(unknown.line(), 4);

    parse_error<SchemaError>("rays: [[1],[-1]]\nmaximal_cones: [[0],[1]]\n");
    parse_error<SchemaError>("dim: 1\nrays: [[1],[-1]]\n");
    parse_error<SchemaError>("dim: 1\npolytope: [[0],[1]]\nrays: [[1],[-1]]\nmaximal_cones: [[0],[1]]\n");
    parse_error<SchemaError>("dim: 0\npolytope: []\n");
    parse_error<SchemaError>("dim: 1\nrays: [[1],[-1]]\nmaximal_cones: [[0],[2]]\n");

    auto mismatch = parse_error<DimensionMismatch>("dim: 2\nrays: [[1,0],[0,1,0]]\nmaximal_cones: [[0,1]]\n");
    EXPECT_EQ(mismatch.line(), 2);

    auto syntax = parse_error<SyntaxError>("dim: 2\nrays: [[1,0], [0,1\n");
    EXPECT_GT(syntax.line(), 0);
    parse_error<SchemaError>("dim: 2\nrays: [[1,x],[0,1]]\nmaximal_cones: [[0,1]]\n");
}

TEST(ParseSpec, EmitRoundTrip) {
    EXPECT_EQ(parse_spec(emit_spec(parse_spec(kite_document))), parse_spec(kite_document));
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        FanSpec s = random_spec(rng);
        EXPECT_EQ(parse_spec(emit_spec(s)), s) << emit_spec(s);
    }
}

TEST(ParseSpec, LargeIntegersSurvive) {
    FanSpec s = parse_spec("dim: 1\nrays: [[1],[-1]]\nmaximal_cones: [[0],[1]]\n"
                           "support: [123456789012345678901234567890, -5]\n");
    EXPECT_EQ((*s.support)[0], Integer("123456789012345678901234567890"));
    EXPECT_EQ(parse_spec(emit_spec(s)), s);
}

TEST(Command, Names) {
    for (auto c : {Command::validate, Command::cohomology, Command::brion, Command::polytope})
        EXPECT_EQ(parse_command(command_name(c)), c);
    EXPECT_THROW(parse_command("solve"), InvalidArgument);
}

TEST(Run, BrionOnKite) {
    Report r = run(Command::brion, parse_spec(kite_document));
    ASSERT_TRUE(r.chi_polynomial);
    ASSERT_TRUE(r.identity_holds);
    EXPECT_TRUE(*r.identity_holds);
    EXPECT_EQ(format_polynomial(*r.chi_polynomial), "-1 - x1^-1*x2 - x2 - x1*x2 + x2^-1");
    EXPECT_EQ(r.terms.size(), 4u);
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Run, PolytopeOnSquare) {
    Report r = run(Command::polytope, parse_spec(square_document));
    ASSERT_TRUE(r.chi_polynomial);
    EXPECT_EQ(format_polynomial(*r.chi_polynomial), "1 + x1 + x2 + x1*x2");
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Run, SingleDegreeCohomology) {
    RunOptions o;
    o.degree = vec({0, -1});
    Report r = run(Command::cohomology, parse_spec(kite_document), o);
    ASSERT_TRUE(r.cohomology);
    ASSERT_EQ(r.cohomology->entries.size(), 1u);
    const auto& [b, d] = *r.cohomology->entries.begin();
    EXPECT_EQ(b, vec({0, -1}));
    EXPECT_EQ(d.dims, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Run, ValidateReportsIncompleteness) {
    FanSpec s = parse_spec("dim: 2\nrays: [[1,0],[0,1]]\nmaximal_cones: [[0,1]]\n");
    Report r = run(Command::validate, s);
    EXPECT_FALSE(r.fan.complete);
    EXPECT_FALSE(r.fan.witness.empty());
    EXPECT_EQ(r.exit_code(), 3);
    EXPECT_THROW(run(Command::brion, s), IncompleteFan);
    EXPECT_EQ(run(Command::validate, parse_spec(kite_document)).exit_code(), 0);
}

TEST(Run, DomainErrorsPropagate) {
    FanSpec bad = parse_spec("dim: 2\nrays: [[1,0],[1,1],[0,1]]\nmaximal_cones: [[0,1],[0,2]]\n");
    EXPECT_THROW(run(Command::validate, bad), FanAxiomViolation);
    FanSpec flat = parse_spec("dim: 2\npolytope: [[0,0],[1,1],[2,2]]\n");
    EXPECT_THROW(run(Command::polytope, flat), DegeneratePolytope);
}

TEST(Run, OracleAddsChecks) {
    RunOptions o;
    o.oracle = true;
    Report plain = run(Command::brion, parse_spec(kite_document));
    Report checked = run(Command::brion, parse_spec(kite_document), o);
    EXPECT_GT(checked.checks.size(), plain.checks.size());
    EXPECT_TRUE(std::all_of(checked.checks.begin(), checked.checks.end(), [](const CheckResult& c) { return c.passed; }));
}

TEST(EmitReport, TextContainsGoldenLine) {
    std::string text = emit_report(run(Command::brion, parse_spec(kite_document)), Format::text);
    EXPECT_TRUE(has_line(text, "chi_polynomial: -1 - x1^-1*x2 - x2 - x1*x2 + x2^-1")) << text;
    EXPECT_TRUE(has_line(text, "identity_holds: true")) << text;
}

TEST(EmitReport, EmptyPolynomialIsZero) {
    Report r;
    r.command = Command::brion;
    r.chi_polynomial = LaurentPolynomial(2);
    EXPECT_TRUE(has_line(emit_report(r, Format::text), "chi_polynomial: 0"));
    EXPECT_EQ(format_polynomial(LaurentPolynomial(3)), "0");
}

TEST(EmitReport, MachineRoundTrip) {
    for (auto [command, doc] : {std::pair{Command::brion, kite_document}, std::pair{Command::polytope, square_document},
                                std::pair{Command::cohomology, kite_document},
                                std::pair{Command::validate, kite_document}}) {
        Report r = run(command, parse_spec(doc));
        r.elapsed_ms = 12.5;
        std::string machine = emit_report(r, Format::machine);
        Report back = parse_report(machine);
        r.elapsed_ms.reset();
        EXPECT_EQ(back, r) << machine;
        EXPECT_EQ(emit_report(back, Format::machine), machine);
    }
}

TEST(EmitReport, MachineRoundTripWithHugeCoefficients) {
    Report r;
    r.command = Command::brion;
    r.fan.dim = 2;
    r.support = std::vector<Integer>{Integer("-99999999999999999999999"), 3};
    r.chi_polynomial = LaurentPolynomial::monomial(vec({1, -2}), Integer("123456789012345678901234567890"));
    r.identity_holds = false;
    r.checks.push_back({"shell", false, "b = (3, 4)"});
    r.notes.push_back("a note");
    EXPECT_EQ(parse_report(emit_report(r, Format::machine)), r);
    EXPECT_EQ(r.exit_code(), 3);
}

TEST(EmitReport, MachineOutputIsDeterministic) {
    Report a = run(Command::brion, parse_spec(kite_document));
    Report b = run(Command::brion, parse_spec(kite_document));
    a.elapsed_ms = 1;
    b.elapsed_ms = 2;
    EXPECT_EQ(emit_report(a, Format::machine), emit_report(b, Format::machine));
}

TEST(Formatting, MonomialsAndOrder) {
    EXPECT_EQ(format_monomial(vec({0, 0})), "1");
    EXPECT_EQ(format_monomial(vec({1, 0})), "x1");
    EXPECT_EQ(format_monomial(vec({-1, 3})), "x1^-1*x2^3");
    EXPECT_TRUE(graded_before(vec({0, 0}), vec({1, 0})));
    EXPECT_TRUE(graded_before(vec({1, 0}), vec({0, 1})));
    EXPECT_TRUE(graded_before(vec({5, 5}), vec({0, -1})));
    EXPECT_TRUE(graded_before(vec({0, -1}), vec({-1, -1})));
    EXPECT_FALSE(graded_before(vec({0, 1}), vec({0, 1})));
    EXPECT_EQ(format_polynomial(LaurentPolynomial::monomial(vec({2}), -3) + LaurentPolynomial::constant(1, 2)),
              "2 - 3*x1^2");
}

TEST(Formatting, GradedOrderIsStrictWeak) {
    Rng rng(62);
    std::vector<LatticeVector> pts;
    for (int k = 0; k < 40; ++k)
        pts.push_back(vec({uniform(rng, -3, 3), uniform(rng, -3, 3)}));
    for (const auto& a : pts) {
        EXPECT_FALSE(graded_before(a, a));
        for (const auto& b : pts) {
            if (a != b)
                EXPECT_NE(graded_before(a, b), graded_before(b, a));
            for (const auto& c : pts)
                if (graded_before(a, b) && graded_before(b, c))
                    EXPECT_TRUE(graded_before(a, c));
        }
    }
}
