#include "toric/brion.hpp"

#include "toric/errors.hpp"
#include "toric/genfun.hpp"
#include "toric/matrix.hpp"

#include <algorithm>

namespace toric {

namespace {

Integer parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

std::string degree_text(const LatticeVector& b) { return to_string(b); }

} // namespace

bool membership(const SupportFunction& h, std::size_t cone_id, const LatticeVector& b) {
    const Fan& fan = *h.fan;
    const LatticeVector m = add(b, h.h_sigma.at(cone_id));
    for (auto r : fan.cone(cone_id).ray_ids)
        if (dot(m, fan.rays()[r]) < 0)
            return false;
    return true;
}

std::vector<std::size_t> subcomplex_S(const SupportFunction& h, const LatticeVector& b) {
    const Fan& fan = *h.fan;
    std::vector<bool> in(fan.size(), false);
    std::vector<std::size_t> out;
    for (std::size_t id = 1; id < fan.size(); ++id) {
        in[id] = membership(h, id, b);
        if (in[id])
            out.push_back(id);
    }
    for (auto id : out)
        for (auto f : fan.facets_of(id))
            if (f != 0 && !in[f])
                throw InternalInvariantViolation("S(h," + degree_text(b) + ") is not face-closed at cone " +
                                                 std::to_string(id));
    return out;
}

bool DegreeCohomology::is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }) && !has_torsion();
}

bool DegreeCohomology::has_torsion() const {
    return std::any_of(torsion.begin(), torsion.end(), [](const auto& t) { return !t.empty(); });
}

CohomologyEngine::CohomologyEngine(const SupportFunction& h, Coefficients coefficients)
    : h_(h), coefficients_(std::move(coefficients)), cells_(h.fan) {}

std::vector<bool> CohomologyEngine::ray_pattern(const LatticeVector& b) const {
    if (b.size() != ambient_dim())
        throw InvalidArgument("degree " + to_string(b) + " has the wrong dimension");
    const auto& rays = h_.fan->rays();
    std::vector<bool> pattern(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
        pattern[i] = dot(b, rays[i]) + h_.ray_values[i] >= 0;
    return pattern;
}

std::vector<std::size_t> CohomologyEngine::kept_cones(const std::vector<bool>& pattern) const {
    std::vector<std::size_t> kept;
    const Fan& fan = *h_.fan;
    for (std::size_t id = 1; id < fan.size(); ++id) {
        const auto& ids = fan.cone(id).ray_ids;
        if (std::all_of(ids.begin(), ids.end(), [&](std::size_t r) { return pattern[r]; }))
            kept.push_back(id);
    }
    return kept;
}

std::vector<std::size_t> CohomologyEngine::subcomplex(const LatticeVector& b) const {
    return kept_cones(ray_pattern(b));
}

CohomologyEngine::Entry& CohomologyEngine::entry(const LatticeVector& b) {
    auto pattern = ray_pattern(b);
    auto [it, fresh] = homology_.try_emplace(pattern);
    if (!fresh)
        return it->second;

    const Fan& fan = *h_.fan;
    const std::size_t n = ambient_dim();
    std::vector<bool> keep(fan.size(), false);
    Integer count = parity_sign(n); // zero cone
    for (auto id : kept_cones(pattern)) {
        keep[id] = true;
        count += parity_sign(n - fan.cone(id).dim());
    }
    ChainComplex complex = chain_complex(cells_, keep);
    boundaries_ok_ = boundaries_ok_ && complex.boundary_squares_to_zero();
    HomologyResult homology = reduced_homology(complex, coefficients_);

    DegreeCohomology c;
    c.dims.resize(n + 1);
    c.torsion.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c.dims[k] = homology.betti[n - k];
        c.torsion[k] = homology.torsion[n - k];
        c.chi += parity_sign(k) * c.dims[k];
    }
    it->second.cohomology = std::move(c);
    it->second.signed_count = count;
    it->second.reduced_euler = reduced_euler_characteristic(complex);
    return it->second;
}

const DegreeCohomology& CohomologyEngine::cohomology(const LatticeVector& b) { return *entry(b).cohomology; }
Integer CohomologyEngine::signed_count(const LatticeVector& b) { return *entry(b).signed_count; }
Integer CohomologyEngine::reduced_euler(const LatticeVector& b) { return *entry(b).reduced_euler; }

DegreeCohomology graded_cohomology(const SupportFunction& h, const LatticeVector& b,
                                   const Coefficients& coefficients) {
    CohomologyEngine engine(h, coefficients);
    return engine.cohomology(b);
}

Integer signed_count(const SupportFunction& h, const LatticeVector& b) {
    const Fan& fan = *h.fan;
    const std::size_t n = fan.ambient_dim();
    Integer total = 0;
    for (std::size_t id = 0; id < fan.size(); ++id)
        if (membership(h, id, b))
            total += parity_sign(n - fan.cone(id).dim());
    return total;
}

Box arrangement_box(const SupportFunction& h) {
    const auto& rays = h.fan->rays();
    const std::size_t n = h.ambient_dim();
    std::optional<Box> box;

    // Walk all n-subsets of rays; each nonsingular one gives a vertex.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    while (n > 0 && n <= rays.size()) {
        std::vector<LatticeVector> rows;
        LatticeVector rhs;
        for (auto i : idx) {
            rows.push_back(rays[i]);
            rhs.push_back(-h.ray_values[i]);
        }
        IntegerMatrix a = IntegerMatrix::from_rows(rows, n);
        Integer det = determinant(a);
        if (det != 0) {
            LatticeVector num = adjugate(a) * rhs;
            LatticeVector lo(n), hi(n);
            for (std::size_t j = 0; j < n; ++j) {
                lo[j] = floor_div(num[j], det);
                hi[j] = ceil_div(num[j], det);
            }
            if (!box) {
                box = Box{lo, hi};
            } else {
                for (std::size_t j = 0; j < n; ++j) {
                    box->lo[j] = std::min(box->lo[j], lo[j]);
                    box->hi[j] = std::max(box->hi[j], hi[j]);
                }
            }
        }
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == rays.size() - n + k - 1)
            --k;
        if (k == 0)
            break;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    if (!box)
        throw NoArrangementVertices("the rays do not span the ambient space");
    return *box;
}

DegreeRegion degree_region(const SupportFunction& h) {
    DegreeRegion region{arrangement_box(h), {}};
    region.box.for_each_point([&](const LatticeVector& p) { region.candidates.push_back(p); });
    return region;
}

DegreeCohomology CohomologyTable::at(const LatticeVector& b) const {
    auto it = entries.find(b);
    if (it != entries.end())
        return it->second;
    DegreeCohomology zero;
    zero.dims.assign(ambient_dim + 1, 0);
    zero.torsion.assign(ambient_dim + 1, {});
    return zero;
}

std::size_t CohomologyTable::total_dim(std::size_t k) const {
    std::size_t total = 0;
    for (const auto& [b, c] : entries)
        total += c.dims.at(k);
    return total;
}

namespace {

/// Fills the table; a nonzero shell point either throws or is returned.
CohomologyTable build_table(CohomologyEngine& engine, const TableOptions& options,
                            std::optional<LatticeVector>* shell_failure) {
    CohomologyTable table;
    table.ambient_dim = engine.ambient_dim();
    table.region = options.box ? *options.box : arrangement_box(engine.support());
    if (table.region.dim() != table.ambient_dim)
        throw InvalidArgument("degree box has the wrong dimension");
    table.region.for_each_point([&](const LatticeVector& b) {
        const auto& c = engine.cohomology(b);
        if (!c.is_zero())
            table.entries.emplace(b, c);
    });
    if (table.region.empty())
        return table;
    for (const auto& p : table.region.outer_shell()) {
        ++table.shell_size;
        if (engine.signed_count(p) != 0) {
            if (!shell_failure)
                throw ShellCheckFailed("nonzero Euler characteristic " + engine.signed_count(p).str() +
                                       " at " + to_string(p) + " outside the degree region");
            *shell_failure = p;
            return table;
        }
    }
    table.shell_checked = true;
    return table;
}

LaurentPolynomial table_polynomial(const CohomologyTable& table) {
    std::vector<LaurentPolynomial::Term> terms;
    for (const auto& [b, c] : table.entries)
        terms.emplace_back(b, c.chi);
    return LaurentPolynomial::from_terms(table.ambient_dim, std::move(terms));
}

} // namespace

CohomologyTable cohomology_table(CohomologyEngine& engine, const TableOptions& options) {
    return build_table(engine, options, nullptr);
}

CohomologyTable cohomology_table(const SupportFunction& h, const TableOptions& options) {
    CohomologyEngine engine(h, options.coefficients);
    return cohomology_table(engine, options);
}

LaurentPolynomial chi_polynomial(const CohomologyTable& table, CohomologyEngine& engine) {
    table.region.for_each_point([&](const LatticeVector& b) {
        Integer counted = engine.signed_count(b);
        Integer from_table = table.at(b).chi;
        if (counted != from_table)
            throw InternalInvariantViolation("at " + to_string(b) + " the signed cone count is " + counted.str() +
                                             " but the cohomology gives " + from_table.str());
    });
    return table_polynomial(table);
}

LaurentPolynomial chi_polynomial(const SupportFunction& h, const TableOptions& options) {
    CohomologyEngine engine(h, options.coefficients);
    return chi_polynomial(cohomology_table(engine, options), engine);
}

std::vector<RationalGF> brion_terms(const SupportFunction& h) {
    const Fan& fan = *h.fan;
    std::vector<RationalGF> terms;
    for (auto id : fan.maximal_ids())
        terms.push_back(cone_genfun(negate(h.h_sigma[id]), dual_cone(fan.cone(id).cone)));
    return terms;
}

RationalGF brion_sum(const SupportFunction& h) { return sum(brion_terms(h), h.ambient_dim()); }

bool VerificationReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_identity(const SupportFunction& h, const TableOptions& options) {
    const std::size_t n = h.ambient_dim();
    CohomologyEngine engine(h, options.coefficients);
    VerificationReport report;

    std::optional<LatticeVector> shell_failure;
    report.table = build_table(engine, options, &shell_failure);
    report.chi_polynomial = table_polynomial(report.table);
    report.terms = brion_terms(h);
    report.lhs = sum(report.terms, n);
    report.identity_holds = rational_equal(report.lhs, RationalGF::polynomial(report.chi_polynomial));

    CheckResult top{"top_cohomology", true, ""};
    CheckResult euler{"euler_characteristic", true, ""};
    CheckResult reduced{"reduced_euler_coefficient", true, ""};
    auto fail = [](CheckResult& c, const std::string& why) {
        if (c.passed)
            c.witness = why;
        c.passed = false;
    };
    report.table.region.for_each_point([&](const LatticeVector& b) {
        const auto& c = engine.cohomology(b);
        const bool empty = engine.subcomplex(b).empty();
        const bool top_one = c.dims[n] == 1;
        const bool others_vanish = std::all_of(c.dims.begin(), c.dims.end() - 1, [](auto d) { return d == 0; });
        if (empty != top_one || (c.dims[n] != 0 && !others_vanish))
            fail(top, "degree " + to_string(b));
        if (engine.signed_count(b) != c.chi)
            fail(euler, "degree " + to_string(b));
        if (report.chi_polynomial.coefficient(b) != parity_sign(n - 1) * engine.reduced_euler(b))
            fail(reduced, "degree " + to_string(b));
    });
    CheckResult exclusive{"h0_hn_exclusive", true, ""};
    const std::size_t h0 = report.table.total_dim(0), hn = report.table.total_dim(n);
    if (h0 != 0 && hn != 0)
        fail(exclusive, "dim H^0 = " + std::to_string(h0) + ", dim H^" + std::to_string(n) + " = " +
                            std::to_string(hn));
    CheckResult boundaries{"boundary_squares_to_zero", engine.boundaries_ok(), ""};
    if (!boundaries.passed)
        boundaries.witness = "some subcomplex";
    CheckResult shell{"shell", !shell_failure.has_value(), ""};
    if (shell_failure)
        shell.witness = "degree " + to_string(*shell_failure);

    report.checks = {top, exclusive, reduced, euler, boundaries, shell};

    report.notes.push_back("outside the degree region only the Euler characteristic is certified to vanish");
    if (!options.coefficients.is_rational())
        report.notes.push_back("dimensions taken over F_" + options.coefficients.characteristic.str());
    for (const auto& [b, c] : report.table.entries)
        if (c.has_torsion()) {
            report.notes.push_back("integral cohomology has torsion, first at degree " + to_string(b));
            break;
        }
    return report;
}

} // namespace toric
