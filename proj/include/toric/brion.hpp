#pragma once

#include "toric/box.hpp"
#include "toric/cellular.hpp"
#include "toric/fan.hpp"
#include "toric/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// True iff <b + h_sigma, v> >= 0 for every ray v of sigma. Always true for
/// the zero cone.
bool membership(const SupportFunction& h, std::size_t cone_id, const LatticeVector& b);

/// Ids of the nonzero cones sigma with membership(h, sigma, b), ascending.
/// The result is face-closed; a violation throws InternalInvariantViolation.
std::vector<std::size_t> subcomplex_S(const SupportFunction& h, const LatticeVector& b);

/// Cohomology of L_h in a single degree.
struct DegreeCohomology {
    /// dims[k] = dim H^k for k = 0..n.
    std::vector<std::size_t> dims;
    /// torsion[k]: invariant factors > 1 of the integral H^k.
    std::vector<std::vector<Integer>> torsion;
    Integer chi = 0;

    bool is_zero() const;
    bool has_torsion() const;
    friend bool operator==(const DegreeCohomology&, const DegreeCohomology&) = default;
};

/// Evaluates the per-degree quantities of one support function.
///
/// S(h,b) is determined by which ray inequalities <b, v> >= -h(v) hold, so
/// homology is cached per such pattern. Not thread-safe.
class CohomologyEngine {
public:
    explicit CohomologyEngine(const SupportFunction& h, Coefficients coefficients = {});

    const SupportFunction& support() const { return h_; }
    const CellComplex& cells() const { return cells_; }
    std::size_t ambient_dim() const { return h_.ambient_dim(); }

    /// Rays whose halfspace contains b.
    std::vector<bool> ray_pattern(const LatticeVector& b) const;
    std::vector<std::size_t> subcomplex(const LatticeVector& b) const;
    const DegreeCohomology& cohomology(const LatticeVector& b);
    Integer signed_count(const LatticeVector& b);
    /// Reduced Euler characteristic of S(h,b), read from the chain ranks.
    Integer reduced_euler(const LatticeVector& b);

    /// False once some constructed chain complex had a nonzero composite
    /// boundary.
    bool boundaries_ok() const { return boundaries_ok_; }
    std::size_t complexes_built() const { return homology_.size(); }

private:
    struct Entry {
        std::optional<DegreeCohomology> cohomology;
        std::optional<Integer> signed_count;
        std::optional<Integer> reduced_euler;
    };
    Entry& entry(const LatticeVector& b);
    std::vector<std::size_t> kept_cones(const std::vector<bool>& pattern) const;

    SupportFunction h_;
    Coefficients coefficients_;
    CellComplex cells_;
    std::map<std::vector<bool>, Entry> homology_;
    bool boundaries_ok_ = true;
};

DegreeCohomology graded_cohomology(const SupportFunction& h, const LatticeVector& b,
                                   const Coefficients& coefficients = {});

/// sum over all cones of (-1)^codim [membership], the zero cone included.
Integer signed_count(const SupportFunction& h, const LatticeVector& b);

/// Bounding box of the vertices of the arrangement <a, v> = -h(v), v a ray.
struct DegreeRegion {
    Box box;
    std::vector<LatticeVector> candidates;
};

/// Throws NoArrangementVertices if the rays span less than M_R.
DegreeRegion degree_region(const SupportFunction& h);
/// Just the box of degree_region.
Box arrangement_box(const SupportFunction& h);

struct CohomologyTable {
    std::size_t ambient_dim = 0;
    Box region;
    /// Nonzero degrees only.
    std::map<LatticeVector, DegreeCohomology> entries;
    /// Outer shell of the region was scanned and has zero signed count.
    bool shell_checked = false;
    std::size_t shell_size = 0;

    /// Entry at b, or all zeros.
    DegreeCohomology at(const LatticeVector& b) const;
    /// sum over the table of dim H^k.
    std::size_t total_dim(std::size_t k) const;
};

struct TableOptions {
    /// Replaces the arrangement box; the shell check still runs.
    std::optional<Box> box;
    Coefficients coefficients;
};

/// Throws ShellCheckFailed if a shell point has nonzero signed count.
CohomologyTable cohomology_table(const SupportFunction& h, const TableOptions& options = {});
CohomologyTable cohomology_table(CohomologyEngine& engine, const TableOptions& options = {});

/// sum_a chi_a x^a. Every coefficient is recomputed as a signed count and
/// compared; a mismatch throws InternalInvariantViolation.
LaurentPolynomial chi_polynomial(const SupportFunction& h, const TableOptions& options = {});
LaurentPolynomial chi_polynomial(const CohomologyTable& table, CohomologyEngine& engine);

/// cone_genfun(-h_sigma, sigma dual) for each maximal cone, in maximal-id order.
std::vector<RationalGF> brion_terms(const SupportFunction& h);
/// The terms above over their common denominator.
RationalGF brion_sum(const SupportFunction& h);

struct CheckResult {
    std::string name;
    bool passed = true;
    /// First failing degree or other evidence; empty on success.
    std::string witness;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    bool identity_holds = false;
    LaurentPolynomial chi_polynomial;
    RationalGF lhs;
    std::vector<RationalGF> terms;
    CohomologyTable table;
    std::vector<CheckResult> checks;
    /// Limits of what was verified.
    std::vector<std::string> notes;

    bool all_checks_pass() const;
};

/// Compares brion_sum with chi_polynomial and runs the per-degree checks:
/// top_cohomology, h0_hn_exclusive, reduced_euler_coefficient,
/// euler_characteristic, boundary_squares_to_zero, shell.
VerificationReport verify_identity(const SupportFunction& h, const TableOptions& options = {});

} // namespace toric
