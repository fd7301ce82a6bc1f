#pragma once

#include "toric/brion.hpp"
#include "toric/spec_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

enum class Command { validate, cohomology, brion, polytope };

/// Throws InvalidArgument for an unknown name.
Command parse_command(const std::string& name);
std::string command_name(Command c);

struct RunOptions {
    /// Restrict the cohomology table to this single degree.
    std::optional<LatticeVector> degree;
    /// Replace the arrangement box.
    std::optional<Box> box;
    /// Cross-check every cone series against a membership scan.
    bool oracle = false;
    Coefficients coefficients;
};

struct FanSummary {
    std::size_t dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> maximal_cones;
    std::vector<std::size_t> f_vector;
    bool complete = false;
    std::string witness;
    friend bool operator==(const FanSummary&, const FanSummary&) = default;
};

struct CohomologySection {
    Box region;
    bool shell_checked = false;
    std::map<LatticeVector, DegreeCohomology> entries;
    friend bool operator==(const CohomologySection&, const CohomologySection&) = default;
};

struct Report {
    Command command = Command::validate;
    FanSummary fan;
    std::optional<std::vector<Integer>> support;
    std::optional<std::vector<LatticeVector>> polytope;
    std::optional<CohomologySection> cohomology;
    std::optional<LaurentPolynomial> chi_polynomial;
    /// One generating function per maximal cone, in maximal-id order.
    std::vector<RationalGF> terms;
    std::optional<bool> identity_holds;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    /// Wall time; text output only.
    std::optional<double> elapsed_ms;

    /// 0 when everything requested was verified, 3 otherwise.
    int exit_code() const;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Throws DomainError subclasses for invalid fans or support values.
Report run(Command command, const FanSpec& spec, const RunOptions& options = {});

enum class Format { text, machine };

/// Text is for people; machine is JSON and round-trips through parse_report.
std::string emit_report(const Report& r, Format format);
Report parse_report(const std::string& machine);

/// Graded order: total degree 0, 1, 2, ..., then -1, -2, ...; within a
/// degree, lexicographically larger exponents first.
bool graded_before(const LatticeVector& a, const LatticeVector& b);

/// "-1 - x1^-1*x2 - x2 - x1*x2 + x2^-1"; "0" for the zero polynomial.
std::string format_polynomial(const LaurentPolynomial& p);
/// "x1^-1*x2"; "1" for the zero exponent.
std::string format_monomial(const LatticeVector& e);
/// "numerator / ((1 - x^g1)*(1 - x^g2))"
std::string format_rational(const RationalGF& f);

} // namespace toric
