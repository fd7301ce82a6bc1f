#pragma once

#include "toric/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toric {

/// Finitely supported map M -> Z, i.e. a Laurent polynomial in x1..xn.
/// Terms are kept sorted by exponent (lexicographic) with no zero coefficients.
class LaurentPolynomial {
public:
    using Term = std::pair<LatticeVector, Integer>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {}

    static LaurentPolynomial monomial(const LatticeVector& exponent, const Integer& coefficient = 1);
    static LaurentPolynomial constant(std::size_t dim, const Integer& c);
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentPolynomial from_terms(std::size_t dim, std::vector<Term> terms);

    std::size_t dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const LatticeVector& exponent) const;

    /// x^b * p
    LaurentPolynomial shifted(const LatticeVector& b) const;
    LaurentPolynomial scaled(const Integer& s) const;
    /// p * (1 - x^g), by a single merge pass.
    LaurentPolynomial times_one_minus(const LatticeVector& g) const;

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const { return scaled(-1); }
    LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, const Integer& sb);

    std::size_t dim_ = 0;
    std::vector<Term> terms_;
};

/// numerator / prod_g (1 - x^g), an element of the fraction field of the
/// Laurent polynomial ring. Factors are kept as a multiset of nonzero
/// vectors and never cancelled against the numerator.
struct RationalGF {
    LaurentPolynomial numerator;
    std::vector<LatticeVector> denominator;

    std::size_t dim() const { return numerator.dim(); }
    static RationalGF polynomial(LaurentPolynomial p) { return {std::move(p), {}}; }
    /// Same numerator and the same factor list; see rational_equal for
    /// equality of functions.
    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Lexicographically positive representative of the line through g.
bool is_canonical_direction(const LatticeVector& g);

/// Rewrites every factor 1 - x^g with g not canonical as
/// -x^g (1 - x^{-g}), moving the monomial into the numerator.
RationalGF canonical_orientation(const RationalGF& f);

/// prod_g (1 - x^g) times p.
LaurentPolynomial multiply_binomials(LaurentPolynomial p, const std::vector<LatticeVector>& factors);

/// Sum over the least common multiple of the (canonically oriented)
/// denominator multisets.
RationalGF sum(const std::vector<RationalGF>& terms, std::size_t dim);

/// Equality in the fraction field, decided by cross-multiplication after
/// cancelling shared factors.
bool rational_equal(const RationalGF& a, const RationalGF& b);

} // namespace toric
