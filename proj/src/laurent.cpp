#include "toric/laurent.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <map>

namespace toric {

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector& exponent, const Integer& coefficient) {
    LaurentPolynomial p(exponent.size());
    if (coefficient != 0)
        p.terms_.emplace_back(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Integer& c) {
    return monomial(LatticeVector(dim), c);
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t dim, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPolynomial p(dim);
    for (auto& t : terms) {
        if (t.first.size() != dim)
            throw InvalidArgument("exponent " + to_string(t.first) + " has the wrong dimension");
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second == 0)
            p.terms_.pop_back();
    }
    return p;
}

Integer LaurentPolynomial::coefficient(const LatticeVector& exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, const LatticeVector& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent)
        return it->second;
    return 0;
}

LaurentPolynomial LaurentPolynomial::shifted(const LatticeVector& b) const {
    LaurentPolynomial p(dim_);
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        p.terms_.emplace_back(add(e, b), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& s) const {
    LaurentPolynomial p(dim_);
    if (s == 0)
        return p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        p.terms_.emplace_back(e, c * s);
    return p;
}

LaurentPolynomial LaurentPolynomial::merge(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                           const Integer& sb) {
    LaurentPolynomial r(std::max(a.dim_, b.dim_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            r.terms_.emplace_back(j->first, sb * j->second);
            ++j;
        } else {
            Integer c = i->second + sb * j->second;
            if (c != 0)
                r.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::times_one_minus(const LatticeVector& g) const {
    // Translation preserves the lexicographic order, so x^g p is still sorted.
    return merge(*this, shifted(g), -1);
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return LaurentPolynomial::merge(a, b, 1);
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return LaurentPolynomial::merge(a, b, -1);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::vector<LaurentPolynomial::Term> products;
    products.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            products.emplace_back(add(ea, eb), ca * cb);
    return LaurentPolynomial::from_terms(std::max(a.dim(), b.dim()), std::move(products));
}

bool is_canonical_direction(const LatticeVector& g) {
    for (const auto& x : g)
        if (x != 0)
            return x > 0;
    return false;
}

RationalGF canonical_orientation(const RationalGF& f) {
    RationalGF out{f.numerator, {}};
    LatticeVector shift(f.dim());
    bool flip = false;
    for (const auto& g : f.denominator) {
        if (is_zero(g))
            throw InvalidArgument("denominator factor 1 - x^0 vanishes");
        if (is_canonical_direction(g)) {
            out.denominator.push_back(g);
        } else {
            // 1/(1 - x^g) = -x^{-g} / (1 - x^{-g})
            shift = subtract(shift, g);
            flip = !flip;
            out.denominator.push_back(negate(g));
        }
    }
    out.numerator = out.numerator.shifted(shift);
    if (flip)
        out.numerator = -out.numerator;
    return out;
}

LaurentPolynomial multiply_binomials(LaurentPolynomial p, const std::vector<LatticeVector>& factors) {
    for (const auto& g : factors)
        p = p.times_one_minus(g);
    return p;
}

namespace {

using Multiset = std::map<LatticeVector, std::size_t>;

Multiset count(const std::vector<LatticeVector>& factors) {
    Multiset m;
    for (const auto& g : factors)
        ++m[g];
    return m;
}

std::vector<LatticeVector> expand(const Multiset& m) {
    std::vector<LatticeVector> out;
    for (const auto& [g, k] : m)
        out.insert(out.end(), k, g);
    return out;
}

/// Factors of `whole` not accounted for by `part` (part must be a sub-multiset).
std::vector<LatticeVector> complement(const Multiset& whole, const Multiset& part) {
    std::vector<LatticeVector> out;
    for (const auto& [g, k] : whole) {
        auto it = part.find(g);
        std::size_t used = it == part.end() ? 0 : it->second;
        out.insert(out.end(), k - used, g);
    }
    return out;
}

} // namespace

RationalGF sum(const std::vector<RationalGF>& terms, std::size_t dim) {
    std::vector<RationalGF> canon;
    Multiset lcm;
    for (const auto& t : terms) {
        canon.push_back(canonical_orientation(t));
        for (const auto& [g, k] : count(canon.back().denominator))
            lcm[g] = std::max(lcm[g], k);
    }
    RationalGF total{LaurentPolynomial(dim), expand(lcm)};
    for (const auto& t : canon)
        total.numerator += multiply_binomials(t.numerator, complement(lcm, count(t.denominator)));
    return total;
}

bool rational_equal(const RationalGF& a, const RationalGF& b) {
    RationalGF ca = canonical_orientation(a);
    RationalGF cb = canonical_orientation(b);
    Multiset ma = count(ca.denominator);
    Multiset mb = count(cb.denominator);
    Multiset shared;
    for (const auto& [g, k] : ma) {
        auto it = mb.find(g);
        if (it != mb.end())
            shared[g] = std::min(k, it->second);
    }
    LaurentPolynomial lhs = multiply_binomials(ca.numerator, complement(mb, shared));
    LaurentPolynomial rhs = multiply_binomials(cb.numerator, complement(ma, shared));
    return lhs == rhs;
}

} // namespace toric
