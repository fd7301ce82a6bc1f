#include "toric/integer.hpp"

#include "toric/errors.hpp"

#include <cassert>
#include <sstream>

namespace toric {

Integer dot(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

LatticeVector negate(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

LatticeVector scale(const Integer& s, const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

bool is_zero(const LatticeVector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return abs(g);
}

LatticeVector primitive_vector(const LatticeVector& v) {
    Integer g = content(v);
    if (g == 0)
        throw InvalidArgument("primitive_vector of the zero vector");
    LatticeVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i] / g;
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    assert(b != 0);
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

int sign(const Integer& x) {
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

LatticeVector make_vector(std::initializer_list<std::int64_t> entries) {
    LatticeVector v;
    v.reserve(entries.size());
    for (auto e : entries)
        v.emplace_back(e);
    return v;
}

std::string to_string(const LatticeVector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

} // namespace toric
