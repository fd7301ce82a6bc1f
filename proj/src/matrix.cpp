#include "toric/matrix.hpp"

#include "toric/errors.hpp"

#include <cassert>
#include <utility>

namespace toric {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    if (!rows.empty())
        cols = rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidArgument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<LatticeVector>& columns, std::size_t rows) {
    return from_rows(columns, rows).transpose();
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
    return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

LatticeVector IntegerMatrix::column(std::size_t c) const {
    LatticeVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

LatticeVector IntegerMatrix::operator*(const LatticeVector& x) const {
    assert(x.size() == cols_);
    LatticeVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            s += (*this)(r, c) * x[c];
        y[r] = std::move(s);
    }
    return y;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    assert(a.cols_ == b.rows_);
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += aik * b(k, j);
        }
    return p;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, target) += factor * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

std::vector<Integer> SNFResult::invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            f.push_back(D(i, i));
    return f;
}

SNFResult smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SNFResult res{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
    IntegerMatrix& d = res.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m)
                return res;
            d.swap_rows(t, pi);
            res.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            res.V.swap_cols(t, pj);

            bool remainder = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                res.U.add_row_multiple(i, t, -q);
                remainder = remainder || d(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                res.V.add_col_multiple(j, t, -q);
                remainder = remainder || d(t, j) != 0;
            }
            if (remainder)
                continue;

            // Enforce the divisibility chain.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            d.add_row_multiple(t, bad, 1);
            res.U.add_row_multiple(t, bad, 1);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            res.U.negate_row(t);
        }
    }
    return res;
}

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols())
        throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntegerMatrix m = a;
    Integer prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sgn * m(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& a) {
    IntegerMatrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0)
                continue;
            Integer f = m(i, c);
            Integer g = m(r, c);
            Integer row_gcd = 0;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) = g * m(i, j) - f * m(r, j);
                row_gcd = gcd(row_gcd, m(i, j));
            }
            if (row_gcd > 1)
                for (std::size_t j = c; j < m.cols(); ++j)
                    m(i, j) /= row_gcd;
        }
        ++r;
    }
    return r;
}

std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t cols) {
    return rank(IntegerMatrix::from_rows(rows, cols));
}

std::size_t rank_mod_p(const SNFResult& snf, const Integer& p) {
    std::size_t r = 0;
    for (const auto& f : snf.invariant_factors())
        if (f % p != 0)
            ++r;
    return r;
}

std::optional<LatticeVector> solve_integral(const IntegerMatrix& a, const LatticeVector& b) {
    if (a.rows() != b.size())
        throw InvalidArgument("solve_integral: right-hand side has wrong length");
    SNFResult snf = smith_normal_form(a);
    LatticeVector c = snf.U * b;
    LatticeVector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer di = i < a.cols() ? snf.D(i, i) : Integer(0);
        if (di == 0) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        if (c[i] % di != 0)
            return std::nullopt;
        y[i] = c[i] / di;
    }
    return snf.V * y;
}

bool solvable_rational(const IntegerMatrix& a, const LatticeVector& b) {
    IntegerMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    return rank(a) == rank(aug);
}

std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    std::vector<LatticeVector> basis;
    for (std::size_t j = snf.rank(); j < a.cols(); ++j)
        basis.push_back(snf.V.column(j));
    return basis;
}

IntegerMatrix adjugate(const IntegerMatrix& a) {
    if (a.rows() != a.cols())
        throw InvalidArgument("adjugate of a non-square matrix");
    const std::size_t n = a.rows();
    IntegerMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntegerMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Integer cof = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Integer(-cof);
        }
    return adj;
}

} // namespace toric
