#pragma once

#include "toric/integer.hpp"

#include <optional>
#include <vector>

namespace toric {

/// Dense integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    /// Rows given as vectors; `cols` is needed only when `rows` is empty.
    static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols = 0);
    static IntegerMatrix from_columns(const std::vector<LatticeVector>& columns, std::size_t rows = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    LatticeVector row(std::size_t r) const;
    LatticeVector column(std::size_t c) const;

    IntegerMatrix transpose() const;
    LatticeVector operator*(const LatticeVector& x) const;
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * A * V = D with D diagonal, d1 | d2 | ..., all d_i >= 0, U and V unimodular.
struct SNFResult {
    IntegerMatrix D;
    IntegerMatrix U;
    IntegerMatrix V;

    /// Nonzero diagonal entries, in order.
    std::vector<Integer> invariant_factors() const;
    std::size_t rank() const { return invariant_factors().size(); }
};

SNFResult smith_normal_form(const IntegerMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination). Requires a square matrix.
Integer determinant(const IntegerMatrix& a);

/// Rank over Q.
std::size_t rank(const IntegerMatrix& a);
std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t cols);

/// Rank over the prime field F_p, read off the Smith normal form.
std::size_t rank_mod_p(const SNFResult& snf, const Integer& p);

/// An integral x with A x = b, or nullopt if none exists.
std::optional<LatticeVector> solve_integral(const IntegerMatrix& a, const LatticeVector& b);

/// True iff A x = b has a solution over Q.
bool solvable_rational(const IntegerMatrix& a, const LatticeVector& b);

/// A lattice basis of {x in Z^n : A x = 0}.
std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a);

/// Adjugate of a square matrix, so that A * adj(A) = det(A) * I.
IntegerMatrix adjugate(const IntegerMatrix& a);

} // namespace toric
