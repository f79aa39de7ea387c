#ifndef ORTHOPOLY_MATRIX_HPP
#define ORTHOPOLY_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    /// Entries from a generator f(i, j), i and j zero-based.
    static RationalMatrix from_entries(std::size_t rows, std::size_t cols,
                                       const std::function<Rational(std::size_t, std::size_t)>& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    RationalMatrix transposed() const;
    /// Submatrix keeping the given rows and columns, in the given order.
    RationalMatrix select(const std::vector<std::size_t>& row_idx,
                          const std::vector<std::size_t>& col_idx) const;

    bool operator==(const RationalMatrix&) const = default;

    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;

    void check(std::size_t i, std::size_t j) const;
};

/// Exact determinant via fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix. The 0x0 determinant is 1.
Rational bareiss_det(const RationalMatrix& m);

/// Determinant by cofactor expansion along the first row, O(n!). Kept as an
/// independent cross-check for the elimination path.
Rational cofactor_det(const RationalMatrix& m);

/// Solves A x = b for square nonsingular A by Gaussian elimination with exact
/// pivoting. Throws SingularMatrix when no solution is determined.
std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

} // namespace orthopoly

#endif
