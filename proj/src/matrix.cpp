#include "orthopoly/matrix.hpp"

#include <sstream>
#include <utility>

#include "orthopoly/errors.hpp"

namespace orthopoly {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::from_entries(
    std::size_t rows, std::size_t cols,
    const std::function<Rational(std::size_t, std::size_t)>& f) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f(i, j);
    return m;
}

void RationalMatrix::check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexError("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

RationalMatrix RationalMatrix::select(const std::vector<std::size_t>& row_idx,
                                      const std::vector<std::size_t>& col_idx) const {
    RationalMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "[" : ", ") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Rational bareiss_det(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquareError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);

    // Clear denominators row by row so the elimination stays in the integers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).num() * (lcm / m.at(i, j).den());
        scale /= Rational(lcm);
    }

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(mpz_class(a[n - 1][n - 1] * sign)) * scale;
}

Rational cofactor_det(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquareError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);
    if (n == 1)
        return m.at(0, 0);
    Rational det(0);
    std::vector<std::size_t> rows(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
        rows[i] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        std::vector<std::size_t> cols;
        cols.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j)
                cols.push_back(c);
        Rational minor = cofactor_det(m.select(rows, cols));
        if (j % 2 == 0)
            det += m.at(0, j) * minor;
        else
            det -= m.at(0, j) * minor;
    }
    return det;
}

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw NotSquareError("linear solve needs a square matrix");
    if (b.size() != n)
        throw IndexError("right-hand side length " + std::to_string(b.size()) +
                         " does not match matrix order " + std::to_string(n));

    RationalMatrix w = a;
    std::vector<Rational> rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w.at(p, k).is_zero())
            ++p;
        if (p == n)
            throw SingularMatrix("singular matrix in linear solve");
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(p, j));
            std::swap(rhs[k], rhs[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero())
                continue;
            Rational f = w.at(i, k) / w.at(k, k);
            for (std::size_t j = k; j < n; ++j)
                w.at(i, j) -= f * w.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= w.at(k, j) * x[j];
        x[k] = s / w.at(k, k);
    }
    return x;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    return os << m.str();
}

} // namespace orthopoly
