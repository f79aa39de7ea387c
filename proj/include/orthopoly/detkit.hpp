#ifndef ORTHOPOLY_DETKIT_HPP
#define ORTHOPOLY_DETKIT_HPP

#include <vector>

#include "orthopoly/gamma_product.hpp"
#include "orthopoly/matrix.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Ordered list of rational indices z = (z_0, ..., z_{n-1}). Entries need not
/// be distinct; a repeated entry just makes the determinants vanish.
using IndexVector = std::vector<Rational>;

/// Value of the form scale * rational_part where the scale is a formal Gamma
/// product and the rational part carries the Vandermonde content.
struct ScaledDeterminant {
    GammaProduct scale;
    Rational rational_part;

    GammaProduct combined() const { return scale * rational_part; }
    ScaledDeterminant canonicalized() const { return {scale.canonicalized(), rational_part}; }
    bool operator==(const ScaledDeterminant&) const = default;
};

IndexVector shifted(const IndexVector& z, const Rational& c);

/// prod_{i<j} (z_j - z_i).
Rational vandermonde_delta(const IndexVector& z);

/// The matrix [z_j^i], row i, column j.
RationalMatrix vandermonde_matrix(const IndexVector& z);

/// The set (1, ..., n+1) with entry m+1 removed; eset(n, n) = (1, ..., n).
IndexVector eset(std::size_t n, std::size_t m);

/// vandermonde_delta(eset(n, m)) / vandermonde_delta(eset(n, n)), evaluated by
/// the two explicit products. Equals binomial(n, m).
Rational eset_ratio(std::size_t n, std::size_t m);

/// The matrix [(z_j)_i] of ascending factorials.
RationalMatrix pochhammer_matrix(const IndexVector& z);

/// det [(z_j)_i] by its closed form, which is vandermonde_delta(z).
Rational pochhammer_matrix_det(const IndexVector& z);

/// det [Gamma(z_j + i)] = { prod_j Gamma(z_j) } * Delta_n(z), the scale kept
/// canonical and formal.
ScaledDeterminant det_gamma(const IndexVector& z);

/// The matrix [(z_j)_i / (z_j + w)_i].
RationalMatrix ratio_matrix(const IndexVector& z, const Rational& w);

/// det [(z_j)_i / (z_j + w)_i] = { prod_j (w)_j / (z_j + w)_{n-1} } * Delta_n(z).
Rational pochhammer_ratio_det(const IndexVector& z, const Rational& w);

/// Same determinant evaluated by repeated one-step row reduction: eliminating
/// the first column leaves an (n-1)x(n-1) instance on (z_1, ..., z_{n-1}) with
/// w replaced by w+1, times prod_{i=1}^{n-1} w(z_i - z_0) / ((z_i + w)(z_0 + w + i - 1)).
Rational ratio_det_recursive_oracle(const IndexVector& z, const Rational& w);

/// det [B(z_j + i, w)] = { prod_j Gamma(z_j) Gamma(w+j) / Gamma(z_j + w + n - 1) } * Delta_n(z).
ScaledDeterminant det_beta(const IndexVector& z, const Rational& w);

/// Brute-force companion for det_beta: B(z+i, w) = B(z, w) * (z)_i / (z+w)_i,
/// so the Beta determinant factors as prod_j B(z_j, w) times the ratio-matrix
/// determinant, the latter evaluated by Bareiss elimination.
ScaledDeterminant det_beta_oracle(const IndexVector& z, const Rational& w);

} // namespace orthopoly

#endif
