#ifndef ORTHOPOLY_CLASSICAL_HPP
#define ORTHOPOLY_CLASSICAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthopoly/gamma_product.hpp"
#include "orthopoly/gram_schmidt.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

enum class Family { hermite, laguerre, jacobi };

std::string family_name(Family f);

/// Weight-function data for the three classical inner products. Parameters
/// are restricted to the region where the moments converge.
struct MomentFunctional {
    Family family;
    Rational alpha;
    Rational beta;

    static MomentFunctional hermite();
    static MomentFunctional laguerre(Rational alpha);
    static MomentFunctional jacobi(Rational alpha, Rational beta);
};

/// legendre, chebyshev1, chebyshev2, or gegenbauer (which needs lambda),
/// realized as the corresponding Jacobi parameters.
MomentFunctional preset(const std::string& name, std::optional<Rational> lambda = std::nullopt);

/// Rational part of <basis_i, basis_j> after dividing out the family's shared
/// transcendental factor (see moment_scale): laguerre (alpha+1)_{i+j}, jacobi
/// (alpha+1)_{i+j}/(alpha+beta+2)_{i+j}, hermite 0 for odd i+j and otherwise
/// (1/2)_{(i+j)/2}. The basis is monomials x^i except jacobi, which uses
/// powers of t = (1-x)/2.
Rational moment(const MomentFunctional& F, std::size_t i, std::size_t j);

/// The divided-out factor: Gamma(alpha+1), 2^{alpha+beta+1} B(alpha+1, beta+1),
/// or Gamma(1/2).
GammaProduct moment_scale(const MomentFunctional& F);

/// Moment table for the first `size` basis elements.
MomentTable moment_table(const MomentFunctional& F, std::size_t size);

/// Exact polynomial: coefficient per power of the basis variable, which is x
/// for the monomial basis and t = (1-x)/2 for the shifted basis.
enum class Basis { monomial, shifted };

class Polynomial {
public:
    Polynomial() : basis_(Basis::monomial) {}
    Polynomial(Basis basis, std::vector<Rational> coeffs);

    Basis basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rational coefficient(std::size_t power) const;
    Rational leading_coefficient() const;

    /// Value at a rational point of the basis variable.
    Rational evaluate(const Rational& at) const;

    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;

    bool operator==(const Polynomial&) const = default;

    std::string str(const std::string& var) const;
    std::string str() const;

private:
    Basis basis_;
    std::vector<Rational> coeffs_;

    void trim();
};

/// Rewrites a shifted-basis polynomial in monomials via t = (1-x)/2; identity
/// on monomial input.
Polynomial to_monomial(const Polynomial& p);

/// The three textbook closed forms, coefficient for coefficient:
///   closed_hermite:  sum_m (-1)^m / (m! (n-2m)!) (2x)^{n-2m}
///   closed_laguerre: sum_m (-1)^m (alpha+1)_n / (m! (n-m)! (alpha+1)_m) x^m
///   closed_jacobi:   (alpha+1)_n sum_m (-1)^m (alpha+beta+n+1)_m
///                    / (m! (n-m)! (alpha+1)_m) t^m
/// Note closed_hermite carries no leading n!; the conventional physicists'
/// polynomial is n! times this (the standard-hermite normalization).
Polynomial closed_hermite(std::size_t n);
Polynomial closed_laguerre(std::size_t n, const Rational& alpha);
Polynomial closed_jacobi(std::size_t n, const Rational& alpha, const Rational& beta);
Polynomial closed_form(const MomentFunctional& F, std::size_t n);

/// Degree-n orthogonal polynomial from the cofactor form of Gram-Schmidt on
/// the family's moment table. Monic in the basis variable; jacobi output stays
/// in the shifted basis.
Polynomial gs_polynomial(const MomentFunctional& F, std::size_t n);

/// The exact rational factor relating the monic Gram-Schmidt output to the
/// closed form: (-1)^n n! for laguerre, (-1)^n n!/(alpha+beta+n+1)_n for
/// jacobi, n!/2^n for hermite.
Rational gs_scaling_factor(const MomentFunctional& F, std::size_t n);

/// True iff gs_polynomial(F, n) = gs_scaling_factor(F, n) * closed_form(F, n).
bool scaling_check(const MomentFunctional& F, std::size_t n);

/// The Laguerre cofactor ratio d_{n,m}/d_{n,n} = n! (alpha+1)_n
/// / (m! (n-m)! (alpha+1)_m), which also governs the Hermite parity blocks at
/// alpha = -1/2 (even degrees) and alpha = +1/2 (odd degrees).
Rational laguerre_cofactor_ratio(const Rational& alpha, std::size_t n, std::size_t m);

/// Hermite polynomial of degree n through the parity shortcut: in the moment
/// table reordered by parity, only same-parity cofactors survive, and their
/// ratios are the Laguerre ratios at alpha = -+1/2. Equals
/// gs_polynomial(hermite, n) exactly.
Polynomial hermite_parity_gs(std::size_t n);

/// Verifies the parity reduction on the real Gram matrix of degree n: in the
/// parity-reordered moment table the opposite-parity cofactors vanish and the
/// same-parity cofactor ratios equal both the Laguerre ratio form and the
/// factorial form (2n)!/(2^{2(n-m)} (n-m)! (2m)!) (odd analogue with (2m+1)!).
bool hermite_cofactor_ratio_check(std::size_t n);

} // namespace orthopoly

#endif
