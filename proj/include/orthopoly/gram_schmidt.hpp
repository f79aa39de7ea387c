#ifndef ORTHOPOLY_GRAM_SCHMIDT_HPP
#define ORTHOPOLY_GRAM_SCHMIDT_HPP

#include <cstddef>
#include <vector>

#include "orthopoly/gamma_product.hpp"
#include "orthopoly/matrix.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Pairwise inner products of a basis v_0, ..., v_{size-1}, with a shared
/// positive transcendental factor divided out: the true inner product is
/// scale * moments[i][j]. Every ratio the orthogonalization forms is invariant
/// under that positive rescaling, so all computation runs on the rational
/// table and the scale is carried for reporting only.
class MomentTable {
public:
    explicit MomentTable(RationalMatrix moments, GammaProduct scale = GammaProduct());

    std::size_t size() const { return moments_.rows(); }
    const RationalMatrix& moments() const { return moments_; }
    const GammaProduct& scale() const { return scale_; }
    const Rational& at(std::size_t i, std::size_t j) const { return moments_.at(i, j); }

    /// Table for the reordered basis (v_perm[0], ..., v_perm[size-1]).
    MomentTable permuted(const std::vector<std::size_t>& perm) const;
    /// Leading principal block for the basis prefix v_0, ..., v_{size-1}.
    MomentTable leading(std::size_t size) const;

private:
    RationalMatrix moments_;
    GammaProduct scale_;
};

/// Coefficients of u = sum coeffs[i] * v_i over the basis prefix of a moment
/// table. Orthogonalization output is monic: coeffs.back() = 1.
struct CoeffVector {
    std::vector<Rational> coeffs;

    std::size_t order() const { return coeffs.size(); }
    bool operator==(const CoeffVector&) const = default;
};

/// <sum a_i v_i, sum b_j v_j> through the table, i.e. a^T M b (rational part).
Rational table_inner(const MomentTable& M, const std::vector<Rational>& a,
                     const std::vector<Rational>& b);

/// Cofactor d_{k,omit}: the determinant of the Gram block with rows
/// v_0, ..., v_{k-1} and columns (v_0, ..., v_k) minus v_omit. By convention
/// d_{0,0} = 1 (empty determinant).
Rational gram_minor(const MomentTable& M, std::size_t k, std::size_t omit);

/// Classical recursion: u_k = v_k - sum_{i<k} (<v_k,u_i>/<u_i,u_i>) u_i.
CoeffVector gs_recursive(const MomentTable& M, std::size_t k);

/// Cofactor form: u_k = sum_i (-1)^{i+k} (d_{k,i}/d_{k,k}) v_i. Agrees with
/// gs_recursive exactly; computed independently through gram_minor.
CoeffVector gs_determinant(const MomentTable& M, std::size_t k);

/// True iff <u_i, u_j> = 0 through the table for every pair i != j.
bool orthogonality_check(const MomentTable& M, const std::vector<CoeffVector>& vectors);

/// True iff reordering v_0, ..., v_{k-1} by perm and mapping the result back
/// reproduces gs_determinant(M, k). Holds for every permutation.
bool permutation_invariance_check(const MomentTable& M, std::size_t k,
                                  const std::vector<std::size_t>& perm);

} // namespace orthopoly

#endif
