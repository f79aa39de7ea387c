#ifndef ORTHOPOLY_EXTERIOR_HPP
#define ORTHOPOLY_EXTERIOR_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "orthopoly/gram_schmidt.hpp"
#include "orthopoly/matrix.hpp"
#include "orthopoly/quadext.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Oriented rational inner-product space: the ordered basis e_0, ..., e_{m-1}
/// is positively oriented and G[i][j] = <e_i, e_j> is symmetric positive
/// definite. Scalars of the exterior algebra over it live in Q(sqrt(delta))
/// with delta = det G.
class InnerProductSpace {
public:
    explicit InnerProductSpace(RationalMatrix gram);

    std::size_t dim() const { return gram_.rows(); }
    const RationalMatrix& gram() const { return gram_; }
    const Rational& delta() const { return delta_; }
    unsigned top_mask() const { return (1u << dim()) - 1u; }

    bool operator==(const InnerProductSpace&) const = default;

private:
    RationalMatrix gram_;
    Rational delta_;
};

/// Element of the exterior algebra, coordinates indexed by basis subsets as
/// bitmasks (bit i = e_i present, factors in increasing index order). Zero
/// coordinates are never stored.
class MultiVector {
public:
    explicit MultiVector(const InnerProductSpace& space) : space_(&space) {}

    static MultiVector scalar(const InnerProductSpace& space, QuadExt value);
    static MultiVector basis_vector(const InnerProductSpace& space, std::size_t i);
    static MultiVector blade(const InnerProductSpace& space, unsigned mask);

    const InnerProductSpace& space() const { return *space_; }
    const std::map<unsigned, QuadExt>& coords() const { return coords_; }
    QuadExt coefficient(unsigned mask) const;
    void set_coefficient(unsigned mask, QuadExt value);

    bool is_zero() const { return coords_.empty(); }
    bool is_homogeneous() const;
    /// Common grade of all stored terms; 0 for the zero element.
    std::size_t degree() const;
    MultiVector grade_part(std::size_t p) const;

    MultiVector operator-() const;
    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    MultiVector& operator*=(const QuadExt& c);
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator*(MultiVector a, const QuadExt& c) { return a *= c; }
    friend MultiVector operator*(const QuadExt& c, MultiVector a) { return a *= c; }

    bool operator==(const MultiVector& o) const;

    std::string str() const;

private:
    const InnerProductSpace* space_;
    std::map<unsigned, QuadExt> coords_;
};

/// Exterior product; repeated basis factors annihilate.
MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Inner product on p-forms: on decomposables the determinant of the mutual
/// Gram matrix, extended bilinearly. Operands must be homogeneous of equal
/// degree (either may be zero).
QuadExt pform_inner(const MultiVector& a, const MultiVector& b);

/// The unit-norm positively oriented top form (1/sqrt(delta)) e_0...e_{m-1}.
MultiVector volume_form(const InnerProductSpace& space);

/// The unique element with <star(a), b> Omega = a ^ b for all b of
/// complementary degree; applied grade by grade to non-homogeneous input.
MultiVector hodge_star(const MultiVector& a);

/// Checks, for each sampled pair (a, b) homogeneous of equal degree p:
/// star 1 = Omega, star star a = (-1)^{p(m-p)} a, <star a, star b> = <a, b>,
/// and <a,b> = star(b ^ star a) = star(a ^ star b).
bool star_properties_check(const InnerProductSpace& space,
                           const std::vector<std::pair<MultiVector, MultiVector>>& samples);

/// Gram-Schmidt through the Hodge star: in the span of v_0, ..., v_k with the
/// leading moment block as Gram matrix, u_k is star(v_0 ^ ... ^ v_{k-1})
/// scaled by sqrt(det)/d_{k,k}. The radicals cancel; the rational result
/// equals gs_determinant(M, k) exactly.
CoeffVector gs_hodge(const MomentTable& M, std::size_t k);

/// Verifies the defining identities of the starred complement u' =
/// star(v_0 ^ ... ^ v_{k-1}): <u', v_i> = 0 for i < k, <u', u'> = d_{k,k},
/// and <u', v_k>^2 = d_{k+1,k+1}, plus positivity of <u', v_k> under the
/// chosen orientation.
bool gs_hodge_identities_check(const MomentTable& M, std::size_t k);

} // namespace orthopoly

#endif
