#include "orthopoly/exterior.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <string>

#include "orthopoly/errors.hpp"

namespace orthopoly {

namespace {

std::vector<std::size_t> mask_indices(unsigned mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u)
            idx.push_back(i);
    return idx;
}

/// Parity of the merge of two disjoint increasing index lists: each factor of
/// t moves left past every factor of s above it.
int merge_sign(unsigned s, unsigned t) {
    int swaps = 0;
    for (unsigned rest = t; rest != 0; rest &= rest - 1) {
        unsigned bit = rest & ~(rest - 1);
        swaps += std::popcount(s & ~((bit << 1) - 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

bool same_space(const MultiVector& a, const MultiVector& b) {
    return &a.space() == &b.space() || a.space() == b.space();
}

std::vector<unsigned> grade_masks(std::size_t dim, std::size_t p) {
    std::vector<unsigned> masks;
    const unsigned top = (1u << dim) - 1u;
    for (unsigned m = 0; m <= top; ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == p)
            masks.push_back(m);
    return masks;
}

} // namespace

InnerProductSpace::InnerProductSpace(RationalMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols())
        throw NotSquareError("gram matrix must be square");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = i + 1; j < gram_.cols(); ++j)
            if (gram_.at(i, j) != gram_.at(j, i))
                throw Error("gram matrix must be symmetric");
    std::vector<std::size_t> idx;
    Rational minor(1);
    for (std::size_t t = 1; t <= gram_.rows(); ++t) {
        idx.resize(t);
        std::iota(idx.begin(), idx.end(), 0);
        minor = bareiss_det(gram_.select(idx, idx));
        if (minor.sign() <= 0)
            throw NotPositiveDefinite("leading principal minor of order " + std::to_string(t) +
                                      " is " + minor.str());
    }
    delta_ = gram_.rows() == 0 ? Rational(1) : minor;
}

MultiVector MultiVector::scalar(const InnerProductSpace& space, QuadExt value) {
    MultiVector v(space);
    v.set_coefficient(0, std::move(value));
    return v;
}

MultiVector MultiVector::basis_vector(const InnerProductSpace& space, std::size_t i) {
    if (i >= space.dim())
        throw IndexError("basis index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(space.dim()));
    return blade(space, 1u << i);
}

MultiVector MultiVector::blade(const InnerProductSpace& space, unsigned mask) {
    if (mask > space.top_mask())
        throw IndexError("blade mask out of range");
    MultiVector v(space);
    v.set_coefficient(mask, QuadExt::rational(Rational(1), space.delta()));
    return v;
}

QuadExt MultiVector::coefficient(unsigned mask) const {
    auto it = coords_.find(mask);
    return it == coords_.end() ? QuadExt::rational(Rational(0), space_->delta()) : it->second;
}

void MultiVector::set_coefficient(unsigned mask, QuadExt value) {
    if (value.is_zero())
        coords_.erase(mask);
    else
        coords_[mask] = std::move(value);
}

bool MultiVector::is_homogeneous() const {
    if (coords_.empty())
        return true;
    const int p = std::popcount(coords_.begin()->first);
    for (const auto& [mask, c] : coords_)
        if (std::popcount(mask) != p)
            return false;
    return true;
}

std::size_t MultiVector::degree() const {
    return coords_.empty() ? 0 : static_cast<std::size_t>(std::popcount(coords_.begin()->first));
}

MultiVector MultiVector::grade_part(std::size_t p) const {
    MultiVector out(*space_);
    for (const auto& [mask, c] : coords_)
        if (static_cast<std::size_t>(std::popcount(mask)) == p)
            out.coords_[mask] = c;
    return out;
}

MultiVector MultiVector::operator-() const {
    MultiVector out(*space_);
    for (const auto& [mask, c] : coords_)
        out.coords_[mask] = -c;
    return out;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    if (!same_space(*this, o))
        throw SpaceMismatch("cannot add elements of different spaces");
    for (const auto& [mask, c] : o.coords_)
        set_coefficient(mask, coefficient(mask) + c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    if (!same_space(*this, o))
        throw SpaceMismatch("cannot subtract elements of different spaces");
    for (const auto& [mask, c] : o.coords_)
        set_coefficient(mask, coefficient(mask) - c);
    return *this;
}

MultiVector& MultiVector::operator*=(const QuadExt& c) {
    if (c.is_zero()) {
        coords_.clear();
        return *this;
    }
    for (auto& [mask, x] : coords_)
        x *= c;
    return *this;
}

bool MultiVector::operator==(const MultiVector& o) const {
    return same_space(*this, o) && coords_ == o.coords_;
}

std::string MultiVector::str() const {
    if (coords_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : coords_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (mask != 0) {
            os << " e{";
            bool comma = false;
            for (std::size_t i : mask_indices(mask)) {
                os << (comma ? "," : "") << i;
                comma = true;
            }
            os << "}";
        }
    }
    return os.str();
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    if (!same_space(a, b))
        throw SpaceMismatch("cannot wedge elements of different spaces");
    MultiVector out(a.space());
    for (const auto& [s, ca] : a.coords()) {
        for (const auto& [t, cb] : b.coords()) {
            if (s & t)
                continue;
            QuadExt term = ca * cb;
            if (merge_sign(s, t) < 0)
                term = -term;
            out.set_coefficient(s | t, out.coefficient(s | t) + term);
        }
    }
    return out;
}

QuadExt pform_inner(const MultiVector& a, const MultiVector& b) {
    if (!same_space(a, b))
        throw SpaceMismatch("inner product of elements of different spaces");
    const Rational& delta = a.space().delta();
    if (a.is_zero() || b.is_zero())
        return QuadExt::rational(Rational(0), delta);
    if (!a.is_homogeneous() || !b.is_homogeneous() || a.degree() != b.degree())
        throw DegreeMismatch("inner product needs homogeneous operands of equal degree");
    const RationalMatrix& g = a.space().gram();
    QuadExt sum = QuadExt::rational(Rational(0), delta);
    for (const auto& [s, ca] : a.coords()) {
        std::vector<std::size_t> rows = mask_indices(s);
        for (const auto& [t, cb] : b.coords()) {
            Rational det = bareiss_det(g.select(rows, mask_indices(t)));
            if (det.is_zero())
                continue;
            sum += ca * cb * QuadExt::rational(det, delta);
        }
    }
    return sum;
}

MultiVector volume_form(const InnerProductSpace& space) {
    MultiVector omega(space);
    omega.set_coefficient(space.top_mask(),
                          QuadExt(Rational(0), space.delta().reciprocal(), space.delta()));
    return omega;
}

namespace {

MultiVector hodge_star_homogeneous(const MultiVector& a, std::size_t p) {
    const InnerProductSpace& space = a.space();
    const std::size_t m = space.dim();
    const Rational& delta = space.delta();
    const std::vector<unsigned> blades = grade_masks(m, m - p);
    const std::size_t n = blades.size();

    RationalMatrix gq(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::size_t> rows = mask_indices(blades[u]);
        for (std::size_t v = 0; v < n; ++v)
            gq.at(u, v) = bareiss_det(space.gram().select(rows, mask_indices(blades[v])));
    }

    // <star a, blade_u> Omega = a ^ blade_u, so with a ^ blade_u =
    // gamma_u e_top = gamma_u sqrt(delta) Omega the coordinates solve
    // Gq c = gamma sqrt(delta), split into rational and radical components.
    std::vector<Rational> rat(n), rad(n);
    const QuadExt root(Rational(0), Rational(1), delta);
    for (std::size_t u = 0; u < n; ++u) {
        QuadExt gamma = wedge(a, MultiVector::blade(space, blades[u])).coefficient(space.top_mask());
        QuadExt rhs = gamma * root;
        rat[u] = rhs.rational_part();
        rad[u] = rhs.radical_part();
    }
    std::vector<Rational> crat = solve_linear(gq, rat);
    std::vector<Rational> crad = solve_linear(gq, rad);

    MultiVector out(space);
    for (std::size_t v = 0; v < n; ++v)
        out.set_coefficient(blades[v], QuadExt(crat[v], crad[v], delta));
    return out;
}

} // namespace

MultiVector hodge_star(const MultiVector& a) {
    const std::size_t m = a.space().dim();
    MultiVector out(a.space());
    for (std::size_t p = 0; p <= m; ++p) {
        MultiVector part = a.grade_part(p);
        if (!part.is_zero())
            out += hodge_star_homogeneous(part, p);
    }
    return out;
}

bool star_properties_check(const InnerProductSpace& space,
                           const std::vector<std::pair<MultiVector, MultiVector>>& samples) {
    const std::size_t m = space.dim();
    const QuadExt one = QuadExt::rational(Rational(1), space.delta());
    if (hodge_star(MultiVector::scalar(space, one)) != volume_form(space))
        return false;
    for (const auto& [a, b] : samples) {
        if (!a.is_homogeneous() || !b.is_homogeneous())
            return false;
        if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
            return false;
        const std::size_t p = a.is_zero() ? b.degree() : a.degree();
        const int flip = (p * (m - p)) % 2 == 0 ? 1 : -1;

        MultiVector twice = hodge_star(hodge_star(a));
        if (twice != (flip > 0 ? a : -a))
            return false;

        MultiVector sa = hodge_star(a);
        MultiVector sb = hodge_star(b);
        QuadExt ab = pform_inner(a, b);
        if (pform_inner(sa, sb) != ab)
            return false;

        if (hodge_star(wedge(b, sa)) != MultiVector::scalar(space, ab))
            return false;
        if (hodge_star(wedge(a, sb)) != MultiVector::scalar(space, ab))
            return false;

        // Defining relation against the full complementary basis.
        MultiVector omega = volume_form(space);
        for (unsigned mask : grade_masks(m, m - p)) {
            MultiVector beta = MultiVector::blade(space, mask);
            if (omega * pform_inner(sa, beta) != wedge(a, beta))
                return false;
        }
    }
    return true;
}

CoeffVector gs_hodge(const MomentTable& M, std::size_t k) {
    if (k >= M.size())
        throw IndexError("gs_hodge degree " + std::to_string(k) + " exceeds table size " +
                         std::to_string(M.size()));
    MomentTable block = M.leading(k + 1);
    std::vector<std::size_t> idx;
    for (std::size_t t = 1; t <= k + 1; ++t) {
        idx.resize(t);
        std::iota(idx.begin(), idx.end(), 0);
        if (bareiss_det(block.moments().select(idx, idx)).sign() <= 0)
            throw DependentBasis("leading moment minor of order " + std::to_string(t) +
                                 " is not positive");
    }
    InnerProductSpace space(block.moments());
    Rational dkk = gram_minor(block, k, k);

    MultiVector starred = hodge_star(MultiVector::blade(space, (1u << k) - 1u));
    const QuadExt scale(Rational(0), dkk.reciprocal(), space.delta());
    std::vector<Rational> coeffs(k + 1);
    for (std::size_t v = 0; v <= k; ++v) {
        QuadExt c = starred.coefficient(1u << v) * scale;
        if (!c.is_rational())
            throw Error("radical failed to cancel in Hodge-star orthogonalization");
        coeffs[v] = c.rational_part();
    }
    return CoeffVector{std::move(coeffs)};
}

bool gs_hodge_identities_check(const MomentTable& M, std::size_t k) {
    if (k >= M.size())
        throw IndexError("gs_hodge_identities_check degree exceeds table size");
    MomentTable block = M.leading(k + 1);
    InnerProductSpace space(block.moments());
    const Rational& delta = space.delta();
    Rational dkk = gram_minor(block, k, k);

    MultiVector starred = hodge_star(MultiVector::blade(space, (1u << k) - 1u));
    for (std::size_t i = 0; i < k; ++i)
        if (!pform_inner(starred, MultiVector::basis_vector(space, i)).is_zero())
            return false;
    if (pform_inner(starred, starred) != QuadExt::rational(dkk, delta))
        return false;
    QuadExt last = pform_inner(starred, MultiVector::basis_vector(space, k));
    if (last * last != QuadExt::rational(delta, delta))
        return false;
    const Rational& lead =
        last.radical_part().is_zero() ? last.rational_part() : last.radical_part();
    return lead.sign() > 0;
}

} // namespace orthopoly
