#include "orthopoly/gram_schmidt.hpp"

#include <numeric>
#include <string>

#include "orthopoly/errors.hpp"

namespace orthopoly {

MomentTable::MomentTable(RationalMatrix moments, GammaProduct scale)
    : moments_(std::move(moments)), scale_(std::move(scale)) {
    if (moments_.rows() != moments_.cols())
        throw NotSquareError("moment table must be square, got " +
                             std::to_string(moments_.rows()) + "x" +
                             std::to_string(moments_.cols()));
    for (std::size_t i = 0; i < moments_.rows(); ++i)
        for (std::size_t j = i + 1; j < moments_.cols(); ++j)
            if (moments_.at(i, j) != moments_.at(j, i))
                throw Error("moment table must be symmetric; entries (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") disagree");
}

MomentTable MomentTable::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != size())
        throw IndexError("permutation length " + std::to_string(perm.size()) +
                         " does not match table size " + std::to_string(size()));
    std::vector<bool> seen(size(), false);
    for (std::size_t p : perm) {
        if (p >= size() || seen[p])
            throw IndexError("not a permutation of 0.." + std::to_string(size() - 1));
        seen[p] = true;
    }
    RationalMatrix m = moments_.select(perm, perm);
    return MomentTable(std::move(m), scale_);
}

MomentTable MomentTable::leading(std::size_t size) const {
    if (size > this->size())
        throw IndexError("leading block of size " + std::to_string(size) +
                         " exceeds table size " + std::to_string(this->size()));
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    return MomentTable(moments_.select(idx, idx), scale_);
}

Rational table_inner(const MomentTable& M, const std::vector<Rational>& a,
                     const std::vector<Rational>& b) {
    if (a.size() > M.size() || b.size() > M.size())
        throw IndexError("coefficient vector longer than the moment table");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * b[j] * M.at(i, j);
    }
    return s;
}

Rational gram_minor(const MomentTable& M, std::size_t k, std::size_t omit) {
    // Columns run over {0..k} minus omit, so k == size() is still in range
    // when omit == k: that is the full leading k x k determinant d_{k,k}.
    const std::size_t max_col = omit == k ? k : k + 1;
    if (omit > k || max_col > M.size())
        throw IndexError("gram_minor(k=" + std::to_string(k) + ", omit=" + std::to_string(omit) +
                         ") out of range for table size " + std::to_string(M.size()));
    std::vector<std::size_t> rows(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> cols;
    cols.reserve(k);
    for (std::size_t c = 0; c <= k; ++c)
        if (c != omit)
            cols.push_back(c);
    return bareiss_det(M.moments().select(rows, cols));
}

CoeffVector gs_recursive(const MomentTable& M, std::size_t k) {
    if (k >= M.size())
        throw IndexError("gs_recursive degree " + std::to_string(k) + " exceeds table size " +
                         std::to_string(M.size()));
    std::vector<std::vector<Rational>> us;
    std::vector<Rational> norms;
    for (std::size_t t = 0; t <= k; ++t) {
        std::vector<Rational> u(t + 1, Rational(0));
        u[t] = Rational(1);
        for (std::size_t i = 0; i < t; ++i) {
            std::vector<Rational> vt(t + 1, Rational(0));
            vt[t] = Rational(1);
            Rational proj = table_inner(M, vt, us[i]) / norms[i];
            for (std::size_t j = 0; j <= i; ++j)
                u[j] -= proj * us[i][j];
        }
        Rational norm = table_inner(M, u, u);
        if (norm.is_zero() && t < k)
            throw DependentBasis("<u_" + std::to_string(t) + ", u_" + std::to_string(t) +
                                 "> vanishes; basis is not linearly independent");
        us.push_back(std::move(u));
        norms.push_back(std::move(norm));
    }
    return CoeffVector{std::move(us[k])};
}

CoeffVector gs_determinant(const MomentTable& M, std::size_t k) {
    if (k >= M.size())
        throw IndexError("gs_determinant degree " + std::to_string(k) + " exceeds table size " +
                         std::to_string(M.size()));
    Rational dkk = gram_minor(M, k, k);
    if (dkk.is_zero())
        throw DependentBasis("Gram determinant d_{" + std::to_string(k) + "," + std::to_string(k) +
                             "} vanishes; basis is not linearly independent");
    std::vector<Rational> coeffs(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        Rational c = gram_minor(M, k, i) / dkk;
        coeffs[i] = ((k - i) % 2 == 0) ? c : -c;
    }
    return CoeffVector{std::move(coeffs)};
}

bool orthogonality_check(const MomentTable& M, const std::vector<CoeffVector>& vectors) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (!table_inner(M, vectors[i].coeffs, vectors[j].coeffs).is_zero())
                return false;
    return true;
}

bool permutation_invariance_check(const MomentTable& M, std::size_t k,
                                  const std::vector<std::size_t>& perm) {
    if (perm.size() != k)
        throw IndexError("permutation must cover exactly v_0, ..., v_{k-1}");
    std::vector<std::size_t> full(M.size());
    std::iota(full.begin(), full.end(), 0);
    std::copy(perm.begin(), perm.end(), full.begin());
    CoeffVector reference = gs_determinant(M, k);
    CoeffVector permuted = gs_determinant(M.permuted(full), k);
    std::vector<Rational> mapped(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        mapped[full[i]] = permuted.coeffs[i];
    return mapped == reference.coeffs;
}

} // namespace orthopoly
