#include "orthopoly/detkit.hpp"

#include <string>

#include "orthopoly/errors.hpp"

namespace orthopoly {

IndexVector shifted(const IndexVector& z, const Rational& c) {
    IndexVector out;
    out.reserve(z.size());
    for (const Rational& v : z)
        out.push_back(v + c);
    return out;
}

Rational vandermonde_delta(const IndexVector& z) {
    Rational d(1);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            d *= z[j] - z[i];
    return d;
}

RationalMatrix vandermonde_matrix(const IndexVector& z) {
    const std::size_t n = z.size();
    return RationalMatrix::from_entries(
        n, n, [&](std::size_t i, std::size_t j) { return z[j].pow(static_cast<long>(i)); });
}

IndexVector eset(std::size_t n, std::size_t m) {
    if (m > n)
        throw IndexError("eset(" + std::to_string(n) + ", " + std::to_string(m) +
                         ") needs m <= n");
    IndexVector out;
    out.reserve(n);
    for (std::size_t v = 1; v <= n + 1; ++v)
        if (v != m + 1)
            out.push_back(Rational(static_cast<long>(v)));
    return out;
}

Rational eset_ratio(std::size_t n, std::size_t m) {
    return vandermonde_delta(eset(n, m)) / vandermonde_delta(eset(n, n));
}

RationalMatrix pochhammer_matrix(const IndexVector& z) {
    const std::size_t n = z.size();
    return RationalMatrix::from_entries(
        n, n, [&](std::size_t i, std::size_t j) { return pochhammer(z[j], i); });
}

Rational pochhammer_matrix_det(const IndexVector& z) {
    return vandermonde_delta(z);
}

ScaledDeterminant det_gamma(const IndexVector& z) {
    GammaProduct scale;
    for (const Rational& zj : z)
        scale *= GammaProduct::gamma(zj);
    return {scale.canonicalized(), vandermonde_delta(z)};
}

RationalMatrix ratio_matrix(const IndexVector& z, const Rational& w) {
    const std::size_t n = z.size();
    return RationalMatrix::from_entries(n, n, [&](std::size_t i, std::size_t j) {
        Rational den = pochhammer(z[j] + w, i);
        if (den.is_zero())
            throw ZeroDenominator("(z_" + std::to_string(j) + " + w)_" + std::to_string(i) +
                                  " vanishes for z_j = " + z[j].str() + ", w = " + w.str());
        return pochhammer(z[j], i) / den;
    });
}

Rational pochhammer_ratio_det(const IndexVector& z, const Rational& w) {
    const std::size_t n = z.size();
    Rational prefactor(1);
    for (std::size_t j = 0; j < n; ++j) {
        Rational den = pochhammer(z[j] + w, n - 1);
        if (den.is_zero())
            throw ZeroDenominator("(z_" + std::to_string(j) + " + w)_" + std::to_string(n - 1) +
                                  " vanishes for z_j = " + z[j].str() + ", w = " + w.str());
        prefactor *= pochhammer(w, j) / den;
    }
    return prefactor * vandermonde_delta(z);
}

Rational ratio_det_recursive_oracle(const IndexVector& z, const Rational& w) {
    const std::size_t n = z.size();
    if (n <= 1)
        return Rational(1);
    Rational factor(1);
    for (std::size_t i = 1; i < n; ++i) {
        Rational den = (z[i] + w) * (z[0] + w + Rational(static_cast<long>(i - 1)));
        if (den.is_zero())
            throw ZeroDenominator("row reduction hits a zero denominator at i = " +
                                  std::to_string(i) + " for w = " + w.str());
        factor *= w * (z[i] - z[0]) / den;
    }
    IndexVector rest(z.begin() + 1, z.end());
    return factor * ratio_det_recursive_oracle(rest, w + Rational(1));
}

ScaledDeterminant det_beta(const IndexVector& z, const Rational& w) {
    const std::size_t n = z.size();
    GammaProduct scale;
    for (std::size_t j = 0; j < n; ++j) {
        scale *= GammaProduct::gamma(z[j]);
        scale *= GammaProduct::gamma(w + Rational(static_cast<long>(j)));
        scale *= GammaProduct::gamma(z[j] + w + Rational(static_cast<long>(n) - 1), -1);
    }
    return {scale.canonicalized(), vandermonde_delta(z)};
}

ScaledDeterminant det_beta_oracle(const IndexVector& z, const Rational& w) {
    GammaProduct scale;
    for (const Rational& zj : z)
        scale *= beta_gamma(zj, w);
    return {scale.canonicalized(), bareiss_det(ratio_matrix(z, w))};
}

} // namespace orthopoly
