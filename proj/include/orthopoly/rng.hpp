#ifndef ORTHOPOLY_RNG_HPP
#define ORTHOPOLY_RNG_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "orthopoly/matrix.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Deterministic sampler for the randomized identity suites. mt19937_64 has a
/// fully specified output sequence, and all derived draws use plain modulo
/// reduction, so a seed pins every sample on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Numerator in [-num_mag, num_mag], denominator in [1, den_max].
    Rational rational(long num_mag, long den_max) {
        return Rational(range(-num_mag, num_mag), range(1, den_max));
    }

    Rational nonzero_rational(long num_mag, long den_max) {
        for (;;) {
            Rational r = rational(num_mag, den_max);
            if (!r.is_zero())
                return r;
        }
    }

    /// Strictly positive rational with numerator in [1, num_mag].
    Rational positive_rational(long num_mag, long den_max) {
        return Rational(range(1, num_mag), range(1, den_max));
    }

    std::vector<Rational> distinct_rationals(std::size_t n, long num_mag, long den_max) {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = rational(num_mag, den_max);
            bool seen = false;
            for (const Rational& x : out)
                if (x == r)
                    seen = true;
            if (!seen)
                out.push_back(std::move(r));
        }
        return out;
    }

    std::vector<Rational> distinct_positive_rationals(std::size_t n, long num_mag, long den_max) {
        std::vector<Rational> out;
        while (out.size() < n) {
            Rational r = positive_rational(num_mag, den_max);
            bool seen = false;
            for (const Rational& x : out)
                if (x == r)
                    seen = true;
            if (!seen)
                out.push_back(std::move(r));
        }
        return out;
    }

    /// Fisher-Yates permutation of 0, ..., n-1.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = n; i > 1; --i)
            std::swap(p[i - 1], p[next() % i]);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

/// Random symmetric positive definite Gram matrix: small rational off-diagonal
/// entries under a strictly dominant diagonal. Determinants are rarely perfect
/// squares, which keeps the radical arithmetic honest.
inline RationalMatrix random_pd_gram(SeededRng& rng, std::size_t dim) {
    RationalMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            Rational v = rng.rational(3, 3);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    for (std::size_t i = 0; i < dim; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < dim; ++j)
            if (j != i)
                row += g.at(i, j).abs();
        g.at(i, i) = row + rng.positive_rational(4, 2);
    }
    return g;
}

} // namespace orthopoly

#endif
