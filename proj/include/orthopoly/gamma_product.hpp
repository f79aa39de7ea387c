#ifndef ORTHOPOLY_GAMMA_PRODUCT_HPP
#define ORTHOPOLY_GAMMA_PRODUCT_HPP

#include <map>
#include <optional>
#include <string>

#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Formal product  coeff * 2^two_exponent * prod Gamma(arg)^exp  with rational
/// coeff, rational two_exponent, and positive rational Gamma arguments.
///
/// Canonical form: every Gamma argument lies in (0, 1] (reduced with
/// Gamma(a+1) = a*Gamma(a)), two_exponent lies in [0, 1), and no factor has a
/// zero exponent. Gamma(1) is kept as a formal factor, never evaluated.
/// Equality is structural, so values should be compared via canonicalized().
class GammaProduct {
public:
    GammaProduct() : coeff_(1) {}

    static GammaProduct from_rational(Rational c);
    /// A single factor Gamma(arg)^exp. Non-positive arguments are rejected:
    /// integers are genuine poles, and negative non-integers lie outside the
    /// validity region of every moment functional handled here.
    static GammaProduct gamma(const Rational& arg, long exp = 1);
    static GammaProduct two_pow(Rational e);

    GammaProduct& operator*=(const GammaProduct& o);
    GammaProduct& operator*=(const Rational& c);
    friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
    friend GammaProduct operator*(GammaProduct a, const Rational& c) { return a *= c; }
    friend GammaProduct operator*(const Rational& c, GammaProduct a) { return a *= c; }

    GammaProduct inverse() const;
    friend GammaProduct operator/(GammaProduct a, const GammaProduct& b) {
        return a *= b.inverse();
    }

    GammaProduct canonicalized() const;
    bool is_canonical() const;

    const Rational& coeff() const { return coeff_; }
    const Rational& two_exponent() const { return two_exp_; }
    const std::map<Rational, long>& factors() const { return factors_; }
    long exponent_of(const Rational& arg) const;

    bool is_zero() const { return coeff_.is_zero(); }

    /// Exact rational value, defined when the canonical form carries no
    /// transcendental content (only Gamma(1) factors, integral power of two).
    std::optional<Rational> as_rational() const;

    std::string str() const;

    friend bool operator==(const GammaProduct&, const GammaProduct&) = default;

private:
    Rational coeff_;
    Rational two_exp_;
    std::map<Rational, long> factors_;

    void insert_factor(const Rational& arg, long exp);
};

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) as a formal product.
GammaProduct beta_gamma(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const GammaProduct& g);

} // namespace orthopoly

#endif
