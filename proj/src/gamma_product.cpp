#include "orthopoly/gamma_product.hpp"

#include <sstream>

#include "orthopoly/errors.hpp"

namespace orthopoly {

GammaProduct GammaProduct::from_rational(Rational c) {
    GammaProduct g;
    g.coeff_ = std::move(c);
    return g;
}

GammaProduct GammaProduct::gamma(const Rational& arg, long exp) {
    if (arg.sign() <= 0)
        throw PoleError("Gamma argument must be positive, got " + arg.str());
    GammaProduct g;
    if (exp != 0)
        g.factors_[arg] = exp;
    return g;
}

GammaProduct GammaProduct::two_pow(Rational e) {
    GammaProduct g;
    g.two_exp_ = std::move(e);
    return g;
}

void GammaProduct::insert_factor(const Rational& arg, long exp) {
    auto it = factors_.find(arg);
    if (it == factors_.end()) {
        if (exp != 0)
            factors_[arg] = exp;
        return;
    }
    it->second += exp;
    if (it->second == 0)
        factors_.erase(it);
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
    coeff_ *= o.coeff_;
    two_exp_ += o.two_exp_;
    for (const auto& [arg, exp] : o.factors_)
        insert_factor(arg, exp);
    return *this;
}

GammaProduct& GammaProduct::operator*=(const Rational& c) {
    coeff_ *= c;
    return *this;
}

GammaProduct GammaProduct::inverse() const {
    if (coeff_.is_zero())
        throw DivisionByZero("inverse of zero GammaProduct");
    GammaProduct g;
    g.coeff_ = coeff_.reciprocal();
    g.two_exp_ = -two_exp_;
    for (const auto& [arg, exp] : factors_)
        g.factors_[arg] = -exp;
    return g;
}

GammaProduct GammaProduct::canonicalized() const {
    GammaProduct g;
    g.coeff_ = coeff_;
    if (g.coeff_.is_zero())
        return g;
    for (const auto& [arg, exp] : factors_) {
        // Gamma(a) = (r)_k * Gamma(r) with r = a - floor(a - epsilon) in (0,1].
        mpz_class k_z = arg.floor();
        Rational r = arg - Rational(k_z);
        if (r.is_zero()) {
            r = Rational(1);
            k_z -= 1;
        }
        if (!mpz_fits_ulong_p(k_z.get_mpz_t()))
            throw ParameterOutOfRange("Gamma argument too large to canonicalize: " + arg.str());
        unsigned long k = mpz_get_ui(k_z.get_mpz_t());
        g.coeff_ *= pochhammer(r, k).pow(exp);
        g.insert_factor(r, exp);
    }
    // Fold the integral part of the power of two into the coefficient.
    mpz_class q = two_exp_.floor();
    g.two_exp_ = two_exp_ - Rational(q);
    g.coeff_ *= pow2(q);
    return g;
}

bool GammaProduct::is_canonical() const {
    if (coeff_.is_zero())
        return two_exp_.is_zero() && factors_.empty();
    if (two_exp_.sign() < 0 || two_exp_ >= Rational(1))
        return false;
    for (const auto& [arg, exp] : factors_) {
        if (exp == 0)
            return false;
        if (arg.sign() <= 0 || arg > Rational(1))
            return false;
    }
    return true;
}

long GammaProduct::exponent_of(const Rational& arg) const {
    auto it = factors_.find(arg);
    return it == factors_.end() ? 0 : it->second;
}

std::optional<Rational> GammaProduct::as_rational() const {
    GammaProduct c = canonicalized();
    if (!c.two_exp_.is_zero())
        return std::nullopt;
    for (const auto& [arg, exp] : c.factors_)
        if (arg != Rational(1))
            return std::nullopt;
    return c.coeff_;
}

std::string GammaProduct::str() const {
    std::ostringstream os;
    os << coeff_.str();
    if (!two_exp_.is_zero())
        os << " * 2^(" << two_exp_.str() << ")";
    for (const auto& [arg, exp] : factors_) {
        os << " * Gamma(" << arg.str() << ")";
        if (exp != 1)
            os << "^" << exp;
    }
    return os.str();
}

GammaProduct beta_gamma(const Rational& a, const Rational& b) {
    return GammaProduct::gamma(a) * GammaProduct::gamma(b) * GammaProduct::gamma(a + b, -1);
}

std::ostream& operator<<(std::ostream& os, const GammaProduct& g) {
    return os << g.str();
}

} // namespace orthopoly
