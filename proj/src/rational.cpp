#include "orthopoly/rational.hpp"

#include <cctype>
#include <ostream>

namespace orthopoly {

Rational Rational::parse(const std::string& s) {
    // ^-?[0-9]+(/[0-9]+)?$ with nonzero denominator
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw ParseError("invalid rational: \"" + s + "\"");
    std::string num = s.substr(0, i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') throw ParseError("invalid rational: \"" + s + "\"");
        std::size_t den_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size())
            throw ParseError("invalid rational: \"" + s + "\"");
        den = s.substr(den_begin);
    }
    return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    const auto exp = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational(std::move(n), std::move(d));
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
    return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational p(1);
    Rational term = a;
    for (unsigned long i = 0; i < n; ++i, term += Rational(1)) p *= term;
    return p;
}

bool pochhammer_concat_check(const Rational& a, unsigned long n, unsigned long m) {
    return pochhammer(a, n) * pochhammer(a + Rational(static_cast<long>(n)), m) ==
           pochhammer(a, n + m);
}

Rational factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(std::move(r));
}

Rational binomial(unsigned long n, unsigned long m) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, m);
    return Rational(std::move(r));
}

Rational pow2(const mpz_class& e) {
    const bool neg = sgn(e) < 0;
    const mpz_class mag = ::abs(e);
    if (!mag.fits_ulong_p()) throw ParameterOutOfRange("power of two exponent too large");
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), mpz_class(1).get_mpz_t(), mag.get_ui());
    return neg ? Rational(std::move(p)).reciprocal() : Rational(std::move(p));
}

} // namespace orthopoly
