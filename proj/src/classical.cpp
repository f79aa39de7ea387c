#include "orthopoly/classical.hpp"

#include <sstream>

#include "orthopoly/errors.hpp"

namespace orthopoly {

std::string family_name(Family f) {
    switch (f) {
    case Family::hermite:
        return "hermite";
    case Family::laguerre:
        return "laguerre";
    case Family::jacobi:
        return "jacobi";
    }
    throw Error("unreachable family");
}

MomentFunctional MomentFunctional::hermite() {
    return {Family::hermite, Rational(0), Rational(0)};
}

MomentFunctional MomentFunctional::laguerre(Rational alpha) {
    if (alpha <= Rational(-1))
        throw ParameterOutOfRange("laguerre needs alpha > -1, got " + alpha.str());
    return {Family::laguerre, std::move(alpha), Rational(0)};
}

MomentFunctional MomentFunctional::jacobi(Rational alpha, Rational beta) {
    if (alpha <= Rational(-1))
        throw ParameterOutOfRange("jacobi needs alpha > -1, got " + alpha.str());
    if (beta <= Rational(-1))
        throw ParameterOutOfRange("jacobi needs beta > -1, got " + beta.str());
    return {Family::jacobi, std::move(alpha), std::move(beta)};
}

MomentFunctional preset(const std::string& name, std::optional<Rational> lambda) {
    if (name == "gegenbauer") {
        if (!lambda)
            throw ParameterOutOfRange("gegenbauer needs a lambda parameter");
        if (*lambda <= Rational(-1, 2))
            throw ParameterOutOfRange("gegenbauer needs lambda > -1/2, got " + lambda->str());
        Rational a = *lambda - Rational(1, 2);
        return MomentFunctional::jacobi(a, a);
    }
    if (lambda)
        throw ParameterOutOfRange("lambda only applies to the gegenbauer preset");
    if (name == "legendre")
        return MomentFunctional::jacobi(Rational(0), Rational(0));
    if (name == "chebyshev1")
        return MomentFunctional::jacobi(Rational(-1, 2), Rational(-1, 2));
    if (name == "chebyshev2")
        return MomentFunctional::jacobi(Rational(1, 2), Rational(1, 2));
    throw ParseError("unknown preset: " + name);
}

Rational moment(const MomentFunctional& F, std::size_t i, std::size_t j) {
    switch (F.family) {
    case Family::hermite:
        if ((i + j) % 2 != 0)
            return Rational(0);
        return pochhammer(Rational(1, 2), (i + j) / 2);
    case Family::laguerre:
        return pochhammer(F.alpha + 1, i + j);
    case Family::jacobi:
        return pochhammer(F.alpha + 1, i + j) / pochhammer(F.alpha + F.beta + 2, i + j);
    }
    throw Error("unreachable family");
}

GammaProduct moment_scale(const MomentFunctional& F) {
    switch (F.family) {
    case Family::hermite:
        return GammaProduct::gamma(Rational(1, 2));
    case Family::laguerre:
        return GammaProduct::gamma(F.alpha + 1);
    case Family::jacobi:
        return GammaProduct::two_pow(F.alpha + F.beta + 1) * beta_gamma(F.alpha + 1, F.beta + 1);
    }
    throw Error("unreachable family");
}

MomentTable moment_table(const MomentFunctional& F, std::size_t size) {
    RationalMatrix m = RationalMatrix::from_entries(
        size, size, [&](std::size_t i, std::size_t j) { return moment(F, i, j); });
    return MomentTable(std::move(m), moment_scale(F));
}

Polynomial::Polynomial(Basis basis, std::vector<Rational> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational v(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        v = v * at + coeffs_[i];
    return v;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (Rational& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (basis_ != o.basis_)
        throw BasisMismatch("cannot add polynomials over different bases");
    std::vector<Rational> sum(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sum[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        sum[i] += o.coeffs_[i];
    return Polynomial(basis_, std::move(sum));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial neg = o;
    neg *= Rational(-1);
    return *this + neg;
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && i > 0;
        if (!unit)
            os << mag.str();
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::string Polynomial::str() const {
    return str(basis_ == Basis::shifted ? "t" : "x");
}

Polynomial to_monomial(const Polynomial& p) {
    if (p.basis() == Basis::monomial)
        return p;
    // Horner in t = (1-x)/2: r <- r*(1/2 - x/2) + c_m, highest power first.
    std::vector<Rational> r;
    const Rational half(1, 2);
    for (std::size_t m = p.coeffs().size(); m-- > 0;) {
        std::vector<Rational> next(r.size() + 1, Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i] += r[i] * half;
            next[i + 1] -= r[i] * half;
        }
        if (next.empty())
            next.push_back(Rational(0));
        next[0] += p.coeffs()[m];
        r = std::move(next);
    }
    return Polynomial(Basis::monomial, std::move(r));
}

Polynomial closed_hermite(std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        std::size_t p = n - 2 * m;
        Rational term = pow2(mpz_class(static_cast<long>(p))) /
                        (factorial(static_cast<unsigned long>(m)) *
                         factorial(static_cast<unsigned long>(p)));
        c[p] = (m % 2 == 0) ? term : -term;
    }
    return Polynomial(Basis::monomial, std::move(c));
}

Polynomial closed_laguerre(std::size_t n, const Rational& alpha) {
    if (alpha <= Rational(-1))
        throw ParameterOutOfRange("laguerre needs alpha > -1, got " + alpha.str());
    std::vector<Rational> c(n + 1, Rational(0));
    Rational top = pochhammer(alpha + 1, n);
    for (std::size_t m = 0; m <= n; ++m) {
        Rational term = top / (factorial(static_cast<unsigned long>(m)) *
                               factorial(static_cast<unsigned long>(n - m)) *
                               pochhammer(alpha + 1, m));
        c[m] = (m % 2 == 0) ? term : -term;
    }
    return Polynomial(Basis::monomial, std::move(c));
}

Polynomial closed_jacobi(std::size_t n, const Rational& alpha, const Rational& beta) {
    if (alpha <= Rational(-1) || beta <= Rational(-1))
        throw ParameterOutOfRange("jacobi needs alpha > -1 and beta > -1");
    std::vector<Rational> c(n + 1, Rational(0));
    Rational top = pochhammer(alpha + 1, n);
    for (std::size_t m = 0; m <= n; ++m) {
        Rational term = top * pochhammer(alpha + beta + Rational(static_cast<long>(n)) + 1, m) /
                        (factorial(static_cast<unsigned long>(m)) *
                         factorial(static_cast<unsigned long>(n - m)) * pochhammer(alpha + 1, m));
        c[m] = (m % 2 == 0) ? term : -term;
    }
    return Polynomial(Basis::shifted, std::move(c));
}

Polynomial closed_form(const MomentFunctional& F, std::size_t n) {
    switch (F.family) {
    case Family::hermite:
        return closed_hermite(n);
    case Family::laguerre:
        return closed_laguerre(n, F.alpha);
    case Family::jacobi:
        return closed_jacobi(n, F.alpha, F.beta);
    }
    throw Error("unreachable family");
}

Polynomial gs_polynomial(const MomentFunctional& F, std::size_t n) {
    MomentTable M = moment_table(F, n + 1);
    CoeffVector u = gs_determinant(M, n);
    Basis basis = F.family == Family::jacobi ? Basis::shifted : Basis::monomial;
    return Polynomial(basis, std::move(u.coeffs));
}

Rational gs_scaling_factor(const MomentFunctional& F, std::size_t n) {
    Rational nf = factorial(static_cast<unsigned long>(n));
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    switch (F.family) {
    case Family::hermite:
        return nf / pow2(mpz_class(static_cast<long>(n)));
    case Family::laguerre:
        return sign * nf;
    case Family::jacobi:
        return sign * nf /
               pochhammer(F.alpha + F.beta + Rational(static_cast<long>(n)) + 1, n);
    }
    throw Error("unreachable family");
}

bool scaling_check(const MomentFunctional& F, std::size_t n) {
    return gs_polynomial(F, n) == gs_scaling_factor(F, n) * closed_form(F, n);
}

Rational laguerre_cofactor_ratio(const Rational& alpha, std::size_t n, std::size_t m) {
    if (m > n)
        throw IndexError("cofactor ratio needs m <= n");
    return factorial(static_cast<unsigned long>(n)) * pochhammer(alpha + 1, n) /
           (factorial(static_cast<unsigned long>(m)) *
            factorial(static_cast<unsigned long>(n - m)) * pochhammer(alpha + 1, m));
}

Polynomial hermite_parity_gs(std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    const std::size_t half = n / 2;
    const Rational alpha = (n % 2 == 0) ? Rational(-1, 2) : Rational(1, 2);
    for (std::size_t m = 0; m <= half; ++m) {
        Rational term = laguerre_cofactor_ratio(alpha, half, m);
        std::size_t power = (n % 2 == 0) ? 2 * m : 2 * m + 1;
        c[power] = ((half - m) % 2 == 0) ? term : -term;
    }
    return Polynomial(Basis::monomial, std::move(c));
}

bool hermite_cofactor_ratio_check(std::size_t n) {
    MomentTable table = moment_table(MomentFunctional::hermite(), n + 1);
    const std::size_t half = n / 2;
    const bool even = n % 2 == 0;

    // Reorder so the opposite-parity monomials come first and the block
    // carrying x^n comes last.
    std::vector<std::size_t> order;
    order.reserve(n + 1);
    for (std::size_t i = even ? 1 : 0; i <= n; i += 2)
        order.push_back(i);
    const std::size_t block = order.size();
    for (std::size_t i = even ? 0 : 1; i <= n; i += 2)
        order.push_back(i);
    MomentTable permuted = table.permuted(order);

    for (std::size_t i = 0; i < block; ++i)
        if (!gram_minor(permuted, n, i).is_zero())
            return false;

    const Rational alpha = even ? Rational(-1, 2) : Rational(1, 2);
    Rational dnn = gram_minor(permuted, n, n);
    for (std::size_t m = 0; m <= half; ++m) {
        Rational ratio = gram_minor(permuted, n, block + m) / dnn;
        if (ratio != laguerre_cofactor_ratio(alpha, half, m))
            return false;
        unsigned long low = even ? 2 * m : 2 * m + 1;
        Rational factorial_form =
            factorial(static_cast<unsigned long>(n)) /
            (pow2(mpz_class(2 * static_cast<long>(half - m))) *
             factorial(static_cast<unsigned long>(half - m)) * factorial(low));
        if (ratio != factorial_form)
            return false;
    }
    return true;
}

} // namespace orthopoly
