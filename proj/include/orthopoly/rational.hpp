#ifndef ORTHOPOLY_RATIONAL_HPP
#define ORTHOPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "orthopoly/errors.hpp"

namespace orthopoly {

/// Arbitrary-precision rational. Always reduced, denominator > 0, zero is 0/1.
/// Serializes as "p/q" ("p" when q = 1), optional leading '-', no whitespace.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, integers are rationals
    Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    Rational(mpz_class num, mpz_class den) { assign(std::move(num), std::move(den)); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(const std::string& s);
    std::string str() const { return q_.get_str(); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    Rational reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of zero");
        return Rational(mpq_class(1)) /= *this;
    }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(long e) const;

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    /// Exact square root when the value is a perfect square of a rational.
    std::optional<Rational> sqrt() const;

private:
    void assign(mpz_class num, mpz_class den) {
        if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
        q_.get_num() = std::move(num);
        q_.get_den() = std::move(den);
        q_.canonicalize();
    }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Ascending factorial a(a+1)...(a+n-1); empty product for n = 0.
Rational pochhammer(const Rational& a, unsigned long n);

/// The concatenation identity (a)_n (a+n)_m = (a)_{n+m}, exposed as a testable check.
bool pochhammer_concat_check(const Rational& a, unsigned long n, unsigned long m);

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long m);

/// 2^e for an arbitrary-precision integer exponent (negative allowed).
Rational pow2(const mpz_class& e);

namespace literals {
inline Rational operator""_q(const char* s, std::size_t) { return Rational::parse(s); }
} // namespace literals

} // namespace orthopoly

#endif
