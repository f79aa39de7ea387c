#ifndef ORTHOPOLY_QUADEXT_HPP
#define ORTHOPOLY_QUADEXT_HPP

#include <optional>
#include <ostream>
#include <string>

#include "orthopoly/errors.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Element a + b*sqrt(delta) of a real quadratic extension of the rationals.
/// The radicand delta is fixed positive and shared by all operands of any
/// binary operation. When delta is a perfect square the radical part is folded
/// into the rational part on construction, so componentwise equality agrees
/// with equality of values.
class QuadExt {
public:
    QuadExt() : delta_(1) {}
    QuadExt(Rational a, Rational b, Rational delta)
        : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {
        if (delta_.sign() <= 0)
            throw ParameterOutOfRange("radicand must be positive, got " + delta_.str());
        if (auto root = delta_.sqrt()) {
            a_ += b_ * *root;
            b_ = Rational(0);
            delta_ = Rational(1);
        }
    }
    static QuadExt rational(Rational a, const Rational& delta) {
        return QuadExt(std::move(a), Rational(0), delta);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& radicand() const { return delta_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt operator-() const { return make(-a_, -b_, delta_); }

    QuadExt& operator+=(const QuadExt& o) {
        merge_radicand(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        merge_radicand(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        merge_radicand(o);
        Rational a = a_ * o.a_ + b_ * o.b_ * delta_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        merge_radicand(o);
        Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * delta_;
        if (norm.is_zero()) {
            if (o.is_zero())
                throw DivisionByZero("division by zero in quadratic extension");
            // Nonzero element with zero field norm would force sqrt(delta)
            // rational, which construction already folded away.
            throw DivisionByZero("zero norm for nonzero element");
        }
        QuadExt conj = make(o.a_, -o.b_, delta_);
        *this *= conj;
        a_ /= norm;
        b_ /= norm;
        return *this;
    }

    QuadExt& operator*=(const Rational& c) {
        a_ *= c;
        b_ *= c;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator*(QuadExt x, const Rational& c) { return x *= c; }
    friend QuadExt operator*(const Rational& c, QuadExt x) { return x *= c; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (!x.compatible(y))
            return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const {
        if (b_.is_zero())
            return a_.str();
        std::string s;
        if (!a_.is_zero())
            s = a_.str() + " + ";
        return s + "(" + b_.str() + ")*sqrt(" + delta_.str() + ")";
    }

private:
    Rational a_;
    Rational b_;
    Rational delta_;

    // Bypasses the perfect-square fold; only used when delta_ is already
    // normalized.
    static QuadExt make(Rational a, Rational b, Rational delta) {
        QuadExt q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.delta_ = std::move(delta);
        return q;
    }

    bool compatible(const QuadExt& o) const {
        return delta_ == o.delta_ || b_.is_zero() || o.b_.is_zero();
    }

    void merge_radicand(const QuadExt& o) {
        if (delta_ == o.delta_)
            return;
        if (b_.is_zero()) {
            delta_ = o.delta_;
            return;
        }
        if (!o.b_.is_zero())
            throw RadicandMismatch("cannot combine sqrt(" + delta_.str() + ") with sqrt(" +
                                   o.delta_.str() + ")");
    }
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
    return os << q.str();
}

} // namespace orthopoly

#endif
