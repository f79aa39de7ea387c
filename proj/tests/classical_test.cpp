#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthopoly/classical.hpp"
#include "orthopoly/errors.hpp"

using namespace orthopoly;

TEST_CASE("moment functional validation") {
    CHECK_THROWS_AS(MomentFunctional::laguerre(Rational(-1)), ParameterOutOfRange);
    CHECK_THROWS_AS(MomentFunctional::laguerre(Rational(-3, 2)), ParameterOutOfRange);
    CHECK_THROWS_AS(MomentFunctional::jacobi(Rational(0), Rational(-1)), ParameterOutOfRange);
    CHECK(family_name(Family::jacobi) == "jacobi");
}

TEST_CASE("presets map onto jacobi parameters") {
    MomentFunctional legendre = preset("legendre");
    CHECK(legendre.family == Family::jacobi);
    CHECK(legendre.alpha == Rational(0));
    CHECK(legendre.beta == Rational(0));
    CHECK(preset("chebyshev1").alpha == Rational(-1, 2));
    CHECK(preset("chebyshev2").alpha == Rational(1, 2));
    MomentFunctional geg = preset("gegenbauer", Rational(1));
    CHECK(geg.alpha == Rational(1, 2));
    CHECK(geg.beta == Rational(1, 2));
    CHECK_THROWS_AS(preset("gegenbauer"), ParameterOutOfRange);
    CHECK_THROWS_AS(preset("gegenbauer", Rational(-1, 2)), ParameterOutOfRange);
    CHECK_THROWS_AS(preset("legendre", Rational(1)), ParameterOutOfRange);
    CHECK_THROWS_AS(preset("hermit"), ParseError);
}

TEST_CASE("moments take their closed rational values") {
    MomentFunctional H = MomentFunctional::hermite();
    CHECK(moment(H, 0, 1) == Rational(0));
    CHECK(moment(H, 1, 1) == Rational(1, 2));
    CHECK(moment(H, 2, 2) == Rational(3, 4));
    CHECK(moment(H, 3, 2) == Rational(0));

    MomentFunctional L = MomentFunctional::laguerre(Rational(0));
    CHECK(moment(L, 0, 0) == Rational(1));
    CHECK(moment(L, 1, 1) == Rational(2));
    CHECK(moment(L, 2, 1) == Rational(6));
    MomentFunctional Lh = MomentFunctional::laguerre(Rational(1, 2));
    CHECK(moment(Lh, 1, 0) == Rational(3, 2));

    MomentFunctional P = MomentFunctional::jacobi(Rational(0), Rational(0));
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j)
            CHECK(moment(P, i, j) == Rational(1, static_cast<long>(i + j) + 1));

    MomentTable table = moment_table(Lh, 4);
    CHECK(table.size() == 4);
    CHECK(table.at(2, 1) == moment(Lh, 2, 1));
    CHECK(table.scale() == moment_scale(Lh));
}

TEST_CASE("moment scales") {
    CHECK(moment_scale(MomentFunctional::hermite()) == GammaProduct::gamma(Rational(1, 2)));
    CHECK(moment_scale(MomentFunctional::laguerre(Rational(5, 2))).canonicalized() ==
          (GammaProduct::gamma(Rational(1, 2)) * Rational(15, 8)).canonicalized());
    CHECK(moment_scale(MomentFunctional::jacobi(Rational(1), Rational(2)))
              .canonicalized()
              .as_rational() == Rational(4, 3));
}

TEST_CASE("polynomial container behavior") {
    Polynomial p(Basis::monomial, {Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(p.coeffs().size() == 1);
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(p.coefficient(5) == Rational(0));
    Polynomial q(Basis::monomial, {Rational(-1, 2), Rational(0), Rational(1)});
    CHECK(q.leading_coefficient() == Rational(1));
    CHECK(q.evaluate(Rational(2)) == Rational(7, 2));
    CHECK(q.evaluate(Rational(1, 2)) == Rational(-1, 4));
    Polynomial sum = p + q;
    CHECK(sum.coefficient(0) == Rational(1, 2));
    CHECK((q - q).is_zero());
    CHECK((q * Rational(0)).is_zero());
    CHECK((q * Rational(2)).coefficient(0) == Rational(-1));
    Polynomial shiftedp(Basis::shifted, {Rational(1)});
    CHECK_THROWS_AS(p + shiftedp, BasisMismatch);
    CHECK(q.str() == "x^2 - 1/2");
    CHECK(Polynomial(Basis::shifted, {Rational(1), Rational(-2)}).str() == "-2*t + 1");
}

TEST_CASE("shifted basis converts through t = (1-x)/2") {
    Polynomial t1(Basis::shifted, {Rational(1), Rational(-2)});
    CHECK(to_monomial(t1) == Polynomial(Basis::monomial, {Rational(0), Rational(1)}));
    Polynomial id(Basis::monomial, {Rational(3), Rational(1)});
    CHECK(to_monomial(id) == id);
    Polynomial t2(Basis::shifted, {Rational(0), Rational(0), Rational(1)});
    CHECK(to_monomial(t2) ==
          Polynomial(Basis::monomial, {Rational(1, 4), Rational(-1, 2), Rational(1, 4)}));
    Polynomial back = to_monomial(Polynomial(Basis::shifted, {Rational(1, 2), Rational(-1)}));
    CHECK(back.evaluate(Rational(1)) == Rational(1, 2) - Rational(0));
}

TEST_CASE("closed forms at small degree") {
    CHECK(closed_hermite(0) == Polynomial(Basis::monomial, {Rational(1)}));
    CHECK(closed_hermite(1) == Polynomial(Basis::monomial, {Rational(0), Rational(2)}));
    CHECK(closed_hermite(2) == Polynomial(Basis::monomial, {Rational(-1), Rational(0), Rational(2)}));
    CHECK(closed_hermite(3) ==
          Polynomial(Basis::monomial, {Rational(0), Rational(-2), Rational(0), Rational(4, 3)}));
    CHECK(closed_laguerre(1, Rational(1, 2)) ==
          Polynomial(Basis::monomial, {Rational(3, 2), Rational(-1)}));
    CHECK(closed_laguerre(2, Rational(0)) ==
          Polynomial(Basis::monomial, {Rational(1), Rational(-2), Rational(1, 2)}));
    CHECK(closed_jacobi(1, Rational(0), Rational(0)) ==
          Polynomial(Basis::shifted, {Rational(1), Rational(-2)}));
    CHECK(closed_jacobi(1, Rational(1), Rational(2)) ==
          Polynomial(Basis::shifted, {Rational(2), Rational(-5)}));
    CHECK(closed_form(MomentFunctional::hermite(), 2) == closed_hermite(2));
}

TEST_CASE("gram-schmidt output at frozen spots") {
    CHECK(gs_polynomial(MomentFunctional::hermite(), 2) ==
          Polynomial(Basis::monomial, {Rational(-1, 2), Rational(0), Rational(1)}));
    CHECK(gs_polynomial(MomentFunctional::hermite(), 3) ==
          Polynomial(Basis::monomial, {Rational(0), Rational(-3, 2), Rational(0), Rational(1)}));
    CHECK(gs_polynomial(MomentFunctional::laguerre(Rational(0)), 2) ==
          Polynomial(Basis::monomial, {Rational(2), Rational(-4), Rational(1)}));
    CHECK(gs_polynomial(MomentFunctional::jacobi(Rational(0), Rational(0)), 1) ==
          Polynomial(Basis::shifted, {Rational(-1, 2), Rational(1)}));
    CHECK(gs_polynomial(MomentFunctional::hermite(), 0) ==
          Polynomial(Basis::monomial, {Rational(1)}));
}

TEST_CASE("scaling factors tie gram-schmidt output to the closed forms") {
    CHECK(gs_scaling_factor(MomentFunctional::laguerre(Rational(0)), 2) == Rational(2));
    CHECK(gs_scaling_factor(MomentFunctional::hermite(), 3) == Rational(3, 4));
    CHECK(gs_scaling_factor(MomentFunctional::jacobi(Rational(0), Rational(0)), 2) ==
          Rational(2, 12));
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(scaling_check(MomentFunctional::hermite(), n));
        CHECK(scaling_check(MomentFunctional::laguerre(Rational(5, 2)), n));
        CHECK(scaling_check(MomentFunctional::jacobi(Rational(1), Rational(2)), n));
        CHECK(scaling_check(MomentFunctional::jacobi(Rational(-1, 2), Rational(-1, 2)), n));
    }
}

TEST_CASE("laguerre cofactor ratios") {
    CHECK(laguerre_cofactor_ratio(Rational(0), 2, 2) == Rational(1));
    CHECK(laguerre_cofactor_ratio(Rational(0), 2, 1) == Rational(4));
    CHECK(laguerre_cofactor_ratio(Rational(0), 2, 0) == Rational(2));
    CHECK(laguerre_cofactor_ratio(Rational(1, 2), 1, 0) == Rational(3, 2));
    CHECK_THROWS_AS(laguerre_cofactor_ratio(Rational(0), 1, 2), IndexError);
    for (std::size_t n = 0; n <= 5; ++n) {
        Polynomial gs = gs_polynomial(MomentFunctional::laguerre(Rational(5, 2)), n);
        for (std::size_t m = 0; m <= n; ++m) {
            Rational expect = laguerre_cofactor_ratio(Rational(5, 2), n, m);
            if ((n - m) % 2 != 0)
                expect = -expect;
            CHECK(gs.coefficient(m) == expect);
        }
    }
}

TEST_CASE("hermite parity shortcut") {
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(hermite_parity_gs(n) == gs_polynomial(MomentFunctional::hermite(), n));
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(hermite_cofactor_ratio_check(n));
}

TEST_CASE("hermite cofactor ratios in factorial form") {
    // d_{2n,n+m}/d_{2n,2n} = (2n)!/(2^{2(n-m)} (n-m)! (2m)!) at n=2, m=1 is 3,
    // realized as the x^2 coefficient magnitude of the degree-4 polynomial.
    Polynomial h4 = gs_polynomial(MomentFunctional::hermite(), 4);
    CHECK(h4.coefficient(2) == Rational(-3));
    CHECK(h4.coefficient(0) == Rational(3, 4));
    CHECK(h4.coefficient(1) == Rational(0));
    Polynomial h5 = gs_polynomial(MomentFunctional::hermite(), 5);
    CHECK(h5.coefficient(3) == Rational(-5));
    CHECK(h5.coefficient(1) == Rational(15, 4));
    CHECK(h5.coefficient(2) == Rational(0));
}

TEST_CASE("legendre values at the right endpoint") {
    for (std::size_t n = 0; n <= 8; ++n) {
        Polynomial p = to_monomial(closed_form(preset("legendre"), n));
        CHECK(p.evaluate(Rational(1)) == Rational(1));
    }
}
