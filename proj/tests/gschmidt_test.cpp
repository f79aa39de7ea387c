#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthopoly/classical.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/gram_schmidt.hpp"
#include "orthopoly/rng.hpp"

using namespace orthopoly;

namespace {

MomentTable ones_table(std::size_t n) {
    return MomentTable(
        RationalMatrix::from_entries(n, n, [](std::size_t, std::size_t) { return Rational(1); }),
        GammaProduct());
}

} // namespace

TEST_CASE("moment table validation") {
    CHECK_THROWS_AS(MomentTable(RationalMatrix(2, 3)), NotSquareError);
    RationalMatrix asym(2, 2);
    asym.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(MomentTable{asym}, Error);

    MomentTable M = moment_table(MomentFunctional::laguerre(Rational(0)), 3);
    CHECK(M.size() == 3);
    CHECK(M.at(1, 1) == Rational(2));
    MomentTable lead = M.leading(2);
    CHECK(lead.size() == 2);
    CHECK(lead.at(1, 1) == Rational(2));
    MomentTable perm = M.permuted({2, 0, 1});
    CHECK(perm.at(0, 0) == M.at(2, 2));
    CHECK(perm.at(0, 1) == M.at(2, 0));
    CHECK_THROWS_AS(M.permuted({0, 0, 1}), IndexError);
}

TEST_CASE("table inner products") {
    MomentTable M = moment_table(MomentFunctional::laguerre(Rational(0)), 3);
    std::vector<Rational> one = {Rational(1)};
    std::vector<Rational> x = {Rational(0), Rational(1)};
    CHECK(table_inner(M, one, one) == Rational(1));
    CHECK(table_inner(M, one, x) == Rational(1));
    CHECK(table_inner(M, x, x) == Rational(2));
    CHECK_THROWS_AS(table_inner(M, {Rational(1), Rational(0), Rational(0), Rational(1)}, one),
                    IndexError);
}

TEST_CASE("gram minors") {
    MomentTable H = moment_table(MomentFunctional::hermite(), 3);
    CHECK(gram_minor(H, 0, 0) == Rational(1));
    CHECK(gram_minor(H, 1, 1) == Rational(1));
    CHECK(gram_minor(H, 2, 2) == Rational(1, 2));
    CHECK(gram_minor(H, 3, 3) == Rational(1, 4));
    CHECK(gram_minor(H, 2, 0) == Rational(-1, 4));
    CHECK(gram_minor(H, 2, 1) == Rational(0));
    CHECK_THROWS_AS(gram_minor(H, 4, 4), IndexError);
    CHECK_THROWS_AS(gram_minor(H, 3, 0), IndexError);
    CHECK_THROWS_AS(gram_minor(H, 2, 3), IndexError);
}

TEST_CASE("both gram-schmidt paths give the frozen laguerre vectors") {
    MomentTable M = moment_table(MomentFunctional::laguerre(Rational(0)), 4);
    CHECK(gs_determinant(M, 0) == CoeffVector{{Rational(1)}});
    CHECK(gs_determinant(M, 1) == CoeffVector{{Rational(-1), Rational(1)}});
    CHECK(gs_determinant(M, 2) == CoeffVector{{Rational(2), Rational(-4), Rational(1)}});
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(gs_recursive(M, k) == gs_determinant(M, k));
}

TEST_CASE("gram-schmidt rejects dependent bases") {
    // v_1 - v_0 has zero norm in the all-ones table; the recursion needs that
    // norm from degree 2 on, and d_{2,2} vanishes there too.
    MomentTable bad = ones_table(3);
    CHECK_THROWS_AS(gs_recursive(bad, 2), DependentBasis);
    CHECK_THROWS_AS(gs_determinant(bad, 2), DependentBasis);
    CHECK(gs_determinant(bad, 0) == CoeffVector{{Rational(1)}});
    CHECK(gs_determinant(bad, 1) == CoeffVector{{Rational(-1), Rational(1)}});
}

TEST_CASE("orthogonality holds for gram-schmidt output and fails for raw monomials") {
    MomentTable M = moment_table(MomentFunctional::laguerre(Rational(1, 2)), 5);
    std::vector<CoeffVector> us;
    for (std::size_t k = 0; k < 5; ++k)
        us.push_back(gs_determinant(M, k));
    CHECK(orthogonality_check(M, us));
    std::vector<CoeffVector> raw = {CoeffVector{{Rational(1)}},
                                    CoeffVector{{Rational(0), Rational(1)}}};
    CHECK_FALSE(orthogonality_check(M, raw));
}

TEST_CASE("squared norm equals the minor ratio") {
    MomentTable H = moment_table(MomentFunctional::hermite(), 4);
    CoeffVector u2 = gs_determinant(H, 2);
    CHECK(table_inner(H, u2.coeffs, u2.coeffs) == Rational(1, 2));
    for (std::size_t k = 0; k < 4; ++k) {
        CoeffVector u = gs_determinant(H, k);
        CHECK(table_inner(H, u.coeffs, u.coeffs) ==
              gram_minor(H, k + 1, k + 1) / gram_minor(H, k, k));
    }
}

TEST_CASE("permutation invariance of the span") {
    MomentTable M = moment_table(MomentFunctional::laguerre(Rational(0)), 4);
    CHECK(permutation_invariance_check(M, 2, {1, 0}));
    CHECK(permutation_invariance_check(M, 3, {2, 1, 0}));
    CHECK(permutation_invariance_check(M, 3, {1, 2, 0}));
    SeededRng rng(31);
    MomentTable H = moment_table(MomentFunctional::hermite(), 6);
    for (int i = 0; i < 10; ++i)
        CHECK(permutation_invariance_check(H, 5, rng.permutation(5)));
}

TEST_CASE("gram-schmidt on random positive definite tables") {
    SeededRng rng(32);
    for (int i = 0; i < 15; ++i) {
        std::size_t n = 2 + i % 4;
        MomentTable M(random_pd_gram(rng, n));
        std::vector<CoeffVector> us;
        for (std::size_t k = 0; k < n; ++k) {
            CoeffVector u = gs_determinant(M, k);
            CHECK(u == gs_recursive(M, k));
            CHECK(u.coeffs.back() == Rational(1));
            us.push_back(u);
        }
        CHECK(orthogonality_check(M, us));
    }
}

TEST_CASE("scaling the table leaves both paths unchanged") {
    MomentTable M = moment_table(MomentFunctional::jacobi(Rational(1, 2), Rational(-1, 2)), 5);
    RationalMatrix scaled = RationalMatrix::from_entries(
        5, 5, [&](std::size_t i, std::size_t j) { return M.at(i, j) * Rational(7, 3); });
    MomentTable Ms(scaled, M.scale());
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(gs_determinant(M, k) == gs_determinant(Ms, k));
        CHECK(gs_recursive(M, k) == gs_recursive(Ms, k));
    }
}
