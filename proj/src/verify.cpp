#include "orthopoly/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "orthopoly/detkit.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/exterior.hpp"
#include "orthopoly/rng.hpp"

namespace orthopoly {

namespace {

std::string grid_label(const MomentFunctional& F) {
    switch (F.family) {
    case Family::hermite:
        return "hermite";
    case Family::laguerre:
        return "laguerre alpha=" + F.alpha.str();
    case Family::jacobi:
        return "jacobi alpha=" + F.alpha.str() + " beta=" + F.beta.str();
    }
    return "?";
}

std::string index_label(const IndexVector& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i)
        s += (i ? "," : "") + z[i].str();
    return s + ")";
}

MomentTable scaled_table(const MomentTable& M, const Rational& s) {
    RationalMatrix m = RationalMatrix::from_entries(
        M.size(), M.size(), [&](std::size_t i, std::size_t j) { return M.at(i, j) * s; });
    return MomentTable(std::move(m), M.scale());
}

bool check_pochhammer_concat(const VerifyOptions&, SeededRng& rng, std::string& detail) {
    if (pochhammer(Rational(1, 2), 3) != Rational(15, 8) || pochhammer(Rational(2), 3) != Rational(24) ||
        pochhammer(Rational(5), 0) != Rational(1)) {
        detail = "fixed pochhammer values are wrong";
        return false;
    }
    if (!pochhammer_concat_check(Rational(1, 2), 2, 3) || !pochhammer_concat_check(Rational(3), 2, 2) ||
        !pochhammer_concat_check(Rational(7, 3), 0, 5)) {
        detail = "fixed concatenation instances fail";
        return false;
    }
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(20, 10);
        auto n = static_cast<unsigned long>(rng.range(0, 12));
        auto m = static_cast<unsigned long>(rng.range(0, 12));
        if (!pochhammer_concat_check(a, n, m)) {
            detail = "a=" + a.str() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

GammaProduct random_gamma_product(SeededRng& rng) {
    GammaProduct g = GammaProduct::from_rational(rng.nonzero_rational(5, 5));
    g *= GammaProduct::two_pow(rng.rational(3, 2));
    const long factors = rng.range(1, 3);
    for (long t = 0; t < factors; ++t) {
        Rational arg = rng.positive_rational(8, 4);
        long exp = rng.range(-3, 3);
        if (exp != 0)
            g *= GammaProduct::gamma(arg, exp);
    }
    return g;
}

bool check_gamma_canonicalize(const VerifyOptions&, SeededRng& rng, std::string& detail) {
    GammaProduct expected_half = GammaProduct::gamma(Rational(1, 2)) * Rational(3, 4);
    if (GammaProduct::gamma(Rational(5, 2)).canonicalized() != expected_half) {
        detail = "Gamma(5/2) does not reduce to (3/4) Gamma(1/2)";
        return false;
    }
    GammaProduct expected_three = GammaProduct::gamma(Rational(1)) * Rational(2);
    if (GammaProduct::gamma(Rational(3)).canonicalized() != expected_three) {
        detail = "Gamma(3) does not reduce to 2 Gamma(1)";
        return false;
    }
    if (!GammaProduct::gamma(Rational(1)).is_canonical()) {
        detail = "Gamma(1) should already be canonical";
        return false;
    }
    auto rational_of = (GammaProduct::gamma(Rational(3)) * GammaProduct::gamma(Rational(2))).as_rational();
    if (!rational_of || *rational_of != Rational(2)) {
        detail = "Gamma(3) Gamma(2) should evaluate to 2";
        return false;
    }
    if (GammaProduct::gamma(Rational(1, 2)).as_rational()) {
        detail = "Gamma(1/2) must not evaluate to a rational";
        return false;
    }
    bool poled = false;
    try {
        GammaProduct::gamma(Rational(0));
    } catch (const PoleError&) {
        poled = true;
    }
    if (!poled) {
        detail = "Gamma(0) must be rejected";
        return false;
    }
    poled = false;
    try {
        GammaProduct::gamma(Rational(-1, 2));
    } catch (const PoleError&) {
        poled = true;
    }
    if (!poled) {
        detail = "Gamma(-1/2) must be rejected";
        return false;
    }
    for (int i = 0; i < 100; ++i) {
        GammaProduct g = random_gamma_product(rng);
        GammaProduct h = random_gamma_product(rng);
        GammaProduct canon = g.canonicalized();
        if (canon.canonicalized() != canon || !canon.is_canonical()) {
            detail = "canonicalization not idempotent for " + g.str();
            return false;
        }
        if ((g * h).canonicalized() != (g.canonicalized() * h.canonicalized()).canonicalized()) {
            detail = "canonicalization not multiplicative for " + g.str() + " and " + h.str();
            return false;
        }
        if ((g * g.inverse()).as_rational() != Rational(1)) {
            detail = "g / g should be 1 for " + g.str();
            return false;
        }
    }
    return true;
}

bool check_quadext_field(const VerifyOptions&, SeededRng& rng, std::string& detail) {
    const long deltas[] = {2, 3, 5, 6, 7, 10, 4, 9};
    QuadExt fixed_prod = QuadExt(Rational(1), Rational(1), Rational(3)) *
                         QuadExt(Rational(1), Rational(-1), Rational(3));
    if (fixed_prod != QuadExt::rational(Rational(-2), Rational(3))) {
        detail = "(1+sqrt(3))(1-sqrt(3)) should be -2";
        return false;
    }
    QuadExt root3(Rational(0), Rational(1), Rational(3));
    if (root3 / root3 != QuadExt::rational(Rational(1), Rational(3))) {
        detail = "sqrt(3)/sqrt(3) should be 1";
        return false;
    }
    if (QuadExt(Rational(0), Rational(1), Rational(4)) != QuadExt::rational(Rational(2), Rational(9))) {
        detail = "perfect-square radicands should fold to rationals";
        return false;
    }
    bool threw = false;
    try {
        QuadExt(Rational(1), Rational(1), Rational(2)) + QuadExt(Rational(1), Rational(1), Rational(3));
    } catch (const RadicandMismatch&) {
        threw = true;
    }
    if (!threw) {
        detail = "mixing sqrt(2) with sqrt(3) must be rejected";
        return false;
    }
    threw = false;
    try {
        root3 / QuadExt::rational(Rational(0), Rational(3));
    } catch (const DivisionByZero&) {
        threw = true;
    }
    if (!threw) {
        detail = "division by zero must be rejected";
        return false;
    }
    for (int i = 0; i < 100; ++i) {
        Rational delta(deltas[rng.next() % 8]);
        auto draw = [&] { return QuadExt(rng.rational(6, 4), rng.rational(6, 4), delta); };
        QuadExt x = draw(), y = draw(), z = draw();
        if ((x + y) + z != x + (y + z) || x * (y + z) != x * y + x * z || x * y != y * x) {
            detail = "field axiom failed for delta=" + delta.str();
            return false;
        }
        if (!y.is_zero() && (x / y) * y != x) {
            detail = "division does not invert multiplication for delta=" + delta.str();
            return false;
        }
        Rational a = rng.rational(6, 4), b = rng.rational(6, 4);
        QuadExt conj_prod = QuadExt(a, b, delta) * QuadExt(a, -b, delta);
        if (conj_prod != QuadExt::rational(a * a - b * b * delta, delta)) {
            detail = "conjugate norm identity failed for delta=" + delta.str();
            return false;
        }
    }
    return true;
}

bool check_rational_roundtrip(const VerifyOptions&, SeededRng& rng, std::string& detail) {
    if (Rational::parse("-3/6") != Rational(-1, 2) || Rational::parse("0") != Rational(0) ||
        Rational(4, 2).str() != "2" || Rational(-1, 3).str() != "-1/3") {
        detail = "fixed parse/serialize cases are wrong";
        return false;
    }
    bool threw = false;
    try {
        Rational::parse("x/3");
    } catch (const ParseError&) {
        threw = true;
    }
    if (!threw) {
        detail = "garbage must not parse";
        return false;
    }
    if (Rational(9, 4).sqrt() != Rational(3, 2) || Rational(2).sqrt().has_value() ||
        Rational(-7, 2).floor() != mpz_class(-4)) {
        detail = "sqrt/floor fixed cases are wrong";
        return false;
    }
    for (int i = 0; i < 200; ++i) {
        Rational r = rng.rational(1000000, 1000000);
        if (Rational::parse(r.str()) != r) {
            detail = "round trip failed for " + r.str();
            return false;
        }
    }
    return true;
}

bool check_vandermonde_oracle(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    if (vandermonde_delta({Rational(1), Rational(2), Rational(3)}) != Rational(2) ||
        vandermonde_delta({Rational(7)}) != Rational(1) ||
        vandermonde_delta({Rational(3), Rational(4), Rational(5)}) != Rational(2)) {
        detail = "fixed Vandermonde values are wrong";
        return false;
    }
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t n = 1 + i % o.det_size;
        IndexVector z = rng.distinct_rationals(n, 8, 4);
        Rational closed = vandermonde_delta(z);
        if (closed != bareiss_det(vandermonde_matrix(z))) {
            detail = "product form vs elimination at z=" + index_label(z);
            return false;
        }
        Rational c = rng.rational(6, 3);
        if (vandermonde_delta(shifted(z, c)) != closed) {
            detail = "shift invariance failed at z=" + index_label(z) + " c=" + c.str();
            return false;
        }
        if (n >= 2) {
            IndexVector swapped = z;
            std::swap(swapped[0], swapped[1]);
            if (vandermonde_delta(swapped) != -closed) {
                detail = "antisymmetry failed at z=" + index_label(z);
                return false;
            }
        }
    }
    return true;
}

bool check_pochhammer_det_oracle(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    if (pochhammer_matrix_det({Rational(1), Rational(2)}) != Rational(1) ||
        pochhammer_matrix_det({Rational(1), Rational(2), Rational(3)}) != Rational(2) ||
        pochhammer_matrix_det({Rational(5), Rational(5)}) != Rational(0)) {
        detail = "fixed Pochhammer determinant values are wrong";
        return false;
    }
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t n = 1 + i % o.det_size;
        IndexVector z = rng.distinct_rationals(n, 8, 4);
        Rational closed = pochhammer_matrix_det(z);
        if (closed != bareiss_det(pochhammer_matrix(z))) {
            detail = "closed form vs elimination at z=" + index_label(z);
            return false;
        }
        if (n >= 2) {
            IndexVector swapped = z;
            std::swap(swapped[0], swapped[1]);
            if (pochhammer_matrix_det(swapped) != -closed) {
                detail = "antisymmetry failed at z=" + index_label(z);
                return false;
            }
        }
    }
    return true;
}

bool check_gamma_det_oracle(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    ScaledDeterminant fixed = det_gamma({Rational(1), Rational(2)});
    if (fixed.rational_part != Rational(1) ||
        fixed.scale != (GammaProduct::gamma(Rational(1), 2)).canonicalized()) {
        detail = "det over (1,2) should be Gamma(1)^2 with unit rational part";
        return false;
    }
    ScaledDeterminant halves = det_gamma({Rational(1, 2), Rational(3, 2)});
    if (halves.rational_part != Rational(1) ||
        halves.scale != (GammaProduct::gamma(Rational(1, 2), 2) * Rational(1, 2)).canonicalized()) {
        detail = "det over (1/2,3/2) should be (1/2) Gamma(1/2)^2";
        return false;
    }
    if (det_gamma({Rational(3), Rational(3)}).rational_part != Rational(0)) {
        detail = "repeated entries must give a vanishing rational part";
        return false;
    }
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t n = 1 + i % o.det_size;
        IndexVector z = rng.distinct_positive_rationals(n, 8, 4);
        ScaledDeterminant d = det_gamma(z);
        if (d.rational_part != bareiss_det(pochhammer_matrix(z))) {
            detail = "rational part vs elimination at z=" + index_label(z);
            return false;
        }
        GammaProduct scale;
        for (const Rational& zj : z)
            scale *= GammaProduct::gamma(zj);
        if (d.scale != scale.canonicalized()) {
            detail = "scale mismatch at z=" + index_label(z);
            return false;
        }
    }
    return true;
}

bool check_beta_det_oracle(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    auto combined = [](const ScaledDeterminant& d) { return d.combined().canonicalized(); };
    ScaledDeterminant fixed = det_beta({Rational(1), Rational(2)}, Rational(1));
    if (combined(fixed).as_rational() != Rational(1, 12)) {
        detail = "det over z=(1,2), w=1 should be 1/12";
        return false;
    }
    if (combined(det_beta({Rational(5, 2)}, Rational(3))) !=
        beta_gamma(Rational(5, 2), Rational(3)).canonicalized()) {
        detail = "1x1 case should be the Beta value itself";
        return false;
    }
    if (det_beta({Rational(2), Rational(2)}, Rational(1)).rational_part != Rational(0)) {
        detail = "repeated entries must give a vanishing rational part";
        return false;
    }
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t n = 1 + i % o.det_size;
        IndexVector z = rng.distinct_positive_rationals(n, 6, 3);
        Rational w = rng.positive_rational(5, 3);
        if (combined(det_beta(z, w)) != combined(det_beta_oracle(z, w))) {
            detail = "closed form vs factored elimination at z=" + index_label(z) +
                     " w=" + w.str();
            return false;
        }
    }
    return true;
}

bool check_ratio_det_oracle(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    if (pochhammer_ratio_det({Rational(1), Rational(2)}, Rational(1)) != Rational(1, 6) ||
        ratio_det_recursive_oracle({Rational(1), Rational(2)}, Rational(1)) != Rational(1, 6) ||
        pochhammer_ratio_det({Rational(9)}, Rational(4)) != Rational(1)) {
        detail = "fixed ratio determinant values are wrong";
        return false;
    }
    {
        IndexVector z = {Rational(1), Rational(3), Rational(4)};
        if (ratio_det_recursive_oracle(z, Rational(1, 2)) !=
            pochhammer_ratio_det(z, Rational(1, 2))) {
            detail = "recursion vs closed form at z=(1,3,4), w=1/2";
            return false;
        }
    }
    std::size_t done = 0;
    while (done < o.instances) {
        std::size_t n = 1 + done % o.det_size;
        IndexVector z = rng.distinct_rationals(n, 6, 3);
        Rational w = rng.nonzero_rational(5, 3);
        Rational closed, brute, recursive;
        try {
            closed = pochhammer_ratio_det(z, w);
            brute = bareiss_det(ratio_matrix(z, w));
            recursive = ratio_det_recursive_oracle(z, w);
        } catch (const ZeroDenominator&) {
            continue;
        }
        if (closed != brute || closed != recursive) {
            detail = "disagreement at z=" + index_label(z) + " w=" + w.str();
            return false;
        }
        ++done;
    }
    return true;
}

bool check_eset_binomial(const VerifyOptions& o, SeededRng&, std::string& detail) {
    if (eset(3, 1) != IndexVector{Rational(1), Rational(3), Rational(4)} ||
        eset(3, 3) != IndexVector{Rational(1), Rational(2), Rational(3)} ||
        eset(1, 0) != IndexVector{Rational(2)}) {
        detail = "fixed index sets are wrong";
        return false;
    }
    bool threw = false;
    try {
        eset(3, 4);
    } catch (const IndexError&) {
        threw = true;
    }
    if (!threw) {
        detail = "m > n must be rejected";
        return false;
    }
    for (std::size_t n = 1; n <= o.eset_max; ++n)
        for (std::size_t m = 0; m <= n; ++m)
            if (eset_ratio(n, m) != binomial(n, m)) {
                detail = "ratio is not binomial(" + std::to_string(n) + "," + std::to_string(m) + ")";
                return false;
            }
    return true;
}

bool check_beta_gamma_consistency(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t n = 1 + i % o.det_size;
        IndexVector z = rng.distinct_positive_rationals(n, 6, 3);
        Rational w = rng.positive_rational(5, 3);
        ScaledDeterminant beta = det_beta(z, w);
        ScaledDeterminant gamma = det_gamma(z);
        GammaProduct adjust;
        for (std::size_t j = 0; j < n; ++j) {
            adjust *= GammaProduct::gamma(z[j] + w + Rational(static_cast<long>(n) - 1));
            adjust *= GammaProduct::gamma(w + Rational(static_cast<long>(j)), -1);
        }
        if ((beta.scale * adjust).canonicalized() != gamma.scale.canonicalized() ||
            beta.rational_part != gamma.rational_part) {
            detail = "scale adjustment mismatch at z=" + index_label(z) + " w=" + w.str();
            return false;
        }
    }
    return true;
}

bool check_gs_path_equality(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        for (std::size_t k = 0; k <= o.max_degree; ++k)
            if (gs_recursive(M, k) != gs_determinant(M, k)) {
                detail = grid_label(F) + " k=" + std::to_string(k);
                return false;
            }
    }
    return true;
}

bool check_gs_orthogonality(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        std::vector<CoeffVector> us;
        for (std::size_t k = 0; k <= o.max_degree; ++k)
            us.push_back(gs_determinant(M, k));
        if (!orthogonality_check(M, us)) {
            detail = grid_label(F);
            return false;
        }
    }
    MomentTable laguerre0 = moment_table(MomentFunctional::laguerre(Rational(0)), 2);
    std::vector<CoeffVector> raw = {CoeffVector{{Rational(1)}},
                                    CoeffVector{{Rational(0), Rational(1)}}};
    if (orthogonality_check(laguerre0, raw)) {
        detail = "raw monomials must not pass the orthogonality check";
        return false;
    }
    return true;
}

bool check_gs_norm_identity(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        for (std::size_t k = 0; k < o.max_degree; ++k) {
            CoeffVector u = gs_determinant(M, k);
            Rational norm = table_inner(M, u.coeffs, u.coeffs);
            if (norm != gram_minor(M, k + 1, k + 1) / gram_minor(M, k, k)) {
                detail = grid_label(F) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool check_gs_permutation_invariance(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    MomentTable laguerre0 = moment_table(MomentFunctional::laguerre(Rational(0)), 3);
    if (!permutation_invariance_check(laguerre0, 2, {1, 0})) {
        detail = "swap of the first two basis vectors changed the output";
        return false;
    }
    MomentTable hermite = moment_table(MomentFunctional::hermite(), 4);
    if (!permutation_invariance_check(hermite, 3, {2, 1, 0})) {
        detail = "reversal of the first three basis vectors changed the output";
        return false;
    }
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        for (std::size_t k = 1; k <= o.max_degree; ++k)
            for (std::size_t t = 0; t < o.permutations; ++t) {
                std::vector<std::size_t> perm = rng.permutation(k);
                if (!permutation_invariance_check(M, k, perm)) {
                    detail = grid_label(F) + " k=" + std::to_string(k);
                    return false;
                }
            }
    }
    return true;
}

bool check_gs_scaling_invariance(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        Rational s = rng.positive_rational(9, 5);
        MomentTable Ms = scaled_table(M, s);
        for (std::size_t k = 0; k <= o.max_degree; ++k) {
            if (gs_determinant(M, k) != gs_determinant(Ms, k) ||
                gs_recursive(M, k) != gs_recursive(Ms, k)) {
                detail = grid_label(F) + " scale=" + s.str() + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool check_scaling_relations(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid())
        for (std::size_t n = 0; n <= o.max_degree; ++n)
            if (!scaling_check(F, n)) {
                detail = grid_label(F) + " n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool check_hermite_parity(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (std::size_t n = 0; n <= o.max_degree; ++n) {
        if (hermite_parity_gs(n) != gs_polynomial(MomentFunctional::hermite(), n)) {
            detail = "parity path disagrees with the generic path at n=" + std::to_string(n);
            return false;
        }
        if (!hermite_cofactor_ratio_check(n)) {
            detail = "cofactor ratios disagree with the factorial form at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool check_closed_coefficient_formulas(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        if (F.family == Family::hermite)
            continue;
        for (std::size_t n = 0; n <= o.max_degree; ++n) {
            Polynomial gs = gs_polynomial(F, n);
            for (std::size_t m = 0; m <= n; ++m) {
                Rational expect;
                if (F.family == Family::laguerre) {
                    expect = laguerre_cofactor_ratio(F.alpha, n, m);
                } else {
                    Rational ab1 = F.alpha + F.beta + Rational(static_cast<long>(n)) + 1;
                    expect = factorial(static_cast<unsigned long>(n)) *
                             pochhammer(F.alpha + 1, n) * pochhammer(ab1, m) /
                             (factorial(static_cast<unsigned long>(m)) *
                              factorial(static_cast<unsigned long>(n - m)) *
                              pochhammer(F.alpha + 1, m) * pochhammer(ab1, n));
                }
                if ((n - m) % 2 != 0)
                    expect = -expect;
                if (gs.coefficient(m) != expect) {
                    detail = grid_label(F) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_spot_values(const VerifyOptions& o, SeededRng&, std::string& detail) {
    if (gs_polynomial(MomentFunctional::laguerre(Rational(0)), 2) !=
        Polynomial(Basis::monomial, {Rational(2), Rational(-4), Rational(1)})) {
        detail = "Laguerre alpha=0 degree 2 should be x^2 - 4x + 2";
        return false;
    }
    if (gs_polynomial(MomentFunctional::hermite(), 2) !=
        Polynomial(Basis::monomial, {Rational(-1, 2), Rational(0), Rational(1)})) {
        detail = "Hermite degree 2 should be x^2 - 1/2";
        return false;
    }
    if (to_monomial(closed_jacobi(1, Rational(0), Rational(0))) !=
        Polynomial(Basis::monomial, {Rational(0), Rational(1)})) {
        detail = "Jacobi (0,0) degree 1 closed form should be x";
        return false;
    }
    for (std::size_t n = 0; n <= o.max_degree; ++n) {
        Polynomial p = to_monomial(closed_jacobi(n, Rational(0), Rational(0)));
        if (p.evaluate(Rational(1)) != Rational(1)) {
            detail = "Legendre value at 1 should be 1, n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool check_moment_tables(const VerifyOptions& o, SeededRng&, std::string& detail) {
    MomentFunctional H = MomentFunctional::hermite();
    for (std::size_t i = 0; i <= o.max_degree; ++i)
        for (std::size_t j = 0; j <= o.max_degree; ++j) {
            Rational m = moment(H, i, j);
            if ((i + j) % 2 != 0 ? !m.is_zero() : m != pochhammer(Rational(1, 2), (i + j) / 2)) {
                detail = "hermite moment (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
        }
    if (moment(MomentFunctional::laguerre(Rational(0)), 1, 1) != Rational(2)) {
        detail = "laguerre alpha=0 moment (1,1) should be 2";
        return false;
    }
    MomentFunctional legendre = MomentFunctional::jacobi(Rational(0), Rational(0));
    for (std::size_t i = 0; i <= o.max_degree; ++i)
        for (std::size_t j = 0; j <= o.max_degree; ++j)
            if (moment(legendre, i, j) != Rational(1, static_cast<long>(i + j) + 1)) {
                detail = "jacobi (0,0) moments should form the Hilbert matrix";
                return false;
            }
    if (closed_hermite(2) != Polynomial(Basis::monomial, {Rational(-1), Rational(0), Rational(2)})) {
        detail = "closed Hermite degree 2 should be 2x^2 - 1";
        return false;
    }
    if (closed_laguerre(1, Rational(1, 2)) !=
        Polynomial(Basis::monomial, {Rational(3, 2), Rational(-1)})) {
        detail = "closed Laguerre degree 1 should be alpha + 1 - x";
        return false;
    }
    if (closed_jacobi(1, Rational(0), Rational(0)) !=
        Polynomial(Basis::shifted, {Rational(1), Rational(-2)})) {
        detail = "closed Jacobi (0,0) degree 1 should be 1 - 2t";
        return false;
    }
    MomentFunctional cheb = preset("chebyshev1");
    if (cheb.family != Family::jacobi || cheb.alpha != Rational(-1, 2) || cheb.beta != Rational(-1, 2)) {
        detail = "chebyshev1 preset should map to jacobi(-1/2,-1/2)";
        return false;
    }
    MomentFunctional geg = preset("gegenbauer", Rational(1));
    if (geg.alpha != Rational(1, 2) || geg.beta != Rational(1, 2)) {
        detail = "gegenbauer(1) preset should map to jacobi(1/2,1/2)";
        return false;
    }
    bool threw = false;
    try {
        preset("gegenbauer");
    } catch (const ParameterOutOfRange&) {
        threw = true;
    }
    if (!threw) {
        detail = "gegenbauer without lambda must be rejected";
        return false;
    }
    GammaProduct jk = moment_scale(MomentFunctional::jacobi(Rational(1), Rational(2)));
    if (jk.canonicalized().as_rational() != Rational(4, 3)) {
        detail = "jacobi (1,2) scale should evaluate to 4/3";
        return false;
    }
    return true;
}

MultiVector random_homogeneous(SeededRng& rng, const InnerProductSpace& space, std::size_t p) {
    MultiVector v(space);
    const unsigned top = space.top_mask();
    for (unsigned mask = 0; mask <= top; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != p)
            continue;
        QuadExt c(rng.rational(3, 2), rng.rational(2, 2), space.delta());
        if (!c.is_zero())
            v.set_coefficient(mask, v.coefficient(mask) + c);
    }
    return v;
}

bool check_star_properties(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t dim = 1 + i % o.max_dim;
        InnerProductSpace space(random_pd_gram(rng, dim));
        std::vector<std::pair<MultiVector, MultiVector>> samples;
        for (std::size_t p = 0; p <= dim; ++p)
            samples.emplace_back(random_homogeneous(rng, space, p),
                                 random_homogeneous(rng, space, p));
        if (!star_properties_check(space, samples)) {
            detail = "instance " + std::to_string(i) + " dim=" + std::to_string(dim) +
                     " delta=" + space.delta().str();
            return false;
        }
    }
    return true;
}

bool check_hodge_gs_identities(const VerifyOptions& o, SeededRng&, std::string& detail) {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        for (std::size_t k = 0; k <= std::min(o.hodge_max_degree, o.max_degree); ++k)
            if (!gs_hodge_identities_check(M, k)) {
                detail = grid_label(F) + " k=" + std::to_string(k);
                return false;
            }
    }
    return true;
}

bool check_gs_hodge_equality(const VerifyOptions& o, SeededRng&, std::string& detail) {
    std::vector<MomentFunctional> fams = verification_grid();
    fams.push_back(MomentFunctional::laguerre(Rational(-1, 2)));
    fams.push_back(MomentFunctional::laguerre(Rational(1, 2)));
    for (const MomentFunctional& F : fams) {
        MomentTable M = moment_table(F, o.max_degree + 1);
        for (std::size_t k = 0; k <= std::min(o.hodge_max_degree, o.max_degree); ++k)
            if (gs_hodge(M, k) != gs_determinant(M, k)) {
                detail = grid_label(F) + " k=" + std::to_string(k);
                return false;
            }
    }
    return true;
}

bool check_hodge_linearity(const VerifyOptions& o, SeededRng& rng, std::string& detail) {
    for (std::size_t i = 0; i < o.instances; ++i) {
        std::size_t dim = 1 + i % o.max_dim;
        InnerProductSpace space(random_pd_gram(rng, dim));
        std::size_t p = static_cast<std::size_t>(rng.range(0, static_cast<long>(dim)));
        MultiVector a = random_homogeneous(rng, space, p);
        MultiVector b = random_homogeneous(rng, space, p);
        QuadExt lambda(rng.rational(3, 2), rng.rational(2, 2), space.delta());
        if (hodge_star(lambda * a + b) != lambda * hodge_star(a) + hodge_star(b)) {
            detail = "instance " + std::to_string(i) + " dim=" + std::to_string(dim) +
                     " p=" + std::to_string(p);
            return false;
        }
    }
    return true;
}

struct NamedCheck {
    const char* suite;
    const char* name;
    bool (*run)(const VerifyOptions&, SeededRng&, std::string&);
};

const NamedCheck kChecks[] = {
    {"ratcore", "pochhammer-concat", check_pochhammer_concat},
    {"ratcore", "gamma-canonicalize", check_gamma_canonicalize},
    {"ratcore", "quadext-field", check_quadext_field},
    {"ratcore", "rational-roundtrip", check_rational_roundtrip},
    {"detkit", "vandermonde-oracle", check_vandermonde_oracle},
    {"detkit", "pochhammer-det-oracle", check_pochhammer_det_oracle},
    {"detkit", "gamma-det-oracle", check_gamma_det_oracle},
    {"detkit", "beta-det-oracle", check_beta_det_oracle},
    {"detkit", "ratio-det-oracle", check_ratio_det_oracle},
    {"detkit", "eset-binomial", check_eset_binomial},
    {"detkit", "beta-gamma-consistency", check_beta_gamma_consistency},
    {"gschmidt", "gs-path-equality", check_gs_path_equality},
    {"gschmidt", "gs-orthogonality", check_gs_orthogonality},
    {"gschmidt", "gs-norm-identity", check_gs_norm_identity},
    {"gschmidt", "gs-permutation-invariance", check_gs_permutation_invariance},
    {"gschmidt", "gs-scaling-invariance", check_gs_scaling_invariance},
    {"classical", "scaling-relations", check_scaling_relations},
    {"classical", "hermite-parity", check_hermite_parity},
    {"classical", "closed-coefficient-formulas", check_closed_coefficient_formulas},
    {"classical", "spot-values", check_spot_values},
    {"classical", "moment-tables", check_moment_tables},
    {"exterior", "star-properties", check_star_properties},
    {"exterior", "hodge-gs-identities", check_hodge_gs_identities},
    {"exterior", "gs-hodge-equality", check_gs_hodge_equality},
    {"exterior", "hodge-linearity", check_hodge_linearity},
};

} // namespace

std::vector<MomentFunctional> verification_grid() {
    std::vector<MomentFunctional> grid;
    grid.push_back(MomentFunctional::laguerre(Rational(0)));
    grid.push_back(MomentFunctional::laguerre(Rational(1, 2)));
    grid.push_back(MomentFunctional::laguerre(Rational(1)));
    grid.push_back(MomentFunctional::laguerre(Rational(5, 2)));
    grid.push_back(MomentFunctional::jacobi(Rational(0), Rational(0)));
    grid.push_back(MomentFunctional::jacobi(Rational(1, 2), Rational(1, 2)));
    grid.push_back(MomentFunctional::jacobi(Rational(-1, 2), Rational(-1, 2)));
    grid.push_back(MomentFunctional::jacobi(Rational(1), Rational(2)));
    grid.push_back(MomentFunctional::hermite());
    return grid;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    bool known = options.suite == "all";
    for (const NamedCheck& c : kChecks)
        if (options.suite == c.suite)
            known = true;
    if (!known)
        throw ParameterOutOfRange("unknown suite: " + options.suite);

    std::vector<CheckResult> results;
    std::uint64_t salt = 0;
    for (const NamedCheck& c : kChecks) {
        ++salt;
        if (options.suite != "all" && options.suite != c.suite)
            continue;
        SeededRng rng(options.seed + 0x9e3779b97f4a7c15ull * salt);
        std::string detail;
        bool ok = c.run(options, rng, detail);
        results.push_back({c.name, ok, detail});
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

std::string render_report(const VerifyOptions& options, const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << "verification report\n";
    os << "suite=" << options.suite << " seed=" << options.seed
       << " max-degree=" << options.max_degree << " det-size=" << options.det_size
       << " instances=" << options.instances << " max-dim=" << options.max_dim
       << " permutations=" << options.permutations
       << " hodge-max-degree=" << options.hodge_max_degree << " eset-max=" << options.eset_max
       << "\n\n";
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.passed) {
            ++passed;
            os << "PASS " << r.name << "\n";
        } else {
            os << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
    }
    os << "\nsummary: " << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

} // namespace orthopoly
