#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "orthopoly/classical.hpp"
#include "orthopoly/detkit.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/exterior.hpp"
#include "orthopoly/rng.hpp"
#include "orthopoly/verify.hpp"

using namespace orthopoly;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string label(const MomentFunctional& F) {
    switch (F.family) {
    case Family::hermite:
        return "hermite";
    case Family::laguerre:
        return "laguerre(" + F.alpha.str() + ")";
    case Family::jacobi:
        return "jacobi(" + F.alpha.str() + "," + F.beta.str() + ")";
    }
    return "?";
}

// Each criterion returns an empty string on success, a failure detail otherwise.

std::string path_equality() {
    auto t0 = Clock::now();
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, 9);
        for (std::size_t k = 0; k <= 8; ++k) {
            CoeffVector det = gs_determinant(M, k);
            if (gs_recursive(M, k) != det)
                return label(F) + " k=" + std::to_string(k) + ": recursion vs cofactor";
            if (k <= 5 && gs_hodge(M, k) != det)
                return label(F) + " k=" + std::to_string(k) + ": hodge vs cofactor";
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 30.0)
        return "exceeded the 30 s budget: " + std::to_string(dt) + " s";
    return {};
}

std::string scaling_relations() {
    for (const MomentFunctional& F : verification_grid())
        for (std::size_t n = 0; n <= 8; ++n)
            if (!scaling_check(F, n))
                return label(F) + " n=" + std::to_string(n);
    return {};
}

std::string orthogonality() {
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, 9);
        std::vector<CoeffVector> us;
        for (std::size_t k = 0; k <= 8; ++k)
            us.push_back(gs_determinant(M, k));
        for (std::size_t i = 0; i < us.size(); ++i)
            for (std::size_t j = i + 1; j < us.size(); ++j)
                if (!table_inner(M, us[i].coeffs, us[j].coeffs).is_zero())
                    return label(F) + " <u_" + std::to_string(i) + ",u_" + std::to_string(j) +
                           "> != 0";
    }
    return {};
}

std::string determinant_identities() {
    auto t0 = Clock::now();
    SeededRng rng(42);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 6;
        IndexVector z = rng.distinct_rationals(n, 8, 4);
        if (vandermonde_delta(z) != bareiss_det(vandermonde_matrix(z)))
            return "power matrix instance " + std::to_string(i);
    }
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 6;
        IndexVector z = rng.distinct_rationals(n, 8, 4);
        if (pochhammer_matrix_det(z) != bareiss_det(pochhammer_matrix(z)))
            return "pochhammer matrix instance " + std::to_string(i);
    }
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 6;
        IndexVector z = rng.distinct_positive_rationals(n, 8, 4);
        ScaledDeterminant d = det_gamma(z);
        GammaProduct scale;
        for (const Rational& zj : z)
            scale *= GammaProduct::gamma(zj);
        if (d.rational_part != bareiss_det(pochhammer_matrix(z)) ||
            d.scale != scale.canonicalized())
            return "gamma matrix instance " + std::to_string(i);
    }
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 6;
        IndexVector z = rng.distinct_positive_rationals(n, 6, 3);
        Rational w = rng.positive_rational(5, 3);
        if (det_beta(z, w).combined().canonicalized() !=
            det_beta_oracle(z, w).combined().canonicalized())
            return "beta matrix instance " + std::to_string(i);
    }
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + done % 6;
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
        if (closed != brute)
            return "ratio matrix instance " + std::to_string(done) + ": closed vs elimination";
        if (closed != recursive)
            return "ratio matrix instance " + std::to_string(done) + ": closed vs recursion";
        ++done;
    }
    double dt = seconds_since(t0);
    if (dt >= 20.0)
        return "exceeded the 20 s budget: " + std::to_string(dt) + " s";
    return {};
}

std::string eset_binomial() {
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::size_t m = 0; m <= n; ++m)
            if (eset_ratio(n, m) != binomial(n, m))
                return "n=" + std::to_string(n) + " m=" + std::to_string(m);
    return {};
}

std::string hermite_parity() {
    for (std::size_t n = 0; n <= 8; ++n) {
        if (hermite_parity_gs(n) != gs_polynomial(MomentFunctional::hermite(), n))
            return "n=" + std::to_string(n) + ": parity path";
        if (!hermite_cofactor_ratio_check(n))
            return "n=" + std::to_string(n) + ": cofactor ratios";
    }
    return {};
}

MultiVector random_homogeneous(SeededRng& rng, const InnerProductSpace& space, std::size_t p) {
    MultiVector v(space);
    for (unsigned mask = 0; mask <= space.top_mask(); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != p)
            continue;
        v.set_coefficient(mask, QuadExt(rng.rational(3, 2), rng.rational(2, 2), space.delta()));
    }
    return v;
}

std::string hodge_star_criteria() {
    SeededRng rng(42);
    for (int i = 0; i < 100; ++i) {
        std::size_t dim = 1 + i % 5;
        InnerProductSpace space(random_pd_gram(rng, dim));
        std::vector<std::pair<MultiVector, MultiVector>> samples;
        for (std::size_t p = 0; p <= dim; ++p)
            samples.emplace_back(random_homogeneous(rng, space, p),
                                 random_homogeneous(rng, space, p));
        if (!star_properties_check(space, samples))
            return "star properties, instance " + std::to_string(i);
    }
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, 9);
        for (std::size_t k = 0; k <= 5; ++k)
            if (!gs_hodge_identities_check(M, k))
                return label(F) + " k=" + std::to_string(k) + ": projection identities";
    }
    return {};
}

std::string permutation_invariance() {
    SeededRng rng(42);
    for (const MomentFunctional& F : verification_grid()) {
        MomentTable M = moment_table(F, 9);
        for (std::size_t k = 1; k <= 8; ++k)
            for (int t = 0; t < 5; ++t)
                if (!permutation_invariance_check(M, k, rng.permutation(k)))
                    return label(F) + " k=" + std::to_string(k);
    }
    return {};
}

std::string spot_values() {
    if (gs_polynomial(MomentFunctional::laguerre(Rational(0)), 2) !=
        Polynomial(Basis::monomial, {Rational(2), Rational(-4), Rational(1)}))
        return "laguerre(0) degree 2";
    if (gs_polynomial(MomentFunctional::hermite(), 2) !=
        Polynomial(Basis::monomial, {Rational(-1, 2), Rational(0), Rational(1)}))
        return "hermite degree 2";
    if (to_monomial(closed_jacobi(1, Rational(0), Rational(0))) !=
        Polynomial(Basis::monomial, {Rational(0), Rational(1)}))
        return "jacobi(0,0) degree 1";
    for (std::size_t n = 0; n <= 8; ++n)
        if (to_monomial(closed_form(preset("legendre"), n)).evaluate(Rational(1)) != Rational(1))
            return "legendre value at 1, n=" + std::to_string(n);
    return {};
}

int run_command(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc))
        return -1;
    return WEXITSTATUS(rc);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        return std::nullopt;
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string cli_determinism(const std::string& cli) {
    if (cli.empty())
        return "no --cli path given";
    const std::string out1 = "acceptance_cli_run1.txt";
    const std::string out2 = "acceptance_cli_run2.txt";
    std::string base = "\"" + cli + "\" verify --suite all --seed 42 --out ";
    int rc1 = run_command(base + out1);
    int rc2 = run_command(base + out2);
    if (rc1 != 0 || rc2 != 0)
        return "verify exited with " + std::to_string(rc1) + " and " + std::to_string(rc2);
    auto a = read_file(out1);
    auto b = read_file(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (!a || !b)
        return "report files were not written";
    if (*a != *b)
        return "reruns differ";
    if (a->find("FAIL") != std::string::npos)
        return "report contains failures";
    return {};
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];

    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"path-equality", path_equality},
        {"scaling-relations", scaling_relations},
        {"orthogonality", orthogonality},
        {"determinant-identities", determinant_identities},
        {"eset-binomial", eset_binomial},
        {"hermite-parity", hermite_parity},
        {"hodge-star", hodge_star_criteria},
        {"permutation-invariance", permutation_invariance},
        {"spot-values", spot_values},
        {"cli-determinism", [&] { return cli_determinism(cli); }},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        std::string detail;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        char line[512];
        if (detail.empty()) {
            std::snprintf(line, sizeof line, "PASS %2zu %s (%.2fs)", i + 1, criteria[i].name, dt);
        } else {
            std::snprintf(line, sizeof line, "FAIL %2zu %s: %s", i + 1, criteria[i].name,
                          detail.c_str());
            all_ok = false;
        }
        std::cout << line << std::endl;
    }
    std::cout << (all_ok ? "acceptance: all criteria satisfied" : "acceptance: FAILURES above")
              << std::endl;
    return all_ok ? 0 : 1;
}
