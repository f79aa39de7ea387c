#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthopoly/errors.hpp"
#include "orthopoly/matrix.hpp"
#include "orthopoly/tables.hpp"
#include "orthopoly/verify.hpp"

namespace {

using namespace orthopoly;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw Error("cannot open output file: " + out_path);
    os << text;
}

IndexVector parse_index_list(const std::string& csv) {
    IndexVector z;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        z.push_back(Rational::parse(item));
    if (z.empty())
        throw ParameterOutOfRange("--z must list at least one rational");
    return z;
}

struct GenArgs {
    std::string family, preset_name, alpha, beta, lambda;
    bool has_alpha = false, has_beta = false, has_lambda = false;
    std::size_t max_degree = 8;
    std::string normalization = "gs-monic";
    std::string format = "json";
    bool shifted = false;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    if (!a.family.empty() && !a.preset_name.empty())
        throw ParameterOutOfRange("choose either --family or --preset, not both");
    if (a.family.empty() && a.preset_name.empty())
        throw ParameterOutOfRange("one of --family or --preset is required");

    std::optional<Rational> alpha, beta, lambda;
    if (a.has_alpha)
        alpha = Rational::parse(a.alpha);
    if (a.has_beta)
        beta = Rational::parse(a.beta);
    if (a.has_lambda)
        lambda = Rational::parse(a.lambda);

    TableRequest req;
    if (!a.family.empty()) {
        if (lambda)
            throw ParameterOutOfRange("--lambda applies to the gegenbauer preset only");
        if (a.family == "hermite") {
            if (alpha || beta)
                throw ParameterOutOfRange("hermite takes no --alpha/--beta");
            req.functional = MomentFunctional::hermite();
        } else if (a.family == "laguerre") {
            if (!alpha || beta)
                throw ParameterOutOfRange("laguerre takes --alpha and no --beta");
            req.functional = MomentFunctional::laguerre(*alpha);
        } else if (a.family == "jacobi") {
            if (!alpha || !beta)
                throw ParameterOutOfRange("jacobi takes both --alpha and --beta");
            req.functional = MomentFunctional::jacobi(*alpha, *beta);
        } else {
            throw ParameterOutOfRange("unknown family: " + a.family);
        }
    } else {
        if (alpha || beta)
            throw ParameterOutOfRange("presets fix their own parameters; drop --alpha/--beta");
        req.functional = preset(a.preset_name, lambda);
    }
    req.max_degree = a.max_degree;
    req.normalization = parse_normalization(a.normalization);
    req.shifted = a.shifted;
    emit(render_table(build_table(req), parse_format(a.format)), a.out);
    return 0;
}

int cmd_verify(const VerifyOptions& options, const std::string& out) {
    std::vector<CheckResult> results = run_verify(options);
    emit(render_report(options, results), out);
    return all_passed(results) ? 0 : 1;
}

int cmd_det(const std::string& kind, const std::string& z_csv, const std::string& w_str,
            const std::string& out) {
    std::optional<Rational> w;
    if (!w_str.empty())
        w = Rational::parse(w_str);
    DetReport report = det_report(kind, parse_index_list(z_csv), w);
    emit(render_det_report(report), out);
    return report.equal ? 0 : 1;
}

std::int64_t elapsed_ns(const std::chrono::steady_clock::time_point& t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count();
}

int cmd_bench(const std::string& kind, std::size_t max_n, const std::string& out) {
    if (max_n == 0)
        throw ParameterOutOfRange("--max-n must be at least 1");
    std::ostringstream os;
    os << "kind,n,method,nanoseconds\n";
    const Rational w(1, 2);
    for (std::size_t n = 1; n <= max_n; ++n) {
        IndexVector z;
        for (std::size_t j = 0; j < n; ++j)
            z.push_back(Rational(2 * static_cast<long>(j) + 1, 2));
        std::int64_t closed_ns = 0, brute_ns = 0;
        bool agree = false;
        if (kind == "vandermonde") {
            auto t0 = std::chrono::steady_clock::now();
            Rational closed = vandermonde_delta(z);
            closed_ns = elapsed_ns(t0);
            RationalMatrix m = vandermonde_matrix(z);
            auto t1 = std::chrono::steady_clock::now();
            Rational brute = bareiss_det(m);
            brute_ns = elapsed_ns(t1);
            agree = closed == brute;
        } else if (kind == "pochhammer") {
            auto t0 = std::chrono::steady_clock::now();
            Rational closed = pochhammer_matrix_det(z);
            closed_ns = elapsed_ns(t0);
            RationalMatrix m = pochhammer_matrix(z);
            auto t1 = std::chrono::steady_clock::now();
            Rational brute = bareiss_det(m);
            brute_ns = elapsed_ns(t1);
            agree = closed == brute;
        } else if (kind == "gamma") {
            auto t0 = std::chrono::steady_clock::now();
            ScaledDeterminant closed = det_gamma(z);
            closed_ns = elapsed_ns(t0);
            RationalMatrix m = pochhammer_matrix(z);
            auto t1 = std::chrono::steady_clock::now();
            Rational brute = bareiss_det(m);
            brute_ns = elapsed_ns(t1);
            GammaProduct scale;
            for (const Rational& zj : z)
                scale *= GammaProduct::gamma(zj);
            agree = closed.rational_part == brute && closed.scale == scale.canonicalized();
        } else if (kind == "beta") {
            auto t0 = std::chrono::steady_clock::now();
            ScaledDeterminant closed = det_beta(z, w);
            closed_ns = elapsed_ns(t0);
            auto t1 = std::chrono::steady_clock::now();
            ScaledDeterminant brute = det_beta_oracle(z, w);
            brute_ns = elapsed_ns(t1);
            agree = closed.combined().canonicalized() == brute.combined().canonicalized();
        } else if (kind == "beta-ratio") {
            auto t0 = std::chrono::steady_clock::now();
            Rational closed = pochhammer_ratio_det(z, w);
            closed_ns = elapsed_ns(t0);
            RationalMatrix m = ratio_matrix(z, w);
            auto t1 = std::chrono::steady_clock::now();
            Rational brute = bareiss_det(m);
            brute_ns = elapsed_ns(t1);
            agree = closed == brute && closed == ratio_det_recursive_oracle(z, w);
        } else {
            throw ParameterOutOfRange("unknown determinant kind: " + kind);
        }
        if (!agree) {
            std::cerr << "bench: methods disagree for kind " << kind << " at n=" << n << "\n";
            return 1;
        }
        os << kind << "," << n << ",closed," << closed_ns << "\n";
        os << kind << "," << n << ",bareiss," << brute_ns << "\n";
    }
    emit(os.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of classical orthogonal polynomials"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "emit a table of polynomials");
    gen->add_option("--family", gen_args.family, "hermite, laguerre, or jacobi");
    gen->add_option("--preset", gen_args.preset_name,
                    "legendre, chebyshev1, chebyshev2, or gegenbauer");
    CLI::Option* alpha_opt = gen->add_option("--alpha", gen_args.alpha, "family parameter");
    CLI::Option* beta_opt = gen->add_option("--beta", gen_args.beta, "family parameter");
    CLI::Option* lambda_opt = gen->add_option("--lambda", gen_args.lambda, "gegenbauer parameter");
    gen->add_option("--max-degree", gen_args.max_degree, "highest degree to emit");
    gen->add_option("--normalization", gen_args.normalization,
                    "gs-monic, paper-closed, or standard-hermite");
    gen->add_option("--format", gen_args.format, "json, csv, or latex");
    gen->add_flag("--shifted", gen_args.shifted, "keep jacobi output in t = (1-x)/2");
    gen->add_option("--out", gen_args.out, "write to a file instead of stdout");

    VerifyOptions verify_options;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
    verify->add_option("--suite", verify_options.suite,
                       "all, ratcore, detkit, gschmidt, classical, or exterior");
    verify->add_option("--seed", verify_options.seed, "seed for the randomized checks");
    verify->add_option("--max-degree", verify_options.max_degree, "highest polynomial degree");
    verify->add_option("--size", verify_options.det_size, "largest determinant size");
    verify->add_option("--instances", verify_options.instances, "random instances per check");
    verify->add_option("--dim", verify_options.max_dim, "largest exterior-algebra dimension");
    verify->add_option("--perms", verify_options.permutations, "permutations per grid point");
    verify->add_option("--out", verify_out, "write the report to a file instead of stdout");

    std::string det_kind, det_z, det_w, det_out;
    CLI::App* det = app.add_subcommand("det", "evaluate one determinant identity both ways");
    det->add_option("--kind", det_kind, "vandermonde, pochhammer, gamma, beta, or beta-ratio")
        ->required();
    det->add_option("--z", det_z, "comma-separated rational index list")->required();
    det->add_option("--w", det_w, "second parameter, for beta and beta-ratio");
    det->add_option("--out", det_out, "write to a file instead of stdout");

    std::string bench_kind, bench_out;
    std::size_t bench_max_n = 8;
    CLI::App* bench = app.add_subcommand("bench", "time closed forms against elimination");
    bench->add_option("--kind", bench_kind, "vandermonde, pochhammer, gamma, beta, or beta-ratio")
        ->required();
    bench->add_option("--max-n", bench_max_n, "largest matrix size");
    bench->add_option("--out", bench_out, "write the CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    gen_args.has_alpha = alpha_opt->count() > 0;
    gen_args.has_beta = beta_opt->count() > 0;
    gen_args.has_lambda = lambda_opt->count() > 0;

    try {
        if (gen->parsed())
            return cmd_gen(gen_args);
        if (verify->parsed())
            return cmd_verify(verify_options, verify_out);
        if (det->parsed())
            return cmd_det(det_kind, det_z, det_w, det_out);
        if (bench->parsed())
            return cmd_bench(bench_kind, bench_max_n, bench_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
