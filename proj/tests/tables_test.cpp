#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "orthopoly/errors.hpp"
#include "orthopoly/tables.hpp"

using namespace orthopoly;

TEST_CASE("normalization and format names") {
    CHECK(parse_normalization("gs-monic") == Normalization::gs_monic);
    CHECK(parse_normalization("paper-closed") == Normalization::closed);
    CHECK(parse_normalization("standard-hermite") == Normalization::standard_hermite);
    CHECK_THROWS_AS(parse_normalization("monic"), ParameterOutOfRange);
    CHECK(normalization_name(Normalization::closed) == "paper-closed");
    CHECK(parse_format("json") == TableFormat::json);
    CHECK(parse_format("csv") == TableFormat::csv);
    CHECK(parse_format("latex") == TableFormat::latex);
    CHECK_THROWS_AS(parse_format("xml"), ParameterOutOfRange);
}

TEST_CASE("table construction guards family-specific options") {
    TableRequest req;
    req.functional = MomentFunctional::laguerre(Rational(0));
    req.normalization = Normalization::standard_hermite;
    CHECK_THROWS_AS(build_table(req), ParameterOutOfRange);
    req.normalization = Normalization::gs_monic;
    req.shifted = true;
    CHECK_THROWS_AS(build_table(req), ParameterOutOfRange);
}

TEST_CASE("gs-monic laguerre table in json") {
    TableRequest req;
    req.functional = MomentFunctional::laguerre(Rational(0));
    req.max_degree = 2;
    PolynomialTable table = build_table(req);
    nlohmann::json doc = nlohmann::json::parse(render_table(table, TableFormat::json));
    CHECK(doc["family"] == "laguerre");
    CHECK(doc["alpha"] == "0");
    CHECK(doc["beta"].is_null());
    CHECK(doc["basis"] == "monomial");
    CHECK(doc["normalization"] == "gs-monic");
    CHECK(doc["polys"].size() == 3);
    CHECK(doc["polys"][2]["n"] == 2);
    CHECK(doc["polys"][2]["coeffs"] == nlohmann::json({"2", "-4", "1"}));
    for (const auto& entry : doc["polys"])
        for (const auto& c : entry["coeffs"])
            CHECK(Rational::parse(c.get<std::string>()).str() == c.get<std::string>());
}

TEST_CASE("hermite json marks both parameters null") {
    TableRequest req;
    req.functional = MomentFunctional::hermite();
    req.max_degree = 0;
    nlohmann::json doc = nlohmann::json::parse(render_table(build_table(req), TableFormat::json));
    CHECK(doc["alpha"].is_null());
    CHECK(doc["beta"].is_null());
    CHECK(doc["polys"][0]["coeffs"] == nlohmann::json({"1"}));
}

TEST_CASE("closed legendre table stays exact through monomial conversion") {
    TableRequest req;
    req.functional = preset("legendre");
    req.max_degree = 1;
    req.normalization = Normalization::closed;
    nlohmann::json doc = nlohmann::json::parse(render_table(build_table(req), TableFormat::json));
    CHECK(doc["family"] == "jacobi");
    CHECK(doc["alpha"] == "0");
    CHECK(doc["beta"] == "0");
    CHECK(doc["polys"][1]["coeffs"] == nlohmann::json({"0", "1"}));
}

TEST_CASE("shifted jacobi table keeps the t basis") {
    TableRequest req;
    req.functional = MomentFunctional::jacobi(Rational(0), Rational(0));
    req.max_degree = 1;
    req.shifted = true;
    PolynomialTable table = build_table(req);
    CHECK(table.basis == Basis::shifted);
    nlohmann::json doc = nlohmann::json::parse(render_table(table, TableFormat::json));
    CHECK(doc["basis"] == "shifted");
    CHECK(doc["polys"][1]["coeffs"] == nlohmann::json({"-1/2", "1"}));
}

TEST_CASE("standard hermite csv") {
    TableRequest req;
    req.functional = MomentFunctional::hermite();
    req.max_degree = 2;
    req.normalization = Normalization::standard_hermite;
    CHECK(render_table(build_table(req), TableFormat::csv) == "0,1\n1,0,2\n2,-2,0,4\n");
}

TEST_CASE("latex rendering") {
    TableRequest req;
    req.functional = MomentFunctional::hermite();
    req.max_degree = 2;
    std::string tex = render_table(build_table(req), TableFormat::latex);
    CHECK(tex == "\\begin{align*}\n"
                 "h_{0}(x) &= 1 \\\\\n"
                 "h_{1}(x) &= x \\\\\n"
                 "h_{2}(x) &= x^{2} - \\frac{1}{2}\n"
                 "\\end{align*}\n");

    TableRequest jac;
    jac.functional = MomentFunctional::jacobi(Rational(1, 2), Rational(1, 2));
    jac.max_degree = 1;
    jac.normalization = Normalization::closed;
    jac.shifted = true;
    std::string jtex = render_table(build_table(jac), TableFormat::latex);
    CHECK(jtex.find("J_{1}^{(1/2,1/2)}(t)") != std::string::npos);
    CHECK(jtex.find("\\frac{3}{2}") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    TableRequest req;
    req.functional = MomentFunctional::jacobi(Rational(1), Rational(2));
    req.max_degree = 4;
    PolynomialTable table = build_table(req);
    for (TableFormat f : {TableFormat::json, TableFormat::csv, TableFormat::latex})
        CHECK(render_table(table, f) == render_table(build_table(req), f));
}

TEST_CASE("det reports") {
    DetReport r = det_report("vandermonde", {Rational(1), Rational(2), Rational(3)}, std::nullopt);
    CHECK(r.closed == "2");
    CHECK(r.brute == "2");
    CHECK(r.equal);
    CHECK(det_report("vandermonde", {Rational(5)}, std::nullopt).closed == "1");
    DetReport ratio = det_report("beta-ratio", {Rational(1), Rational(2)}, Rational(1));
    CHECK(ratio.closed == "1/6");
    CHECK(ratio.equal);
    CHECK(det_report("pochhammer", {Rational(1), Rational(2), Rational(3)}, std::nullopt).equal);
    CHECK(det_report("gamma", {Rational(1, 2), Rational(3, 2)}, std::nullopt).equal);
    CHECK(det_report("beta", {Rational(1), Rational(2)}, Rational(1)).equal);
    CHECK_THROWS_AS(det_report("beta", {Rational(1)}, std::nullopt), ParameterOutOfRange);
    CHECK_THROWS_AS(det_report("cauchy", {Rational(1)}, std::nullopt), ParameterOutOfRange);
    CHECK_THROWS_AS(det_report("vandermonde", {}, std::nullopt), ParameterOutOfRange);

    std::string text = render_det_report(ratio);
    CHECK(text == "kind: beta-ratio\n"
                  "z: 1,2\n"
                  "w: 1\n"
                  "closed: 1/6\n"
                  "brute-force: 1/6\n"
                  "verdict: equal\n");
}
