#include "orthopoly/tables.hpp"

#include <sstream>

#include <json.hpp>

#include "orthopoly/errors.hpp"
#include "orthopoly/matrix.hpp"

namespace orthopoly {

namespace {

std::string latex_symbol(const PolynomialTable& table, std::size_t n) {
    const MomentFunctional& F = table.functional;
    char letter = table.normalization == Normalization::gs_monic ? 'h' : 'H';
    switch (F.family) {
    case Family::hermite:
        return std::string(1, letter) + "_{" + std::to_string(n) + "}";
    case Family::laguerre:
        letter = letter == 'h' ? 'l' : 'L';
        return std::string(1, letter) + "_{" + std::to_string(n) + "}^{(" + F.alpha.str() + ")}";
    case Family::jacobi:
        letter = letter == 'h' ? 'j' : 'J';
        return std::string(1, letter) + "_{" + std::to_string(n) + "}^{(" + F.alpha.str() + "," +
               F.beta.str() + ")}";
    }
    return {};
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer())
        return r.str();
    return "\\frac{" + Rational(r.num()).str() + "}{" + Rational(r.den()).str() + "}";
}

std::string latex_polynomial(const Polynomial& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (std::size_t back = p.coeffs().size(); back-- > 0;) {
        const Rational& c = p.coeffs()[back];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        std::string power;
        if (back == 1)
            power = var;
        else if (back > 1)
            power = var + "^{" + std::to_string(back) + "}";
        if (power.empty())
            out += latex_rational(mag);
        else if (mag == Rational(1))
            out += power;
        else
            out += latex_rational(mag) + " " + power;
    }
    return out;
}

std::string render_json(const PolynomialTable& table) {
    nlohmann::ordered_json root;
    root["family"] = family_name(table.functional.family);
    if (table.functional.family == Family::hermite) {
        root["alpha"] = nullptr;
        root["beta"] = nullptr;
    } else {
        root["alpha"] = table.functional.alpha.str();
        root["beta"] = table.functional.family == Family::jacobi
                           ? nlohmann::ordered_json(table.functional.beta.str())
                           : nlohmann::ordered_json(nullptr);
    }
    root["basis"] = table.basis == Basis::shifted ? "shifted" : "monomial";
    root["normalization"] = normalization_name(table.normalization);
    root["polys"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < table.polys.size(); ++n) {
        nlohmann::ordered_json entry;
        entry["n"] = n;
        entry["coeffs"] = nlohmann::ordered_json::array();
        const Polynomial& p = table.polys[n];
        for (std::size_t m = 0; m <= (p.is_zero() ? 0 : p.degree()); ++m)
            entry["coeffs"].push_back(p.coefficient(m).str());
        root["polys"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string render_csv(const PolynomialTable& table) {
    std::ostringstream os;
    for (std::size_t n = 0; n < table.polys.size(); ++n) {
        os << n;
        const Polynomial& p = table.polys[n];
        for (std::size_t m = 0; m <= (p.is_zero() ? 0 : p.degree()); ++m)
            os << "," << p.coefficient(m).str();
        os << "\n";
    }
    return os.str();
}

std::string render_latex(const PolynomialTable& table) {
    std::string var = table.basis == Basis::shifted ? "t" : "x";
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t n = 0; n < table.polys.size(); ++n) {
        os << latex_symbol(table, n) << "(" << var << ") &= "
           << latex_polynomial(table.polys[n], var);
        if (n + 1 < table.polys.size())
            os << " \\\\";
        os << "\n";
    }
    os << "\\end{align*}\n";
    return os.str();
}

} // namespace

Normalization parse_normalization(const std::string& name) {
    if (name == "gs-monic")
        return Normalization::gs_monic;
    if (name == "paper-closed")
        return Normalization::closed;
    if (name == "standard-hermite")
        return Normalization::standard_hermite;
    throw ParameterOutOfRange("unknown normalization: " + name);
}

std::string normalization_name(Normalization n) {
    switch (n) {
    case Normalization::gs_monic:
        return "gs-monic";
    case Normalization::closed:
        return "paper-closed";
    case Normalization::standard_hermite:
        return "standard-hermite";
    }
    return {};
}

TableFormat parse_format(const std::string& name) {
    if (name == "json")
        return TableFormat::json;
    if (name == "csv")
        return TableFormat::csv;
    if (name == "latex")
        return TableFormat::latex;
    throw ParameterOutOfRange("unknown format: " + name);
}

PolynomialTable build_table(const TableRequest& request) {
    const MomentFunctional& F = request.functional;
    if (request.normalization == Normalization::standard_hermite && F.family != Family::hermite)
        throw ParameterOutOfRange("standard-hermite applies to the hermite family only");
    if (request.shifted && F.family != Family::jacobi)
        throw ParameterOutOfRange("the shifted basis applies to the jacobi family only");

    PolynomialTable table;
    table.functional = F;
    table.normalization = request.normalization;
    table.basis = request.shifted ? Basis::shifted : Basis::monomial;
    for (std::size_t n = 0; n <= request.max_degree; ++n) {
        Polynomial p;
        switch (request.normalization) {
        case Normalization::gs_monic:
            p = gs_polynomial(F, n);
            break;
        case Normalization::closed:
            p = closed_form(F, n);
            break;
        case Normalization::standard_hermite:
            p = closed_hermite(n) * factorial(n);
            break;
        }
        if (!request.shifted)
            p = to_monomial(p);
        table.polys.push_back(std::move(p));
    }
    return table;
}

std::string render_table(const PolynomialTable& table, TableFormat format) {
    switch (format) {
    case TableFormat::json:
        return render_json(table);
    case TableFormat::csv:
        return render_csv(table);
    case TableFormat::latex:
        return render_latex(table);
    }
    return {};
}

DetReport det_report(const std::string& kind, const IndexVector& z,
                     const std::optional<Rational>& w) {
    if (z.empty())
        throw ParameterOutOfRange("z must contain at least one entry");
    DetReport report;
    report.kind = kind;
    report.z = z;
    report.w = w;
    auto need_w = [&]() -> const Rational& {
        if (!w)
            throw ParameterOutOfRange("kind " + kind + " requires --w");
        return *w;
    };
    if (kind == "vandermonde") {
        Rational closed = vandermonde_delta(z);
        Rational brute = bareiss_det(vandermonde_matrix(z));
        report.closed = closed.str();
        report.brute = brute.str();
        report.equal = closed == brute;
    } else if (kind == "pochhammer") {
        Rational closed = pochhammer_matrix_det(z);
        Rational brute = bareiss_det(pochhammer_matrix(z));
        report.closed = closed.str();
        report.brute = brute.str();
        report.equal = closed == brute;
    } else if (kind == "gamma") {
        ScaledDeterminant d = det_gamma(z);
        GammaProduct scale;
        for (const Rational& zj : z)
            scale *= GammaProduct::gamma(zj);
        scale = scale.canonicalized();
        Rational brute = bareiss_det(pochhammer_matrix(z));
        report.closed = d.scale.str() + " * " + d.rational_part.str();
        report.brute = scale.str() + " * " + brute.str();
        report.equal = d.scale == scale && d.rational_part == brute;
    } else if (kind == "beta") {
        GammaProduct closed = det_beta(z, need_w()).combined().canonicalized();
        GammaProduct brute = det_beta_oracle(z, *w).combined().canonicalized();
        report.closed = closed.str();
        report.brute = brute.str();
        report.equal = closed == brute;
    } else if (kind == "beta-ratio") {
        Rational closed = pochhammer_ratio_det(z, need_w());
        Rational brute = bareiss_det(ratio_matrix(z, *w));
        Rational recursive = ratio_det_recursive_oracle(z, *w);
        report.closed = closed.str();
        report.brute = brute.str();
        report.equal = closed == brute && closed == recursive;
    } else {
        throw ParameterOutOfRange("unknown determinant kind: " + kind);
    }
    return report;
}

std::string render_det_report(const DetReport& report) {
    std::ostringstream os;
    os << "kind: " << report.kind << "\n";
    os << "z:";
    for (std::size_t i = 0; i < report.z.size(); ++i)
        os << (i ? "," : " ") << report.z[i].str();
    os << "\n";
    if (report.w)
        os << "w: " << report.w->str() << "\n";
    os << "closed: " << report.closed << "\n";
    os << "brute-force: " << report.brute << "\n";
    os << "verdict: " << (report.equal ? "equal" : "UNEQUAL") << "\n";
    return os.str();
}

} // namespace orthopoly
