#ifndef ORTHOPOLY_TABLES_HPP
#define ORTHOPOLY_TABLES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthopoly/classical.hpp"
#include "orthopoly/detkit.hpp"

namespace orthopoly {

/// gs-monic: monic Gram-Schmidt output. closed: the textbook closed forms of
/// closed_form(). standard-hermite: n! times closed_hermite, the physicists'
/// convention, valid for the hermite family only.
enum class Normalization { gs_monic, closed, standard_hermite };

Normalization parse_normalization(const std::string& name);
std::string normalization_name(Normalization n);

enum class TableFormat { json, csv, latex };

TableFormat parse_format(const std::string& name);

struct TableRequest {
    MomentFunctional functional = MomentFunctional::hermite();
    std::size_t max_degree = 0;
    Normalization normalization = Normalization::gs_monic;
    /// Keep jacobi output in powers of t = (1-x)/2 instead of monomials.
    bool shifted = false;
};

struct PolynomialTable {
    MomentFunctional functional = MomentFunctional::hermite();
    Normalization normalization = Normalization::gs_monic;
    Basis basis = Basis::monomial;
    std::vector<Polynomial> polys;
};

/// Degrees 0..max_degree in the requested normalization and basis.
/// ParameterOutOfRange when shifted or standard-hermite is combined with the
/// wrong family.
PolynomialTable build_table(const TableRequest& request);

std::string render_table(const PolynomialTable& table, TableFormat format);

struct DetReport {
    std::string kind;
    IndexVector z;
    std::optional<Rational> w;
    std::string closed;
    std::string brute;
    bool equal = false;
};

/// Evaluates one determinant identity both ways. Kinds: vandermonde,
/// pochhammer, gamma, beta, beta-ratio; the last two require w. For beta-ratio
/// the verdict also covers the recursive oracle.
DetReport det_report(const std::string& kind, const IndexVector& z,
                     const std::optional<Rational>& w);

std::string render_det_report(const DetReport& report);

} // namespace orthopoly

#endif
