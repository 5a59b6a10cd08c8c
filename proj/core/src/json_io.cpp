#include "psdrank/json_io.hpp"

#include "psdrank/errors.hpp"
#include "psdrank/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace psdrank::io {

namespace {

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError("missing field '" + std::string(key) + "'");
    }
    return j.at(key);
}

std::size_t size_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

std::size_t index_from_json(const json& j, const char* what) {
    const std::size_t one_based = size_from_json(j, what);
    if (one_based == 0) throw ParseError(std::string(what) + " indices are 1-based");
    return one_based - 1;
}

json indices_to_json(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (std::size_t i : v) out.push_back(i + 1);
    return out;
}

std::vector<std::size_t> indices_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(index_from_json(e, what));
    return out;
}

Integer integer_from_json(const json& j) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer (number or string)");
}

}  // namespace

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (\"p/q\" string or integer)");
}

json radscalar_to_json(const RadScalar& a) {
    json terms = json::array();
    for (const auto& [radicand, coefficient] : a.terms()) {
        terms.push_back({{"coefficient", to_string(coefficient)}, {"radicand", to_string(radicand)}});
    }
    return terms;
}

RadScalar radscalar_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("a radical scalar must be an array of terms");
    RadScalar out;
    for (const json& term : j) {
        const Rational coefficient = rational_from_json(require_field(term, "coefficient"));
        const Integer radicand = integer_from_json(require_field(term, "radicand"));
        out += RadScalar::radical(coefficient, radicand);
    }
    return out;
}

namespace {

template <typename T, typename EntryToJson>
json generic_matrix_to_json(const Matrix<T>& m, EntryToJson entry_to_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <typename T, typename EntryFromJson>
Matrix<T> generic_matrix_from_json(const json& j, EntryFromJson entry_from_json) {
    const std::size_t rows = size_from_json(require_field(j, "rows"), "rows");
    const std::size_t cols = size_from_json(require_field(j, "cols"), "cols");
    const json& entries = require_field(j, "entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw ParseError("entries must be an array of " + std::to_string(rows) + " rows");
    }
    Matrix<T> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(cols) +
                             " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) out(i, c) = entry_from_json(row[c]);
    }
    return out;
}

}  // namespace

json matrix_to_json(const RatMatrix& m) {
    return generic_matrix_to_json(m, rational_to_json);
}

RatMatrix rat_matrix_from_json(const json& j) {
    return generic_matrix_from_json<Rational>(j, rational_from_json);
}

json rad_matrix_to_json(const RadMatrix& m) {
    return generic_matrix_to_json(m, radscalar_to_json);
}

RadMatrix rad_matrix_from_json(const json& j) {
    return generic_matrix_from_json<RadScalar>(j, radscalar_from_json);
}

json sign_pattern_to_json(const SignPattern& p) {
    return generic_matrix_to_json(p.signs, [](int s) { return json(s); });
}

SignPattern sign_pattern_from_json(const json& j) {
    return SignPattern{generic_matrix_from_json<int>(j, [](const json& e) {
        if (!e.is_number_integer()) throw ParseError("signs must be integers");
        const int s = e.get<int>();
        if (s < -1 || s > 1) throw ParseError("signs must be -1, 0, or 1");
        return s;
    })};
}

json triangular_to_json(const TriangularCertificate& cert) {
    return {{"rowIndices", indices_to_json(cert.row_indices)},
            {"colIndices", indices_to_json(cert.col_indices)}};
}

TriangularCertificate triangular_from_json(const json& j) {
    return TriangularCertificate{indices_from_json(require_field(j, "rowIndices"), "rowIndices"),
                                 indices_from_json(require_field(j, "colIndices"), "colIndices")};
}

namespace {

json witness_map_to_json(const std::map<std::size_t, TriangularCertificate>& witnesses) {
    json out = json::object();
    for (const auto& [index, cert] : witnesses) out[std::to_string(index + 1)] = triangular_to_json(cert);
    return out;
}

std::map<std::size_t, TriangularCertificate> witness_map_from_json(const json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
    std::map<std::size_t, TriangularCertificate> out;
    for (const auto& [key, value] : j.items()) {
        std::size_t one_based = 0;
        try {
            one_based = std::stoul(key);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + " keys must be 1-based indices");
        }
        if (one_based == 0) throw ParseError(std::string(what) + " keys are 1-based");
        out.emplace(one_based - 1, triangular_from_json(value));
    }
    return out;
}

}  // namespace

json forced_set_to_json(const ForcedSet& f) {
    return {{"forcedRows", indices_to_json({f.forced_rows.begin(), f.forced_rows.end()})},
            {"forcedCols", indices_to_json({f.forced_cols.begin(), f.forced_cols.end()})},
            {"rowWitnesses", witness_map_to_json(f.row_witnesses)},
            {"colWitnesses", witness_map_to_json(f.col_witnesses)}};
}

ForcedSet forced_set_from_json(const json& j) {
    ForcedSet out;
    for (std::size_t i : indices_from_json(require_field(j, "forcedRows"), "forcedRows"))
        out.forced_rows.insert(i);
    for (std::size_t c : indices_from_json(require_field(j, "forcedCols"), "forcedCols"))
        out.forced_cols.insert(c);
    out.row_witnesses = witness_map_from_json(require_field(j, "rowWitnesses"), "rowWitnesses");
    out.col_witnesses = witness_map_from_json(require_field(j, "colWitnesses"), "colWitnesses");
    return out;
}

json cycle_to_json(const CycleCertificate& c) {
    return {{"rows", indices_to_json(c.rows)},
            {"cols", indices_to_json(c.cols)},
            {"alternatingClass", to_string(c.alternating_class)}};
}

CycleCertificate cycle_from_json(const json& j) {
    CycleCertificate out;
    out.rows = indices_from_json(require_field(j, "rows"), "rows");
    out.cols = indices_from_json(require_field(j, "cols"), "cols");
    out.alternating_class = integer_from_json(require_field(j, "alternatingClass"));
    return out;
}

json certificate_to_json(const IrrationalityCertificate& cert) {
    return {{"size", cert.size},
            {"forced", forced_set_to_json(cert.forced)},
            {"obstruction", cycle_to_json(cert.obstruction)}};
}

IrrationalityCertificate certificate_from_json(const json& j) {
    IrrationalityCertificate out;
    out.size = size_from_json(require_field(j, "size"), "size");
    out.forced = forced_set_from_json(require_field(j, "forced"));
    out.obstruction = cycle_from_json(require_field(j, "obstruction"));
    return out;
}

json bounds_report_to_json(const BoundsReport& report) {
    json by_rank = json::array();
    for (std::uint64_t count : report.patterns_by_rank) by_rank.push_back(count);
    return {{"lowerBound", report.lower_bound},
            {"lowerWitness", triangular_to_json(report.lower_witness)},
            {"upperBound", report.upper_bound},
            {"upperWitness", sign_pattern_to_json(report.upper_witness)},
            {"tight", report.tight},
            {"search",
             {{"exhaustive", report.exhaustive},
              {"patternsExamined", report.patterns_examined},
              {"patternsByRank", std::move(by_rank)}}}};
}

namespace {

json exact_factor_to_json(const RadMatrix& factor, Arithmetic arithmetic) {
    if (arithmetic == Arithmetic::rational) {
        return generic_matrix_to_json(factor, [](const RadScalar& e) {
            return rational_to_json(e.rational_value());
        });
    }
    return rad_matrix_to_json(factor);
}

json float_matrix_to_json(const DoubleMatrix& m) {
    return generic_matrix_to_json(m, [](double e) { return json(e); });
}

DoubleMatrix float_matrix_from_json(const json& j) {
    return generic_matrix_from_json<double>(j, [](const json& e) {
        if (!e.is_number()) throw ParseError("float64 entries must be numbers");
        return e.get<double>();
    });
}

}  // namespace

json factorization_to_json(const PsdFactorization& f) {
    json row_factors = json::array();
    json col_factors = json::array();
    if (f.is_exact()) {
        for (const RadMatrix& a : f.exact_row_factors) row_factors.push_back(exact_factor_to_json(a, f.arithmetic));
        for (const RadMatrix& b : f.exact_col_factors) col_factors.push_back(exact_factor_to_json(b, f.arithmetic));
    } else {
        for (const DoubleMatrix& a : f.float_row_factors) row_factors.push_back(float_matrix_to_json(a));
        for (const DoubleMatrix& b : f.float_col_factors) col_factors.push_back(float_matrix_to_json(b));
    }
    return {{"size", f.size},
            {"arithmetic", to_string(f.arithmetic)},
            {"rowFactors", std::move(row_factors)},
            {"colFactors", std::move(col_factors)}};
}

PsdFactorization factorization_from_json(const json& j) {
    PsdFactorization f;
    f.size = size_from_json(require_field(j, "size"), "size");
    const json& arithmetic = require_field(j, "arithmetic");
    if (!arithmetic.is_string()) throw ParseError("arithmetic must be a string");
    f.arithmetic = arithmetic_from_string(arithmetic.get<std::string>());
    const json& rows = require_field(j, "rowFactors");
    const json& cols = require_field(j, "colFactors");
    if (!rows.is_array() || !cols.is_array()) throw ParseError("factor lists must be arrays");
    if (f.is_exact()) {
        auto read_exact = [&](const json& factor) {
            if (f.arithmetic == Arithmetic::rational) return to_radical(rat_matrix_from_json(factor));
            return rad_matrix_from_json(factor);
        };
        for (const json& factor : rows) f.exact_row_factors.push_back(read_exact(factor));
        for (const json& factor : cols) f.exact_col_factors.push_back(read_exact(factor));
    } else {
        for (const json& factor : rows) f.float_row_factors.push_back(float_matrix_from_json(factor));
        for (const json& factor : cols) f.float_col_factors.push_back(float_matrix_from_json(factor));
    }
    return f;
}

json polytope_to_json(const Polytope& p) {
    json vertices = json::array();
    for (const auto& v : p.vertices) {
        json point = json::array();
        for (const Rational& coord : v) point.push_back(rational_to_json(coord));
        vertices.push_back(std::move(point));
    }
    return {{"dimension", p.dimension}, {"vertices", std::move(vertices)}};
}

Polytope polytope_from_json(const json& j) {
    const std::size_t dimension = size_from_json(require_field(j, "dimension"), "dimension");
    const json& vertices = require_field(j, "vertices");
    if (!vertices.is_array()) throw ParseError("vertices must be an array");
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices.size());
    for (const json& point : vertices) {
        if (!point.is_array()) throw ParseError("each vertex must be an array of coordinates");
        std::vector<Rational> coords;
        coords.reserve(point.size());
        for (const json& c : point) coords.push_back(rational_from_json(c));
        points.push_back(std::move(coords));
    }
    return Polytope(dimension, std::move(points));
}

json facets_to_json(const std::vector<FacetInequality>& facets) {
    json out = json::array();
    for (const FacetInequality& f : facets) {
        json normal = json::array();
        for (const Rational& c : f.normal) normal.push_back(rational_to_json(c));
        out.push_back({{"normal", std::move(normal)}, {"offset", rational_to_json(f.offset)}});
    }
    return out;
}

std::vector<FacetInequality> facets_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("facets must be an array");
    std::vector<FacetInequality> out;
    for (const json& f : j) {
        const json& normal = require_field(f, "normal");
        if (!normal.is_array()) throw ParseError("facet normal must be an array");
        FacetInequality facet;
        for (const json& c : normal) facet.normal.push_back(rational_from_json(c));
        facet.offset = rational_from_json(require_field(f, "offset"));
        out.push_back(std::move(facet));
    }
    return out;
}

json slack_match_to_json(const SlackMatch& match) {
    json scales = json::array();
    for (const Rational& s : match.col_scales) scales.push_back(rational_to_json(s));
    return {{"rowPermutation", indices_to_json(match.row_permutation)},
            {"colPermutation", indices_to_json(match.col_permutation)},
            {"colScales", std::move(scales)}};
}

json verify_report_to_json(const VerifyReport& report) {
    json cells = json::array();
    for (const CellViolation& v : report.cell_violations) {
        cells.push_back(
            {{"row", v.row + 1}, {"col", v.col + 1}, {"expected", v.expected}, {"actual", v.actual}});
    }
    json factors = json::array();
    for (const FactorViolation& v : report.bad_factors) {
        factors.push_back(
            {{"side", v.row_side ? "row" : "col"}, {"index", v.index + 1}, {"reason", v.reason}});
    }
    return {{"valid", report.valid},
            {"cellViolations", std::move(cells)},
            {"badFactors", std::move(factors)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << dump(j);
    if (!out) throw Error("failed writing file '" + path + "'");
}

namespace {

std::optional<std::string> builtin_name(const std::string& name) {
    constexpr std::string_view prefix = "builtin:";
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
}

}  // namespace

RatMatrix load_matrix(const std::string& path_or_builtin) {
    if (const auto name = builtin_name(path_or_builtin)) {
        if (auto m = fixtures::builtin_matrix(*name)) return *m;
        throw Error("unknown builtin matrix '" + *name + "'");
    }
    return rat_matrix_from_json(load_json_file(path_or_builtin));
}

Polytope load_polytope(const std::string& path_or_builtin) {
    if (const auto name = builtin_name(path_or_builtin)) {
        if (auto p = fixtures::builtin_polytope(*name)) return *p;
        throw Error("unknown builtin polytope '" + *name + "'");
    }
    return polytope_from_json(load_json_file(path_or_builtin));
}

}  // namespace psdrank::io
