#pragma once

#include "psdrank/bounds.hpp"
#include "psdrank/matrix.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/rationality.hpp"
#include "psdrank/slackgeom.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace psdrank::io {

using json = nlohmann::json;

// Scalar encoding: exact values travel as strings ("p", "p/q"); plain JSON
// integers are accepted on input. All row/column indices are 1-based in
// files, matching the usual mathematical convention; see docs/formats.md.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json radscalar_to_json(const RadScalar& a);
RadScalar radscalar_from_json(const json& j);

json matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const json& j);

json rad_matrix_to_json(const RadMatrix& m);
RadMatrix rad_matrix_from_json(const json& j);

json sign_pattern_to_json(const SignPattern& p);
SignPattern sign_pattern_from_json(const json& j);

json triangular_to_json(const TriangularCertificate& cert);
TriangularCertificate triangular_from_json(const json& j);

json forced_set_to_json(const ForcedSet& f);
ForcedSet forced_set_from_json(const json& j);

json cycle_to_json(const CycleCertificate& c);
CycleCertificate cycle_from_json(const json& j);

json certificate_to_json(const IrrationalityCertificate& cert);
IrrationalityCertificate certificate_from_json(const json& j);

json bounds_report_to_json(const BoundsReport& report);

json factorization_to_json(const PsdFactorization& f);
PsdFactorization factorization_from_json(const json& j);

json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json facets_to_json(const std::vector<FacetInequality>& facets);
std::vector<FacetInequality> facets_from_json(const json& j);

json slack_match_to_json(const SlackMatch& match);

json verify_report_to_json(const VerifyReport& report);

/// Reads a whole file as JSON; throws Error on I/O failure, ParseError on
/// malformed JSON.
json load_json_file(const std::string& path);

/// Serialized with 2-space indentation, sorted keys, trailing newline, so
/// identical inputs yield byte-identical files.
std::string dump(const json& j);

void save_json_file(const std::string& path, const json& j);

/// Resolves "builtin:<name>" fixtures, else reads a matrix file.
RatMatrix load_matrix(const std::string& path_or_builtin);

/// Resolves "builtin:<name>" fixtures, else reads a polytope file.
Polytope load_polytope(const std::string& path_or_builtin);

}  // namespace psdrank::io
