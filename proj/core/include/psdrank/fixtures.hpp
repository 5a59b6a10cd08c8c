#pragma once

#include "psdrank/matrix.hpp"
#include "psdrank/slackgeom.hpp"

#include <optional>
#include <string>

namespace psdrank::fixtures {

/// The built-in 8x6 showcase matrix: a slack matrix of a combinatorial cube
/// with psd rank 4 that admits no rational psd factorization of size 4.
RatMatrix cuboid_slack();

/// The combinatorial cube realizing cuboid_slack: 8 vertices in dimension 3.
Polytope cuboid_polytope();

/// Built-in matrices addressable by name ("cuboid").
std::optional<RatMatrix> builtin_matrix(const std::string& name);

/// Built-in polytopes addressable by name ("cuboid").
std::optional<Polytope> builtin_polytope(const std::string& name);

}  // namespace psdrank::fixtures
