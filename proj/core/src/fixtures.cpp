#include "psdrank/fixtures.hpp"

namespace psdrank::fixtures {

RatMatrix cuboid_slack() {
    return RatMatrix{
        {0, 0, 2, 1, 0, 1},
        {1, 0, 0, 2, 0, 1},
        {0, 1, 2, 0, 0, 1},
        {1, 2, 0, 0, 0, 1},
        {0, 0, 2, 1, 1, 0},
        {1, 0, 0, 2, 1, 0},
        {0, 1, 2, 0, 1, 0},
        {1, 2, 0, 0, 1, 0},
    };
}

Polytope cuboid_polytope() {
    return Polytope(3, {
                           {0, 0, 0},
                           {1, 0, 0},
                           {0, 1, 0},
                           {1, 2, 0},
                           {0, 0, 1},
                           {1, 0, 1},
                           {0, 1, 1},
                           {1, 2, 1},
                       });
}

std::optional<RatMatrix> builtin_matrix(const std::string& name) {
    if (name == "cuboid") return cuboid_slack();
    return std::nullopt;
}

std::optional<Polytope> builtin_polytope(const std::string& name) {
    if (name == "cuboid") return cuboid_polytope();
    return std::nullopt;
}

}  // namespace psdrank::fixtures
