#pragma once

#include "sset/sset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace sset;

struct Named {
    std::string name;
    SimplicialSet value;
};

/// Delta^0 <- boundary(Delta^1) -> Delta^1, collapsing both endpoints.
inline SimplicialSet circle(int D)
{
    const SimplicialMap b = boundary_inclusion(1, D);
    return pushout(to_point(b.source()), b).object;
}

inline std::vector<Named> small_sets(int D)
{
    std::vector<Named> out{
        {"delta0", standard_simplex(0, D)},
        {"delta1", standard_simplex(1, D)},
        {"delta2", standard_simplex(2, D)},
        {"boundary1", boundary(1, D)},
        {"boundary2", boundary(2, D)},
        {"horn21", horn(2, 1, D)},
        {"horn20", horn(2, 0, D)},
        {"circle", circle(D)},
        {"two_points", from_simplicial_complex(2, {}, D)},
        {"path3", from_simplicial_complex(3, {{0, 1}, {1, 2}}, D)},
        {"nerve_arrow", nerve(arrow_category(), D)},
        {"nerve_iso", nerve(iso_pair_category(), D)},
    };
    return out;
}

/// Categories used as quasi-category fixtures.
inline std::vector<std::pair<std::string, FiniteCategory>> categories()
{
    return {
        {"terminal", terminal_category()},
        {"arrow", arrow_category()},
        {"iso_pair", iso_pair_category()},
        {"ordinal2", ordinal_category(2)},
        {"z2", cyclic_group_category(2)},
        {"discrete2", discrete_category(2)},
    };
}

} // namespace fixtures
