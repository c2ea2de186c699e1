#pragma once

#include <string>
#include <vector>

#include "ferrochi/partition.hpp"
#include "ferrochi/poset.hpp"
#include "ferrochi/ratlinalg.hpp"

namespace ferrochi {

// The homogenized arrangement of a composition nu of length n: hyperplanes
// x_i - x_j = y_i^(l) for 1 <= i < j <= n+1 and l <= nu_i, living in
// R^(m+n+1) with coordinates ordered (x_1..x_(n+1), y_1^(1)..y_n^(nu_n)).
// Throws BoundError when the hyperplane count exceeds max_hyperplanes.
std::vector<RationalHyperplane> build_arrangement_nu(const WeakComposition& nu, int max_hyperplanes = 14);

// Poset of all nonempty intersections of subfamilies (ambient space as the
// bottom), ordered by reverse containment and ranked by codimension.  Built
// by closing the flat set under single-hyperplane intersections.
RankedPoset intersection_poset(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes = 14);

UniPoly char_poly_arrangement(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes = 14);

// Zaslavsky region count (-1)^rank * chi(-1).
BigInt region_count(const std::vector<RationalHyperplane>& hyperplanes, int max_hyperplanes = 14);

// Explicit change of coordinates carrying the doubled-coordinate graphic
// arrangement of the composition graph onto the homogenized arrangement.
// A is the forward map on basis vectors; psi = (A^-1)^T acts on points and
// carries each graphic hyperplane onto its homogenized partner.
struct CoordinateMap {
    RatMatrix a;       // forward map
    RatMatrix a_inv;   // explicit inverse, built from the reverse basis rules
    RatMatrix psi;     // (A^-1)^T
    BigRat det;
    bool verified = false;
    std::string failure;  // first failed hyperplane, when !verified
};

CoordinateMap coordinate_map_nu(const WeakComposition& nu);

// The graphic arrangement x_u = x_v (one hyperplane per edge) of the
// composition graph with one isolated vertex appended, in the coordinate
// order matching coordinate_map_nu.
std::vector<RationalHyperplane> graphic_arrangement_nu(const WeakComposition& nu);

}  // namespace ferrochi
