#pragma once

#include "grhopf/hopf.hpp"

namespace grhopf {

/// The group G(R) of graded algebra maps from a coordinate ring into a finite
/// test ring, with the convolution law tabulated.
struct PointsGroup {
    std::vector<Morphism> points;
    int identity = -1;                    // index of the unit-after-counit point
    std::vector<std::vector<int>> cayley;  // cayley[i][j] = index of points[i] * points[j]
    std::vector<int> inverse;              // via precomposition with the antipode
};

/// Exhaustively enumerate relation-respecting generator assignments into
/// homogeneous elements of the test ring, then tabulate the group law.
/// Refuses (budget error) when the candidate count exceeds the budget.
PointsGroup enumerate_points(const HopfAlgebra& h, const AlgPtr& r,
                             long budget = 1000000);

/// All degree-i elements x of a finite test ring with x^m = 0, in
/// lexicographic coefficient order.
std::vector<Vec> nil_set(const AlgPtr& r, long m, int degree, long budget = 1000000);

/// Element orders of the tabulated group, sorted ascending.
std::vector<int> element_orders(const PointsGroup& g);

}  // namespace grhopf
