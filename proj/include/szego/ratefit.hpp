#pragma once

#include <utility>
#include <vector>

namespace szego {

struct RateFit {
    double ratio = 0.0;  // estimated consecutive ratio y_{n+1}/y_n
    int used = 0;        // points that entered the fit
};

// Least-squares slope of log y against n over the points with y > floor;
// points at or below the floor are treated as numerically exhausted and left
// out.  Fewer than two usable points yield ratio 0.
RateFit fit_geometric_ratio(const std::vector<std::pair<int, double>>& points,
                            double floor_value);

}  // namespace szego
