#include "szego/ratefit.hpp"

#include <cmath>

namespace szego {

RateFit fit_geometric_ratio(const std::vector<std::pair<int, double>>& points,
                            double floor_value) {
    std::vector<std::pair<double, double>> kept;
    for (const auto& [n, y] : points)
        if (y > floor_value && std::isfinite(y))
            kept.emplace_back(static_cast<double>(n), std::log(y));
    RateFit out;
    out.used = static_cast<int>(kept.size());
    if (kept.size() < 2) return out;
    double sx = 0, sy = 0;
    for (const auto& [x, y] : kept) {
        sx += x;
        sy += y;
    }
    const double mx = sx / static_cast<double>(kept.size());
    const double my = sy / static_cast<double>(kept.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : kept) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) return out;
    out.ratio = std::exp(sxy / sxx);
    return out;
}

}  // namespace szego
