#pragma once

#include <random>

#include "szego/series.hpp"

namespace szego::testutil {

// Random real trigonometric polynomial of the given degree with unit mean
// and perturbation mass capped so the minimum stays at or above 0.2.
inline LaurentSeries random_positive_weight(std::mt19937& rng, int degree = 4) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    LaurentSeries w(degree);
    w.set_coeff(0, 1.0);
    double mass = 0.0;
    std::vector<cplx> c(static_cast<size_t>(degree));
    for (int k = 1; k <= degree; ++k) {
        c[static_cast<size_t>(k - 1)] = cplx{u(rng), u(rng)};
        mass += 2.0 * std::abs(c[static_cast<size_t>(k - 1)]);
    }
    const double budget = 0.8;
    const double scale = mass > 0.0 ? budget / std::max(mass, budget) : 0.0;
    for (int k = 1; k <= degree; ++k) {
        const cplx v = c[static_cast<size_t>(k - 1)] * scale;
        w.set_coeff(k, v);
        w.set_coeff(-k, std::conj(v));
    }
    return w;
}

// exp of a random band-limited series: non-vanishing with winding zero.
inline LaurentSeries random_nonvanishing_symbol(std::mt19937& rng, int band = 8,
                                                double scale = 0.5, int grid = 1024) {
    std::uniform_real_distribution<double> u(-scale, scale);
    LaurentSeries f(band);
    for (int k = -band; k <= band; ++k) f.set_coeff(k, cplx{u(rng), u(rng)});
    return exp_series(f, grid);
}

}  // namespace szego::testutil
