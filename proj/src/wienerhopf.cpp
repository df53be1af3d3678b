#include "szego/wienerhopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szego::wh {

namespace {

// Exact one-sided masks for factors coming out of the grid exponential; the
// discarded side is transform roundoff of a series that is one-sided in exact
// arithmetic.
LaurentSeries force_analytic(const LaurentSeries& s) { return project_plus(s); }

LaurentSeries force_coanalytic_unit(const LaurentSeries& s) {
    LaurentSeries out = project_minus(s);
    out.set_coeff(0, 1.0);
    return out;
}

}  // namespace

int winding_number(const LaurentSeries& phi, int grid) {
    const GridSampling g = samples_from_coeffs(phi, grid);
    const auto [lo, hi] = detail::modulus_range(g.samples);
    if (!(hi > 0.0) || !(lo > kVanishTol * hi))
        throw NearVanishingSymbol("grid modulus minimum " + std::to_string(lo) +
                                  " against maximum " + std::to_string(hi));
    return detail::unwrap_phase(g.samples).winding;
}

WienerHopfFactorization factorize(const LaurentSeries& phi, int grid) {
    WienerHopfFactorization f;
    f.log_symbol = log_series(phi, grid);
    f.winding = 0;

    const LaurentSeries wp = project_plus(f.log_symbol);
    const LaurentSeries wm = project_minus(f.log_symbol);
    f.plus = force_analytic(exp_series(wp, grid));
    f.plus_inv = force_analytic(exp_series(negate(wp), grid));
    f.minus = force_coanalytic_unit(exp_series(wm, grid));
    f.minus_inv = force_coanalytic_unit(exp_series(negate(wm), grid));

    const GridSampling gphi = samples_from_coeffs(phi, grid);
    const GridSampling gp = samples_from_coeffs(f.plus, grid);
    const GridSampling gm = samples_from_coeffs(f.minus, grid);
    double err = 0.0, scale = 0.0;
    for (int m = 0; m < grid; ++m) {
        const size_t i = static_cast<size_t>(m);
        err = std::max(err, std::abs(gp.samples[i] * gm.samples[i] - gphi.samples[i]));
        scale = std::max(scale, std::abs(gphi.samples[i]));
    }
    f.reconstruction_error = scale > 0.0 ? err / scale : err;
    return f;
}

SzegoEvaluation szego_function(const LaurentSeries& w, cplx z, int grid) {
    if (std::abs(std::abs(z) - 1.0) < 1e-12)
        throw PointOnCircle("Szego function undefined on the unit circle");
    const LaurentSeries lw = log_series(w, grid);
    const int band = lw.half_bandwidth();
    SzegoEvaluation out;
    out.point = z;
    if (std::abs(z) < 1.0) {
        out.side = Side::interior;
        cplx acc{};
        for (int k = band; k >= 1; --k) acc = acc * z + lw.coeff(k);
        acc = acc * z + lw.coeff(0) / 2.0;
        out.value = std::exp(acc);
    } else {
        out.side = Side::exterior;
        const cplx zi = 1.0 / z;
        cplx acc{};
        for (int k = band; k >= 1; --k) acc = acc * zi + lw.coeff(-k);
        acc = acc * zi + lw.coeff(0) / 2.0;
        out.value = std::exp(-acc);
    }
    return out;
}

cplx szego_function_quadrature(const LaurentSeries& w, cplx z, int grid) {
    if (std::abs(std::abs(z) - 1.0) < 1e-12)
        throw PointOnCircle("Szego function undefined on the unit circle");
    GridSampling g = samples_from_coeffs(w, grid);
    const auto [lo, hi] = detail::modulus_range(g.samples);
    if (!(hi > 0.0) || !(lo > kVanishTol * hi))
        throw NearVanishingSymbol("weight vanishes on the grid");
    const detail::Unwrapped u = detail::unwrap_phase(g.samples);
    if (u.winding != 0)
        throw NonzeroWinding(u.winding, "Szego function requires winding 0");
    cplx acc{};
    for (int m = 0; m < grid; ++m) {
        const size_t i = static_cast<size_t>(m);
        const cplx zm = std::polar(1.0, 2.0 * std::numbers::pi * m / grid);
        const cplx logw{std::log(std::abs(g.samples[i])), u.phase[i]};
        acc += logw * (zm + z) / (zm - z);
    }
    return std::exp(acc / (2.0 * static_cast<double>(grid)));
}

LaurentSeries reflection_coefficient(const LaurentSeries& w, int grid,
                                     bool allow_unnormalized) {
    if (allow_unnormalized) {
        const WienerHopfFactorization f = factorize(w, grid);
        return detail::grid_product(f.plus_inv, f.minus, grid);
    }
    return reflection_data(w, grid).r;
}

ReflectionData reflection_data(const LaurentSeries& w, int grid) {
    const LaurentSeries lw = log_series(w, grid);
    const LaurentSeries w_norm = scale(w, std::exp(-lw.coeff(0)));
    const WienerHopfFactorization f = factorize(w_norm, grid);
    ReflectionData out;
    out.r = detail::grid_product(f.plus_inv, f.minus, grid);
    out.r_inv = detail::grid_product(f.plus, f.minus_inv, grid);
    return out;
}

double triple_norm(const WienerHopfFactorization& f, const BeurlingWeight& nu) {
    return triple_seminorm(f, nu, 0);
}

double triple_seminorm(const WienerHopfFactorization& f, const BeurlingWeight& nu,
                       int n) {
    return std::max({beurling_seminorm(f.plus, nu, n),
                     beurling_seminorm(f.minus, nu, n),
                     beurling_seminorm(f.plus_inv, nu, n),
                     beurling_seminorm(f.minus_inv, nu, n)});
}

std::vector<double> triple_seminorm_table(const WienerHopfFactorization& f, int limit) {
    std::vector<double> table(static_cast<size_t>(limit) + 1, 0.0);
    const auto accumulate = [&](const LaurentSeries& s) {
        // suffix sums of |c_k| over |k| >= m
        std::vector<double> tail(static_cast<size_t>(limit) + 2, 0.0);
        const int band = s.half_bandwidth();
        for (int m = std::min(limit, band); m >= 0; --m) {
            double here = std::abs(s.coeff(m));
            if (m > 0) here += std::abs(s.coeff(-m));
            tail[static_cast<size_t>(m)] = tail[static_cast<size_t>(m) + 1] + here;
        }
        // indices beyond the table's reach but inside the band fold into the
        // deepest stored tail
        if (band > limit) {
            double rest = 0.0;
            for (int k = limit + 1; k <= band; ++k)
                rest += std::abs(s.coeff(k)) + std::abs(s.coeff(-k));
            for (auto& t : tail) t += rest;
        }
        for (int m = 0; m <= limit; ++m)
            table[static_cast<size_t>(m)] =
                std::max(table[static_cast<size_t>(m)], tail[static_cast<size_t>(m)]);
    };
    accumulate(f.plus);
    accumulate(f.minus);
    accumulate(f.plus_inv);
    accumulate(f.minus_inv);
    return table;
}

}  // namespace szego::wh
