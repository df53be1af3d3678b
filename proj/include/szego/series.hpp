#pragma once

#include <complex>
#include <map>
#include <vector>

#include "szego/errors.hpp"

namespace szego {

using cplx = std::complex<double>;

inline constexpr int kDefaultBand = 256;
inline constexpr int kDefaultGrid = 1024;
// Relative threshold (against the grid maximum) below which a symbol counts
// as vanishing on the circle.
inline constexpr double kVanishTol = 1e-8;

// Finite two-sided coefficient band c_k, -N <= k <= N.  coeff(k) outside the
// band is exactly zero.  Instances are plain values; every operation below is
// pure and returns a fresh series, so concurrent use needs no locking.
class LaurentSeries {
public:
    LaurentSeries() : coeffs_(1) {}
    explicit LaurentSeries(int half_bandwidth);

    static LaurentSeries constant(cplx value);
    // value * z^degree
    static LaurentSeries monomial(int degree, cplx value = 1.0);
    static LaurentSeries from_terms(const std::map<int, cplx>& terms);

    int half_bandwidth() const { return n_; }
    cplx coeff(int k) const {
        return (k < -n_ || k > n_) ? cplx{} : coeffs_[static_cast<size_t>(k + n_)];
    }
    void set_coeff(int k, cplx value);

    // Exact-support predicates (c_k == 0 outside one side, bit-exact).
    bool is_analytic_type() const;    // c_k == 0 for k < 0
    bool is_coanalytic_type() const;  // c_k == 0 for k > 0

    double max_abs_coeff() const;

private:
    int n_ = 0;
    std::vector<cplx> coeffs_;  // storage index k + n_
};

struct GridSampling {
    int size = 0;               // M, a power of two
    std::vector<cplx> samples;  // values at z = exp(2*pi*i*m/M), m = 0..M-1
};

// Evaluate the series on the M-point grid; requires M a power of two with
// M >= 2N+2 (no band aliasing).
GridSampling samples_from_coeffs(const LaurentSeries& s, int grid);
// Inverse transform with indices folded to [-N, N]; requires M >= 2N+2.
LaurentSeries coeffs_from_samples(const GridSampling& g, int half_bandwidth);

// Cauchy product; the band grows to N_a + N_b.
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);

// Continuous-branch logarithm via grid sampling and phase unwrapping.
// Requires min |s| > vanish_tol relative to the grid maximum and winding 0.
LaurentSeries log_series(const LaurentSeries& s, int grid);
// Pointwise exponential on the grid, transformed back to band M/2 - 1.
LaurentSeries exp_series(const LaurentSeries& s, int grid);

// Riesz projections as exact index masks: project_plus keeps k >= 0,
// project_minus keeps k < 0, so plus + minus reproduces the input exactly.
LaurentSeries project_plus(const LaurentSeries& s);
LaurentSeries project_minus(const LaurentSeries& s);

// Drops coefficients below tol * max|c_k| and trims the band.
LaurentSeries compress(const LaurentSeries& s, double tol = 1e-15);

LaurentSeries scale(const LaurentSeries& s, cplx factor);
LaurentSeries negate(const LaurentSeries& s);
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);

// Sum of c_k z^k at a point z != 0 (two-sided Horner).
cplx evaluate(const LaurentSeries& s, cplx z);

namespace detail {

bool is_pow2(int m);

// In-place radix-2 transform.  sign = -1: X_j = sum_m x_m e^{-2 pi i jm/M};
// sign = +1: unnormalized inverse.
void fft_pow2(std::vector<cplx>& data, int sign);

struct Unwrapped {
    std::vector<double> phase;  // continuous argument along the grid
    int winding = 0;            // total increment / 2 pi
};
// Requires all samples nonzero.
Unwrapped unwrap_phase(const std::vector<cplx>& samples);

// min |v| and max |v| over the grid.
std::pair<double, double> modulus_range(const std::vector<cplx>& samples);

// Pointwise product of two series on the M-grid, folded back to band M/2-1.
LaurentSeries grid_product(const LaurentSeries& a, const LaurentSeries& b, int grid);

// Pointwise reciprocal on the M-grid; throws ReflectionNotInvertible when the
// modulus drops below tol relative to the maximum.
LaurentSeries grid_reciprocal(const LaurentSeries& s, int grid, double tol = 1e-12);

}  // namespace detail

}  // namespace szego
