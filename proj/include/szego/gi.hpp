#pragma once

#include <vector>

#include "szego/series.hpp"

namespace szego::gi {

// Real-valued circle function in the half-order Sobolev class: coefficients
// obey f_{-k} = conj(f_k); the norm is (sum (1+|l|) |f_l|^2)^{1/2}.
class SobolevHalfElement {
public:
    explicit SobolevHalfElement(const LaurentSeries& f, double symmetry_tol = 1e-12);

    const LaurentSeries& series() const { return f_; }
    double norm() const { return norm_; }

private:
    LaurentSeries f_;
    double norm_;
};

double h_half_norm(const SobolevHalfElement& f);

// exp(-sum_{k>0} f_k z^k + sum_{k<0} f_k z^k); unimodular on the circle for
// real f since the exponent is purely imaginary there.
LaurentSeries born_map(const SobolevHalfElement& f, int grid = kDefaultGrid);

// (sum_{n >= n0} (n+1) |r_n|^2)^{1/2} over the stored band.
double rho(const LaurentSeries& r, int n0);

struct GIIntermediateRow {
    int n = 0;
    double weighted_resolvent_sq = 0.0;  // n ||(I-A)^{-1} A e0||^2
    double resolvent_bound = 0.0;        // rho^4 / (1-rho^2)^2
    double weighted_ae0_sq = 0.0;        // n ||A e0||^2, bounded by rho^4
    bool pass = true;
};

struct GIBound {
    int n0 = 0;
    double rho = 0.0;
    double lhs = 0.0;  // (sum_{n0 <= n <= n_max} n |alpha_{n-1}|^2)^{1/2}
    double rhs = 0.0;  // rho / (1 - rho^2)
    bool pass = false;
    int n_max = 0;
    std::vector<GIIntermediateRow> rows;
    bool intermediate_pass = true;
};

// Verifies the scattering bound for a real positive weight: picks the
// smallest n0 with rho < 1 (NoContraction if none up to n_max), accumulates
// the truncated left side from the fixed-point coefficients, and checks the
// per-n resolvent inequalities.  Truncating the sum only lowers the left
// side, so a pass is genuine.
GIBound gi_bound_report(const LaurentSeries& w, int n_max, int truncation = 64,
                        int grid = kDefaultGrid);

}  // namespace szego::gi
