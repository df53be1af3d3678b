#pragma once

#include "szego/series.hpp"
#include "szego/weights.hpp"

namespace szego::wh {

// phi = plus * minus with plus supported on k >= 0 (the constant Fourier mode
// of log phi lives here) and minus supported on k <= 0 with minus_0 = 1, i.e.
// the minus factor is normalized at infinity.  One-sided supports and the
// unit constant are exact by construction.
struct WienerHopfFactorization {
    LaurentSeries plus;
    LaurentSeries minus;
    LaurentSeries plus_inv;
    LaurentSeries minus_inv;
    LaurentSeries log_symbol;
    int winding = 0;
    double reconstruction_error = 0.0;  // max grid |plus*minus - phi| / max |phi|
};

// Total unwrapped argument increment over the grid divided by 2 pi.
int winding_number(const LaurentSeries& phi, int grid = kDefaultGrid);

// Requires a non-vanishing symbol of winding zero.
WienerHopfFactorization factorize(const LaurentSeries& phi, int grid = kDefaultGrid);

enum class Side { interior, exterior };

struct SzegoEvaluation {
    cplx point;
    cplx value;
    Side side;
};

// Szego function from the log-coefficient series: interior branch
// exp((log w)_0/2 + sum_{k>=1} (log w)_k z^k), exterior branch
// exp(-(log w)_0/2 - sum_{k>=1} (log w)_{-k} z^{-k}).
SzegoEvaluation szego_function(const LaurentSeries& w, cplx z, int grid = kDefaultGrid);
// Trapezoid cross-check of the Herglotz integral on the sampling grid.
cplx szego_function_quadrature(const LaurentSeries& w, cplx z, int grid = kDefaultGrid);

// Reflection coefficient r = plus_inv * minus of the weight normalized so
// (log w)_0 = 0 (Verblunsky data are scale invariant).  With
// allow_unnormalized the weight is factored as given.
LaurentSeries reflection_coefficient(const LaurentSeries& w, int grid = kDefaultGrid,
                                     bool allow_unnormalized = false);

struct ReflectionData {
    LaurentSeries r;      // plus_inv * minus
    LaurentSeries r_inv;  // plus * minus_inv
};
// r and its reciprocal for the log-mean-zero normalization of w.
ReflectionData reflection_data(const LaurentSeries& w, int grid = kDefaultGrid);

// max over the four factors of the weighted norm / tail seminorm.
double triple_norm(const WienerHopfFactorization& f, const BeurlingWeight& nu);
double triple_seminorm(const WienerHopfFactorization& f, const BeurlingWeight& nu, int n);

// Wiener-weight tail table t[m] = max over factors of sum_{|k| >= m} |c_k|,
// for m = 0..limit; exact zeros beyond the stored bands.
std::vector<double> triple_seminorm_table(const WienerHopfFactorization& f, int limit);

}  // namespace szego::wh
