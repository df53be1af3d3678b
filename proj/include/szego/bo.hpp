#pragma once

#include <Eigen/Dense>
#include <vector>

#include "szego/opuc.hpp"
#include "szego/ratefit.hpp"
#include "szego/series.hpp"
#include "szego/weights.hpp"
#include "szego/wienerhopf.hpp"

namespace szego::bo {

// Tail operator built from the reflection coefficient: entry (l,p) is
// sum_{m>n} r_{l+m} (r^{-1})_{-(m+p)}, the coefficient form of the
// scattering fixed-point kernel.  For real weights (r^{-1})_{-(m+p)} equals
// conj(r_{m+p}) and the truncation is Hermitian positive semidefinite.
struct BOOperator {
    int n = 0;
    int truncation = 0;  // rows/columns kept
    Eigen::MatrixXcd entries;
    double trace_bound = 0.0;  // sum_{m>n} (1+m) |r_m|^2
};

// Derives r^{-1} by pointwise grid inversion; throws ReflectionNotInvertible
// when |r| is not bounded below on the grid.
BOOperator build_bo(const LaurentSeries& r, int n, int truncation,
                    int grid = kDefaultGrid);
BOOperator build_bo(const LaurentSeries& r, const LaurentSeries& r_inv, int n,
                    int truncation);

inline constexpr double kSolveResidualTol = 1e-10;

// Solution of mu = e0 + A mu on the truncation.
struct MuTilde {
    int n = 0;
    std::vector<cplx> values;
    double residual = 0.0;     // infinity norm of (I-A) mu - e0
    double trace_bound = 0.0;
    bool contractive = false;  // trace_bound < 1
    double neumann_gap = -1.0; // LU vs Neumann-sum disagreement when bound < 1/2
};

// Dense LU solve of (I - A) mu = e0; throws ContractionFailure when the
// bound is >= 1 and the solve does not certify itself by residual.
MuTilde solve_mu(const BOOperator& op);

// Phi_n(0) = sum_l mu_l (r^{-1})_{-n-l} over the stored band.
cplx phi_n_zero(const MuTilde& mu, const LaurentSeries& r_inv);

// Verblunsky coefficients through the fixed-point route, rows n = 1..n_max
// with alpha_{n-1} = -conj(Phi_n(0)).  The truncation starts at `truncation`
// and doubles until the coefficients move by less than 1e-10.
opuc::VerblunskyReport verblunsky_bo(const LaurentSeries& w, int n_max,
                                     int truncation = 64, int grid = kDefaultGrid);

struct BaxterRow {
    int n = 0;
    double abs_phi_zero = 0.0;
    double nu_n = 0.0;
    double increment = 0.0;    // nu_n |Phi_n(0)|
    double partial_sum = 0.0;
    bool failed = false;
};

struct BaxterReport {
    std::vector<BaxterRow> rows;
    double weight_norm = 0.0;      // ||w||_nu over the stored band
    double tail_ratio = 0.0;       // median increment ratio over the last quarter
    bool increments_decaying = true;
    bool weight_in_class = true;   // weighted reflection tail decays over the band
};

BaxterReport baxter_report(const LaurentSeries& w, const BeurlingWeight& nu,
                           int n_max, int truncation = 64, int grid = kDefaultGrid);

struct BornRow {
    int n = 0;
    cplx phi_zero{};
    cplx r_inv_coeff{};        // (r^{-1})_{-n}
    double abs_difference = 0.0;
    double weighted = 0.0;     // nu_n^3 |d_n|
    double partial_sum = 0.0;  // running sum of the weighted differences
    bool failed = false;
};

struct BornReport {
    std::vector<BornRow> rows;
    double fitted_ratio = 0.0;  // geometric rate of |d_n| above the floor
    double rate_floor = 0.0;
    int fit_lo = 0;
    int fit_hi = 0;
};

BornReport born_report(const LaurentSeries& w, const BeurlingWeight& nu, int n_max,
                       int fit_lo = 6, int fit_hi = 20, int truncation = 64,
                       int grid = kDefaultGrid);

}  // namespace szego::bo
