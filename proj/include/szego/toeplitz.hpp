#pragma once

#include <Eigen/Dense>
#include <vector>

#include "szego/ratefit.hpp"
#include "szego/series.hpp"
#include "szego/weights.hpp"
#include "szego/wienerhopf.hpp"

namespace szego::toeplitz {

// (n+1) x (n+1) block with entry (j,k) = phi_{j-k}; constant along diagonals
// and Hermitian whenever phi is real on the circle.
struct ToeplitzSection {
    int n = 0;
    Eigen::MatrixXcd entries;
};

ToeplitzSection build_section(const LaurentSeries& phi, int n);

// Dense partial-pivoting inverse; throws SingularSection when a pivot falls
// below 1e-12 times the section scale.
Eigen::MatrixXcd invert_section(const ToeplitzSection& t);

// Entry (j,k) of the full inverse, the product of the two one-sided factor
// inverses: sum_{m=0}^{min(j,k)} (plus_inv)_{j-m} (minus_inv)_{m-k}.
cplx full_inverse_entry(const wh::WienerHopfFactorization& f, int j, int k);

// Full-inverse entry minus the tail correction
// sum_{m >= n+1-j-k} (plus_inv)_{j+m} (minus_inv)_{-(m+k)}; the sum is finite
// by the stored bands and terms with j+m < 0 vanish by one-sided support.
cplx tninf_inverse_entry(const wh::WienerHopfFactorization& f, int n, int j, int k);

// Probe position, either absolute (j,k) or anchored at the (n,n) corner.
struct Probe {
    int j = 0;
    int k = 0;
    bool from_corner = false;
};

struct DecayRow {
    int n = 0;
    int j = 0;
    int k = 0;
    int probe = 0;
    double error = 0.0;  // |section inverse - full inverse| at the probe
    double bound = 0.0;  // min of the two wiener tail seminorms
    double c = 0.0;      // calibrated constant for this probe
    bool calibration = false;
    bool pass = true;
    bool singular = false;
};

struct DecayReport {
    std::vector<DecayRow> rows;
    std::vector<double> c_by_probe;
    std::vector<double> fitted_ratio_by_probe;
    double predicted_ratio = 0.0;  // exp(-A(nu)) decay per step from the weight
    int calibration_end = 0;       // first validated n
    double rate_floor = 0.0;       // errors below this are excluded from fits
    bool all_pass = true;
    bool any_singular = false;
};

// Checks the finite-section inequality: errors at the probes against the
// calibrated constant times the tail bound, calibrating on the first third of
// the n-range and validating on the rest.
DecayReport theorem1_report(const LaurentSeries& phi, const BeurlingWeight& nu,
                            int n_lo, int n_hi, const std::vector<Probe>& probes,
                            int grid = kDefaultGrid);

}  // namespace szego::toeplitz
