#include "szego/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szego::toeplitz {

ToeplitzSection build_section(const LaurentSeries& phi, int n) {
    if (n < 0) throw std::invalid_argument("section order must be nonnegative");
    ToeplitzSection t;
    t.n = n;
    t.entries.resize(n + 1, n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) t.entries(j, k) = phi.coeff(j - k);
    return t;
}

Eigen::MatrixXcd invert_section(const ToeplitzSection& t) {
    const double section_scale = t.entries.cwiseAbs().maxCoeff();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(t.entries);
    const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
    double min_pivot = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < diag.size(); ++i)
        min_pivot = std::min(min_pivot, std::abs(diag(i)));
    if (!(min_pivot > 1e-12 * section_scale))
        throw SingularSection("pivot " + std::to_string(min_pivot) +
                              " below threshold for section of order " +
                              std::to_string(t.n));
    return lu.inverse();
}

cplx full_inverse_entry(const wh::WienerHopfFactorization& f, int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("matrix indices must be nonnegative");
    cplx sum{};
    for (int m = 0; m <= std::min(j, k); ++m)
        sum += f.plus_inv.coeff(j - m) * f.minus_inv.coeff(m - k);
    return sum;
}

cplx tninf_inverse_entry(const wh::WienerHopfFactorization& f, int n, int j, int k) {
    if (j < 0 || j > n || k < 0 || k > n)
        throw std::invalid_argument("probe indices must lie in [0, n]");
    cplx correction{};
    // (plus_inv)_{j+m} needs j+m >= 0 and (minus_inv)_{-(m+k)} needs m+k >= 0
    const int m_lo = std::max(n + 1 - j - k, std::max(-j, -k));
    // beyond the stored bands the factors are zero
    const int m_hi = std::min(f.plus_inv.half_bandwidth() - j,
                              f.minus_inv.half_bandwidth() - k);
    for (int m = m_lo; m <= m_hi; ++m)
        correction += f.plus_inv.coeff(j + m) * f.minus_inv.coeff(-(m + k));
    return full_inverse_entry(f, j, k) - correction;
}

DecayReport theorem1_report(const LaurentSeries& phi, const BeurlingWeight& nu,
                            int n_lo, int n_hi, const std::vector<Probe>& probes,
                            int grid) {
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    if (probes.empty()) throw std::invalid_argument("at least one probe required");

    const wh::WienerHopfFactorization f = wh::factorize(phi, grid);
    const std::vector<double> tails = wh::triple_seminorm_table(f, n_hi + 2);

    DecayReport report;
    report.rate_floor = 1e-13;
    report.predicted_ratio = std::exp(-growth_rate(nu, std::max(64, n_hi)));
    const int count = n_hi - n_lo + 1;
    const int calib_count = std::max(1, (count + 2) / 3);
    report.calibration_end = n_lo + calib_count;

    const size_t np = probes.size();
    report.c_by_probe.assign(np, 0.0);
    report.fitted_ratio_by_probe.assign(np, 0.0);

    struct Cell {
        double error = 0.0, bound = 0.0;
        int j = 0, k = 0;
        bool singular = false;
        bool in_range = true;
    };
    std::vector<std::vector<Cell>> cells(np, std::vector<Cell>(static_cast<size_t>(count)));

    for (int n = n_lo; n <= n_hi; ++n) {
        const size_t ni = static_cast<size_t>(n - n_lo);
        Eigen::MatrixXcd inv;
        bool singular = false;
        try {
            inv = invert_section(build_section(phi, n));
        } catch (const SingularSection&) {
            singular = true;
        }
        for (size_t p = 0; p < np; ++p) {
            Cell& cell = cells[p][ni];
            cell.j = probes[p].from_corner ? n - probes[p].j : probes[p].j;
            cell.k = probes[p].from_corner ? n - probes[p].k : probes[p].k;
            if (cell.j < 0 || cell.j > n || cell.k < 0 || cell.k > n) {
                cell.in_range = false;
                continue;
            }
            cell.bound = std::min(tails[static_cast<size_t>(n + 1 - cell.k)],
                                  tails[static_cast<size_t>(n + 1 - cell.j)]);
            if (singular) {
                cell.singular = true;
                report.any_singular = true;
                continue;
            }
            cell.error =
                std::abs(inv(cell.j, cell.k) - full_inverse_entry(f, cell.j, cell.k));
        }
    }

    constexpr double tiny = 1e-14;
    for (size_t p = 0; p < np; ++p) {
        double c = 0.0;
        for (int n = n_lo; n < report.calibration_end; ++n) {
            const Cell& cell = cells[p][static_cast<size_t>(n - n_lo)];
            if (cell.singular || !cell.in_range) continue;
            if (cell.bound > tiny)
                c = std::max(c, cell.error / cell.bound);
            else if (cell.error > tiny)
                c = std::numeric_limits<double>::infinity();
        }
        report.c_by_probe[p] = c;

        std::vector<std::pair<int, double>> points;
        for (int n = n_lo; n <= n_hi; ++n) {
            const Cell& cell = cells[p][static_cast<size_t>(n - n_lo)];
            if (!cell.singular && cell.in_range) points.emplace_back(n, cell.error);
        }
        report.fitted_ratio_by_probe[p] =
            fit_geometric_ratio(points, report.rate_floor).ratio;
    }

    for (int n = n_lo; n <= n_hi; ++n) {
        for (size_t p = 0; p < np; ++p) {
            const Cell& cell = cells[p][static_cast<size_t>(n - n_lo)];
            if (!cell.in_range) continue;
            DecayRow row;
            row.n = n;
            row.j = cell.j;
            row.k = cell.k;
            row.probe = static_cast<int>(p);
            row.error = cell.error;
            row.bound = cell.bound;
            row.c = report.c_by_probe[p];
            row.calibration = n < report.calibration_end;
            row.singular = cell.singular;
            if (cell.singular) {
                row.pass = false;
            } else if (row.calibration) {
                row.pass = true;
            } else {
                // absolute 1e-14 cushion against roundoff in O(1) entries
                row.pass = cell.error <= row.c * cell.bound + 1e-14;
            }
            report.all_pass = report.all_pass && (row.pass || cell.singular);
            report.rows.push_back(row);
        }
    }
    return report;
}

}  // namespace szego::toeplitz
