#include "szego/gi.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "szego/bo.hpp"
#include "szego/wienerhopf.hpp"

namespace szego::gi {

SobolevHalfElement::SobolevHalfElement(const LaurentSeries& f, double symmetry_tol)
    : f_(f), norm_(0.0) {
    for (int k = 0; k <= f.half_bandwidth(); ++k) {
        const double gap = std::abs(f.coeff(-k) - std::conj(f.coeff(k)));
        if (!(gap <= symmetry_tol))
            throw SymmetryViolation("coefficient pair at |k| = " + std::to_string(k) +
                                    " breaks conjugate symmetry by " +
                                    std::to_string(gap));
    }
    double sum = 0.0;
    for (int l = -f.half_bandwidth(); l <= f.half_bandwidth(); ++l)
        sum += (1.0 + std::abs(l)) * std::norm(f.coeff(l));
    norm_ = std::sqrt(sum);
}

double h_half_norm(const SobolevHalfElement& f) { return f.norm(); }

LaurentSeries born_map(const SobolevHalfElement& f, int grid) {
    const LaurentSeries& s = f.series();
    LaurentSeries exponent(s.half_bandwidth());
    for (int k = 1; k <= s.half_bandwidth(); ++k) {
        exponent.set_coeff(k, -s.coeff(k));
        exponent.set_coeff(-k, s.coeff(-k));
    }
    return exp_series(exponent, grid);
}

double rho(const LaurentSeries& r, int n0) {
    if (n0 < 0) throw std::invalid_argument("tail start must be nonnegative");
    double sum = 0.0;
    for (int n = n0; n <= r.half_bandwidth(); ++n)
        sum += (1.0 + n) * std::norm(r.coeff(n));
    return std::sqrt(sum);
}

GIBound gi_bound_report(const LaurentSeries& w, int n_max, int truncation, int grid) {
    GIBound out;
    out.n_max = n_max;

    // requires a real positive weight: log w must be conjugate-symmetric
    LaurentSeries lw = log_series(w, grid);
    lw.set_coeff(0, 0.0);  // scale invariance: work with the normalized weight
    const SobolevHalfElement log_weight(lw, 1e-10);
    (void)log_weight;

    const wh::ReflectionData rd = wh::reflection_data(w, grid);

    out.n0 = -1;
    for (int n = 0; n <= n_max; ++n) {
        if (rho(rd.r, n) < 1.0) {
            out.n0 = n;
            break;
        }
    }
    if (out.n0 < 0)
        throw NoContraction("no tail start up to " + std::to_string(n_max) +
                            " brings rho below 1");
    out.rho = rho(rd.r, out.n0);
    out.rhs = out.rho / (1.0 - out.rho * out.rho);

    const opuc::VerblunskyReport rep = bo::verblunsky_bo(w, n_max, truncation, grid);
    double lhs_sq = 0.0;
    for (const auto& row : rep.rows) {
        if (row.n < out.n0 || row.failed) continue;
        lhs_sq += static_cast<double>(row.n) * std::norm(row.alpha);
    }
    out.lhs = std::sqrt(lhs_sq);
    // 1e-12 cushion absorbs roundoff when both sides sit at zero
    out.pass = out.lhs <= out.rhs + 1e-12;

    const double rho2 = out.rho * out.rho;
    const double resolvent_bound = rho2 * rho2 / ((1.0 - rho2) * (1.0 - rho2));
    const int L = rep.truncation;
    for (int n = std::max(out.n0, 1); n <= n_max; ++n) {
        const bo::BOOperator op = bo::build_bo(rd.r, rd.r_inv, n, L);
        Eigen::VectorXcd ae0 = op.entries.col(0);
        const Eigen::MatrixXcd lhs_mat =
            Eigen::MatrixXcd::Identity(L, L) - op.entries;
        const Eigen::VectorXcd x = Eigen::PartialPivLU<Eigen::MatrixXcd>(lhs_mat).solve(ae0);
        GIIntermediateRow row;
        row.n = n;
        row.weighted_resolvent_sq = n * x.squaredNorm();
        row.resolvent_bound = resolvent_bound;
        row.weighted_ae0_sq = n * ae0.squaredNorm();
        row.pass = row.weighted_resolvent_sq <= resolvent_bound + 1e-10 &&
                   row.weighted_ae0_sq <= rho2 * rho2 + 1e-10;
        out.intermediate_pass = out.intermediate_pass && row.pass;
        out.rows.push_back(row);
    }
    out.pass = out.pass && out.intermediate_pass;
    return out;
}

}  // namespace szego::gi
