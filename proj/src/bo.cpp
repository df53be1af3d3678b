#include "szego/bo.hpp"

#include <algorithm>
#include <cmath>

namespace szego::bo {

namespace {

double trace_bound_from(const LaurentSeries& r, int n) {
    double sum = 0.0;
    for (int m = n + 1; m <= r.half_bandwidth(); ++m) {
        const double a = std::abs(r.coeff(m));
        sum += (1.0 + m) * a * a;
    }
    return sum;
}

}  // namespace

BOOperator build_bo(const LaurentSeries& r, int n, int truncation, int grid) {
    return build_bo(r, detail::grid_reciprocal(r, grid), n, truncation);
}

BOOperator build_bo(const LaurentSeries& r, const LaurentSeries& r_inv, int n,
                    int truncation) {
    if (n < 0) throw std::invalid_argument("tail cut must be nonnegative");
    if (truncation < 1) throw std::invalid_argument("truncation must be positive");
    const int L = truncation;
    BOOperator op;
    op.n = n;
    op.truncation = L;
    op.trace_bound = trace_bound_from(r, n);
    op.entries = Eigen::MatrixXcd::Zero(L, L);

    // entry (l,p) = C(l-p, n+p+1) with C(d,s) = sum_{t>=s} (r^{-1})_{-t} r_{d+t};
    // accumulate suffix sums while p descends so each step adds one tail term
    const int br = r.half_bandwidth();
    const int bi = r_inv.half_bandwidth();
    std::vector<cplx> acc(static_cast<size_t>(2 * L - 1));
    for (int d = -(L - 1); d <= L - 1; ++d) {
        cplx sum{};
        const int t_hi = std::min(bi, br - d);
        for (int t = n + L; t <= t_hi; ++t)
            sum += r_inv.coeff(-t) * r.coeff(d + t);
        acc[static_cast<size_t>(d + L - 1)] = sum;
    }
    for (int p = L - 1; p >= 0; --p) {
        for (int l = 0; l < L; ++l)
            op.entries(l, p) = acc[static_cast<size_t>(l - p + L - 1)];
        if (p > 0) {
            const int t = n + p;
            const cplx riv = r_inv.coeff(-t);
            if (riv != cplx{} && t <= bi)
                for (int d = -(L - 1); d <= L - 1; ++d)
                    acc[static_cast<size_t>(d + L - 1)] += riv * r.coeff(d + t);
        }
    }
    return op;
}

MuTilde solve_mu(const BOOperator& op) {
    const int L = op.truncation;
    MuTilde out;
    out.n = op.n;
    out.trace_bound = op.trace_bound;
    out.contractive = op.trace_bound < 1.0;

    const Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Identity(L, L) - op.entries;
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(L);
    e0(0) = 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(lhs);
    const Eigen::VectorXcd mu = lu.solve(e0);
    out.residual = (lhs * mu - e0).cwiseAbs().maxCoeff();
    if (!(out.residual <= kSolveResidualTol) && !out.contractive)
        throw ContractionFailure("bound " + std::to_string(op.trace_bound) +
                                 " >= 1 and solve residual " +
                                 std::to_string(out.residual) + " above tolerance");

    out.values.resize(static_cast<size_t>(L));
    for (int l = 0; l < L; ++l) out.values[static_cast<size_t>(l)] = mu(l);

    if (op.trace_bound < 0.5) {
        Eigen::VectorXcd term = e0, total = e0;
        for (int iter = 0; iter < 300; ++iter) {
            term = op.entries * term;
            total += term;
            if (term.cwiseAbs().maxCoeff() < 1e-16) break;
        }
        out.neumann_gap = (total - mu).cwiseAbs().maxCoeff();
    }
    return out;
}

cplx phi_n_zero(const MuTilde& mu, const LaurentSeries& r_inv) {
    cplx sum{};
    for (size_t l = 0; l < mu.values.size(); ++l) {
        const int idx = -mu.n - static_cast<int>(l);
        if (idx < -r_inv.half_bandwidth()) break;
        sum += mu.values[l] * r_inv.coeff(idx);
    }
    return sum;
}

namespace {

std::vector<opuc::VerblunskyRow> bo_rows(const wh::ReflectionData& rd, int n_max,
                                         int L) {
    std::vector<opuc::VerblunskyRow> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        opuc::VerblunskyRow row;
        row.n = n;
        row.method = opuc::Method::bo;
        try {
            const BOOperator op = build_bo(rd.r, rd.r_inv, n, L);
            const MuTilde mu = solve_mu(op);
            row.phi_zero = phi_n_zero(mu, rd.r_inv);
            row.alpha = -std::conj(row.phi_zero);
            row.diagnostic = op.trace_bound;
            row.below_contraction = !mu.contractive;
            if (row.below_contraction) row.note = "below contraction threshold";
        } catch (const ContractionFailure& e) {
            row.failed = true;
            row.below_contraction = true;
            row.note = e.name();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

opuc::VerblunskyReport verblunsky_bo(const LaurentSeries& w, int n_max,
                                     int truncation, int grid) {
    const wh::ReflectionData rd = wh::reflection_data(w, grid);
    opuc::VerblunskyReport report;

    int L = std::max(truncation, 8);
    const int L_cap = 512;
    std::vector<opuc::VerblunskyRow> rows = bo_rows(rd, n_max, L);
    while (L < L_cap) {
        const std::vector<opuc::VerblunskyRow> doubled = bo_rows(rd, n_max, 2 * L);
        double delta = 0.0;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].failed && !doubled[i].failed)
                delta = std::max(delta, std::abs(rows[i].alpha - doubled[i].alpha));
        rows = doubled;
        L *= 2;
        if (delta < 1e-10) break;
    }
    report.truncation = L;
    report.rows = std::move(rows);
    for (const auto& row : report.rows) {
        if (!row.failed && !row.below_contraction) {
            report.smallest_contracting_n = row.n;
            break;
        }
    }
    return report;
}

BaxterReport baxter_report(const LaurentSeries& w, const BeurlingWeight& nu,
                           int n_max, int truncation, int grid) {
    BaxterReport report;
    report.weight_norm = beurling_norm(w, nu);

    const wh::ReflectionData rd = wh::reflection_data(w, grid);
    // class diagnostic: the weighted reflection tail nu_k |r_k| must decay
    // where the coefficients still sit above roundoff
    {
        std::vector<double> weighted;
        for (int k = 1; k <= rd.r.half_bandwidth(); ++k) {
            const double a = std::abs(rd.r.coeff(k));
            if (a > 1e-13) weighted.push_back(std::exp(nu.log_at(k)) * a);
        }
        int rising = 0, falling = 0;
        for (size_t i = 1; i < weighted.size(); ++i)
            (weighted[i] > weighted[i - 1] ? rising : falling)++;
        report.weight_in_class = weighted.size() < 2 || falling >= rising;
    }

    const opuc::VerblunskyReport rep = verblunsky_bo(w, n_max, truncation, grid);
    double partial = 0.0;
    for (const auto& vr : rep.rows) {
        BaxterRow row;
        row.n = vr.n;
        row.failed = vr.failed;
        row.nu_n = nu.at(vr.n);
        if (!vr.failed) {
            row.abs_phi_zero = std::abs(vr.phi_zero);
            row.increment = row.nu_n * row.abs_phi_zero;
            partial += row.increment;
        }
        row.partial_sum = partial;
        report.rows.push_back(row);
    }

    // convergence diagnostic: median increment ratio over the last quarter
    std::vector<double> ratios;
    const size_t quarter_start = report.rows.size() - report.rows.size() / 4;
    for (size_t i = std::max<size_t>(quarter_start, 1); i < report.rows.size(); ++i) {
        const double prev = report.rows[i - 1].increment;
        const double cur = report.rows[i].increment;
        if (prev > 1e-300) ratios.push_back(cur / prev);
    }
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        report.tail_ratio = ratios[ratios.size() / 2];
        report.increments_decaying = report.tail_ratio < 1.0;
    } else {
        report.tail_ratio = 0.0;
        report.increments_decaying = true;  // increments already at zero
    }
    return report;
}

BornReport born_report(const LaurentSeries& w, const BeurlingWeight& nu, int n_max,
                       int fit_lo, int fit_hi, int truncation, int grid) {
    BornReport report;
    report.rate_floor = 1e-13;
    report.fit_lo = fit_lo;
    report.fit_hi = fit_hi;

    const wh::ReflectionData rd = wh::reflection_data(w, grid);
    const opuc::VerblunskyReport rep = verblunsky_bo(w, n_max, truncation, grid);

    double partial = 0.0;
    std::vector<std::pair<int, double>> fit_points;
    for (const auto& vr : rep.rows) {
        BornRow row;
        row.n = vr.n;
        row.failed = vr.failed;
        if (!vr.failed) {
            row.phi_zero = vr.phi_zero;
            row.r_inv_coeff = rd.r_inv.coeff(-vr.n);
            row.abs_difference = std::abs(row.phi_zero - row.r_inv_coeff);
            row.weighted = std::exp(3.0 * nu.log_at(vr.n)) * row.abs_difference;
            partial += row.weighted;
            if (vr.n >= fit_lo && vr.n <= fit_hi)
                fit_points.emplace_back(vr.n, row.abs_difference);
        }
        row.partial_sum = partial;
        report.rows.push_back(row);
    }
    report.fitted_ratio = fit_geometric_ratio(fit_points, report.rate_floor).ratio;
    return report;
}

}  // namespace szego::bo
