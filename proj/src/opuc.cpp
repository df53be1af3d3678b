#include "szego/opuc.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace szego::opuc {

MonicPolynomial monic_opuc(const LaurentSeries& w, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    MonicPolynomial p;
    p.degree = degree;
    if (degree == 0) {
        p.coeffs = {cplx{1.0}};
        return p;
    }
    Eigen::MatrixXcd moments(degree, degree);
    Eigen::VectorXcd rhs(degree);
    for (int j = 0; j < degree; ++j) {
        for (int k = 0; k < degree; ++k) moments(j, k) = w.coeff(j - k);
        rhs(j) = -w.coeff(j - degree);
    }
    const double section_scale = std::max(moments.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(moments);
    const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
    double min_pivot = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < diag.size(); ++i)
        min_pivot = std::min(min_pivot, std::abs(diag(i)));
    if (!(min_pivot > 1e-12 * section_scale))
        throw SingularMomentSection("moment section of order " +
                                    std::to_string(degree) + " is singular");
    const Eigen::VectorXcd sol = lu.solve(rhs);
    p.coeffs.resize(static_cast<size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) p.coeffs[static_cast<size_t>(k)] = sol(k);
    p.coeffs[static_cast<size_t>(degree)] = 1.0;

    double residual = 0.0;
    for (int j = 0; j < degree; ++j) {
        cplx acc{};
        for (int k = 0; k <= degree; ++k)
            acc += p.coeffs[static_cast<size_t>(k)] * w.coeff(j - k);
        residual = std::max(residual, std::abs(acc));
    }
    p.orthogonality_residual = residual;
    return p;
}

VerblunskyReport verblunsky_from_moments(const LaurentSeries& w, int n_max) {
    VerblunskyReport report;
    for (int n = 1; n <= n_max; ++n) {
        VerblunskyRow row;
        row.n = n;
        row.method = Method::moments;
        try {
            const MonicPolynomial p = monic_opuc(w, n);
            row.phi_zero = p.at_zero();
            row.alpha = -std::conj(row.phi_zero);
            row.diagnostic = p.orthogonality_residual;
        } catch (const SingularMomentSection& e) {
            row.failed = true;
            row.note = e.name();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace szego::opuc
