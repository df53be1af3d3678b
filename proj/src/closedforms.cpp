#include "szego/closedforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace szego::closedform {

Example1::Example1(double a) : a_(a) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("Example1 requires 0 < a < 1");
    const double inv = 1.0 / a;
    const double root = std::sqrt(inv * inv - 1.0);
    mu_plus_ = inv + root;
    mu_minus_ = inv - root;
}

double Example1::alpha(int n) const {
    if (n < 0) throw std::domain_error("alpha index must be nonnegative");
    return -(mu_plus_ - mu_minus_) /
           (std::pow(mu_plus_, n + 2) - std::pow(mu_minus_, n + 2));
}

double Example1::residue_convergent(int n) const {
    return -alpha(n) * std::pow(mu_plus_, n + 2);
}

cplx Example1::szego_interior(cplx z) const {
    return std::sqrt(a_ / (2.0 * mu_minus_)) * (1.0 - z / mu_plus_);
}

LaurentSeries Example1::weight() const {
    LaurentSeries w(1);
    w.set_coeff(-1, -a_ / 2.0);
    w.set_coeff(0, 1.0);
    w.set_coeff(1, -a_ / 2.0);
    return w;
}

Example2::Example2(double q, int terms) : q_(q), terms_(terms) {
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("Example2 requires 0 < q < 1");
    if (terms < 1) throw std::domain_error("Example2 requires terms >= 1");
}

double Example2::truncation_tail() const { return std::pow(q_, terms_); }

double Example2::alpha(int n) const {
    if (n < 0) throw std::domain_error("alpha index must be nonnegative");
    const double mag = std::pow(q_, (n + 1) / 2.0);
    return (n % 2 == 0) ? mag : -mag;
}

double Example2::residue_convergent(int n) const {
    const double pole = -1.0 / std::sqrt(q_);
    return alpha(n) * std::pow(pole, n + 2);
}

cplx Example2::born_series(cplx z) const {
    const double rq = std::sqrt(q_);
    return -rq * z / (1.0 + rq * z);
}

cplx Example2::szego_interior(cplx z) const {
    cplx prod = 1.0;
    double qj1 = q_;                  // q^{j+1}
    double qjh = std::sqrt(q_);      // q^{j+1/2}
    for (int j = 0; j < terms_; ++j) {
        prod *= std::sqrt(1.0 - qj1) * (1.0 + qjh * z);
        qj1 *= q_;
        qjh *= q_;
    }
    return prod;
}

LaurentSeries Example2::weight(int half_bandwidth, int grid) const {
    GridSampling g;
    g.size = grid;
    g.samples.resize(static_cast<size_t>(grid));
    for (int m = 0; m < grid; ++m) {
        const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * m / grid);
        g.samples[static_cast<size_t>(m)] = std::norm(szego_interior(z));
    }
    return coeffs_from_samples(g, half_bandwidth);
}

}  // namespace szego::closedform
