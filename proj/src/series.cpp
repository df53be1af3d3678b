#include "szego/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szego {

namespace detail {

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

void fft_pow2(std::vector<cplx>& a, int sign) {
    const size_t m = a.size();
    for (size_t i = 1, j = 0; i < m; ++i) {
        size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= m; len <<= 1) {
        const double ang = static_cast<double>(sign) * 2.0 * std::numbers::pi /
                           static_cast<double>(len);
        for (size_t i = 0; i < m; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                const cplx w = std::polar(1.0, ang * static_cast<double>(k));
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

Unwrapped unwrap_phase(const std::vector<cplx>& samples) {
    Unwrapped out;
    const size_t m = samples.size();
    out.phase.resize(m);
    out.phase[0] = std::arg(samples[0]);
    for (size_t i = 1; i < m; ++i)
        out.phase[i] = out.phase[i - 1] + std::arg(samples[i] / samples[i - 1]);
    const double total =
        out.phase[m - 1] - out.phase[0] + std::arg(samples[0] / samples[m - 1]);
    out.winding = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
    return out;
}

std::pair<double, double> modulus_range(const std::vector<cplx>& samples) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const cplx& v : samples) {
        const double a = std::abs(v);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    return {lo, hi};
}

LaurentSeries grid_product(const LaurentSeries& a, const LaurentSeries& b, int grid) {
    GridSampling ga = samples_from_coeffs(a, grid);
    const GridSampling gb = samples_from_coeffs(b, grid);
    for (int m = 0; m < grid; ++m) ga.samples[static_cast<size_t>(m)] *= gb.samples[static_cast<size_t>(m)];
    return coeffs_from_samples(ga, grid / 2 - 1);
}

LaurentSeries grid_reciprocal(const LaurentSeries& s, int grid, double tol) {
    GridSampling g = samples_from_coeffs(s, grid);
    const auto [lo, hi] = modulus_range(g.samples);
    if (!(lo > tol * hi))
        throw ReflectionNotInvertible("grid modulus minimum " + std::to_string(lo) +
                                      " below reciprocal threshold");
    for (cplx& v : g.samples) v = 1.0 / v;
    return coeffs_from_samples(g, grid / 2 - 1);
}

}  // namespace detail

LaurentSeries::LaurentSeries(int half_bandwidth)
    : n_(half_bandwidth),
      coeffs_(static_cast<size_t>(2 * half_bandwidth + 1)) {
    if (half_bandwidth < 0)
        throw std::invalid_argument("half_bandwidth must be nonnegative");
}

LaurentSeries LaurentSeries::constant(cplx value) {
    LaurentSeries s(0);
    s.coeffs_[0] = value;
    return s;
}

LaurentSeries LaurentSeries::monomial(int degree, cplx value) {
    LaurentSeries s(std::abs(degree));
    s.set_coeff(degree, value);
    return s;
}

LaurentSeries LaurentSeries::from_terms(const std::map<int, cplx>& terms) {
    int n = 0;
    for (const auto& [k, v] : terms) n = std::max(n, std::abs(k));
    LaurentSeries s(n);
    for (const auto& [k, v] : terms) s.set_coeff(k, v);
    return s;
}

void LaurentSeries::set_coeff(int k, cplx value) {
    if (k < -n_ || k > n_)
        throw std::out_of_range("coefficient index outside the band");
    coeffs_[static_cast<size_t>(k + n_)] = value;
}

bool LaurentSeries::is_analytic_type() const {
    for (int k = -n_; k < 0; ++k)
        if (coeff(k) != cplx{}) return false;
    return true;
}

bool LaurentSeries::is_coanalytic_type() const {
    for (int k = 1; k <= n_; ++k)
        if (coeff(k) != cplx{}) return false;
    return true;
}

double LaurentSeries::max_abs_coeff() const {
    double hi = 0.0;
    for (const cplx& c : coeffs_) hi = std::max(hi, std::abs(c));
    return hi;
}

GridSampling samples_from_coeffs(const LaurentSeries& s, int grid) {
    const int n = s.half_bandwidth();
    if (!detail::is_pow2(grid))
        throw BandAliasing("grid size " + std::to_string(grid) + " is not a power of two");
    if (grid < 2 * n + 2)
        throw BandAliasing("grid size " + std::to_string(grid) +
                           " below 2N+2 for band " + std::to_string(n));
    std::vector<cplx> x(static_cast<size_t>(grid));
    for (int k = 0; k <= n; ++k) x[static_cast<size_t>(k)] = s.coeff(k);
    for (int k = 1; k <= n; ++k) x[static_cast<size_t>(grid - k)] = s.coeff(-k);
    detail::fft_pow2(x, +1);
    return GridSampling{grid, std::move(x)};
}

LaurentSeries coeffs_from_samples(const GridSampling& g, int half_bandwidth) {
    const int grid = g.size;
    if (!detail::is_pow2(grid) || static_cast<size_t>(grid) != g.samples.size())
        throw BandAliasing("inconsistent grid sampling");
    if (grid < 2 * half_bandwidth + 2)
        throw BandAliasing("grid size " + std::to_string(grid) +
                           " below 2N+2 for band " + std::to_string(half_bandwidth));
    std::vector<cplx> x = g.samples;
    detail::fft_pow2(x, -1);
    const double inv = 1.0 / static_cast<double>(grid);
    LaurentSeries s(half_bandwidth);
    for (int k = 0; k <= half_bandwidth; ++k)
        s.set_coeff(k, x[static_cast<size_t>(k)] * inv);
    for (int k = 1; k <= half_bandwidth; ++k)
        s.set_coeff(-k, x[static_cast<size_t>(grid - k)] * inv);
    return s;
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    const int na = a.half_bandwidth();
    const int nb = b.half_bandwidth();
    LaurentSeries out(na + nb);
    for (int k = -(na + nb); k <= na + nb; ++k) {
        cplx sum{};
        const int jlo = std::max(-na, k - nb);
        const int jhi = std::min(na, k + nb);
        for (int j = jlo; j <= jhi; ++j) sum += a.coeff(j) * b.coeff(k - j);
        out.set_coeff(k, sum);
    }
    return out;
}

LaurentSeries log_series(const LaurentSeries& s, int grid) {
    GridSampling g = samples_from_coeffs(s, grid);
    const auto [lo, hi] = detail::modulus_range(g.samples);
    if (!(hi > 0.0) || !(lo > kVanishTol * hi))
        throw NearVanishingSymbol("grid modulus minimum " + std::to_string(lo) +
                                  " against maximum " + std::to_string(hi));
    const detail::Unwrapped u = detail::unwrap_phase(g.samples);
    if (u.winding != 0)
        throw NonzeroWinding(u.winding,
                             "winding number " + std::to_string(u.winding) +
                                 ", logarithm requires 0");
    for (int m = 0; m < grid; ++m) {
        const size_t i = static_cast<size_t>(m);
        g.samples[i] = cplx{std::log(std::abs(g.samples[i])), u.phase[i]};
    }
    return coeffs_from_samples(g, grid / 2 - 1);
}

LaurentSeries exp_series(const LaurentSeries& s, int grid) {
    GridSampling g = samples_from_coeffs(s, grid);
    for (cplx& v : g.samples) v = std::exp(v);
    return coeffs_from_samples(g, grid / 2 - 1);
}

LaurentSeries project_plus(const LaurentSeries& s) {
    LaurentSeries out(s.half_bandwidth());
    for (int k = 0; k <= s.half_bandwidth(); ++k) out.set_coeff(k, s.coeff(k));
    return out;
}

LaurentSeries project_minus(const LaurentSeries& s) {
    LaurentSeries out(s.half_bandwidth());
    for (int k = -s.half_bandwidth(); k < 0; ++k) out.set_coeff(k, s.coeff(k));
    return out;
}

LaurentSeries compress(const LaurentSeries& s, double tol) {
    const double cutoff = tol * s.max_abs_coeff();
    int n = 0;
    for (int k = -s.half_bandwidth(); k <= s.half_bandwidth(); ++k)
        if (std::abs(s.coeff(k)) >= cutoff && std::abs(s.coeff(k)) > 0.0)
            n = std::max(n, std::abs(k));
    LaurentSeries out(n);
    for (int k = -n; k <= n; ++k) {
        const cplx c = s.coeff(k);
        if (std::abs(c) >= cutoff) out.set_coeff(k, c);
    }
    return out;
}

LaurentSeries scale(const LaurentSeries& s, cplx factor) {
    LaurentSeries out(s.half_bandwidth());
    for (int k = -s.half_bandwidth(); k <= s.half_bandwidth(); ++k)
        out.set_coeff(k, s.coeff(k) * factor);
    return out;
}

LaurentSeries negate(const LaurentSeries& s) { return scale(s, -1.0); }

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const int n = std::max(a.half_bandwidth(), b.half_bandwidth());
    LaurentSeries out(n);
    for (int k = -n; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

cplx evaluate(const LaurentSeries& s, cplx z) {
    const int n = s.half_bandwidth();
    cplx plus{};
    for (int k = n; k >= 0; --k) plus = plus * z + s.coeff(k);
    bool has_negative = false;
    for (int k = -n; k < 0; ++k)
        if (s.coeff(k) != cplx{}) has_negative = true;
    cplx minus{};
    if (has_negative) {
        if (z == cplx{})
            throw std::domain_error("series with negative support evaluated at 0");
        const cplx w = 1.0 / z;
        for (int k = -n; k <= -1; ++k) minus = minus * w + s.coeff(k);
        minus *= w;
    }
    return plus + minus;
}

}  // namespace szego
