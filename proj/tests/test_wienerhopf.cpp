#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "szego/closedforms.hpp"
#include "szego/series.hpp"
#include "szego/weights.hpp"
#include "szego/wienerhopf.hpp"

using namespace szego;

namespace {

LaurentSeries random_symbol(std::mt19937& rng, int band = 8, double scale = 0.5,
                            int grid = 1024) {
    // exp of a random band-limited series: non-vanishing with winding zero
    std::uniform_real_distribution<double> u(-scale, scale);
    LaurentSeries f(band);
    for (int k = -band; k <= band; ++k) f.set_coeff(k, cplx{u(rng), u(rng)});
    return exp_series(f, grid);
}

double max_grid_gap(const LaurentSeries& a, const LaurentSeries& b, int grid) {
    const auto ga = samples_from_coeffs(a, grid);
    const auto gb = samples_from_coeffs(b, grid);
    double gap = 0.0;
    for (int m = 0; m < grid; ++m)
        gap = std::max(gap, std::abs(ga.samples[static_cast<size_t>(m)] -
                                     gb.samples[static_cast<size_t>(m)]));
    return gap;
}

}  // namespace

TEST_CASE("winding of monomials is the degree") {
    CHECK(wh::winding_number(LaurentSeries::monomial(3), 64) == 3);
    CHECK(wh::winding_number(LaurentSeries::monomial(-2), 64) == -2);
}

TEST_CASE("winding of 2 + z is zero") {
    CHECK(wh::winding_number(LaurentSeries::from_terms({{0, 2.0}, {1, 1.0}}), 64) == 0);
}

TEST_CASE("winding adds under products") {
    const auto a = LaurentSeries::from_terms({{0, 2.0}, {1, 1.0}});
    CHECK(wh::winding_number(multiply(LaurentSeries::monomial(1), a), 64) == 1);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const LaurentSeries s = random_symbol(rng, 4, 0.4, 256);
        std::uniform_int_distribution<int> d(-3, 3);
        const int shift = d(rng);
        const auto shifted = multiply(LaurentSeries::monomial(shift), s);
        CHECK(wh::winding_number(shifted, 512) ==
              wh::winding_number(s, 256) + shift);
    }
}

TEST_CASE("winding rejects near-vanishing symbols") {
    const auto s = LaurentSeries::from_terms({{0, 1.0}, {1, -1.0}});
    CHECK_THROWS_AS(wh::winding_number(s, 64), NearVanishingSymbol);
}

TEST_CASE("factorizing one gives unit factors") {
    const auto f = wh::factorize(LaurentSeries::constant(1.0), 64);
    CHECK(std::abs(f.plus.coeff(0) - 1.0) < 1e-13);
    CHECK(f.minus.coeff(0) == cplx{1.0});
    CHECK(f.plus.max_abs_coeff() < 1.0 + 1e-13);
    CHECK(f.reconstruction_error < 1e-12);
}

TEST_CASE("factorization splits an explicit two-factor symbol") {
    const auto phi = multiply(LaurentSeries::from_terms({{0, 1.0}, {1, -0.5}}),
                              LaurentSeries::from_terms({{0, 1.0}, {-1, -0.5}}));
    const auto f = wh::factorize(phi, 256);
    CHECK(std::abs(f.plus.coeff(0) - 1.0) < 1e-10);
    CHECK(std::abs(f.plus.coeff(1) + 0.5) < 1e-10);
    CHECK(std::abs(f.minus.coeff(-1) + 0.5) < 1e-10);
    for (int k = 2; k <= 8; ++k) CHECK(std::abs(f.plus.coeff(k)) < 1e-10);
}

TEST_CASE("the constant mode of the log goes to the plus factor") {
    const auto w = closedform::Example1(0.8).weight();
    const auto f = wh::factorize(w, 256);
    CHECK(std::abs(f.plus.coeff(0) - 0.8) < 1e-10);
    CHECK(std::abs(f.plus.coeff(1) + 0.4) < 1e-10);
    CHECK(f.minus.coeff(0) == cplx{1.0});
    CHECK(std::abs(f.minus.coeff(-1) + 0.5) < 1e-10);
}

TEST_CASE("factor supports are exactly one-sided with unit minus constant") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentSeries phi = random_symbol(rng);
        const auto f = wh::factorize(phi, 1024);
        CHECK(f.plus.is_analytic_type());
        CHECK(f.plus_inv.is_analytic_type());
        CHECK(f.minus.is_coanalytic_type());
        CHECK(f.minus_inv.is_coanalytic_type());
        CHECK(f.minus.coeff(0) == cplx{1.0});
        CHECK(f.minus_inv.coeff(0) == cplx{1.0});
    }
}

TEST_CASE("factors reconstruct the symbol and invert on the grid") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentSeries phi = random_symbol(rng);
        const auto f = wh::factorize(phi, 1024);
        CHECK(f.reconstruction_error < 1e-10);
        CHECK(max_grid_gap(detail::grid_product(f.plus, f.plus_inv, 1024),
                           LaurentSeries::constant(1.0), 1024) < 1e-10);
        CHECK(max_grid_gap(detail::grid_product(f.minus, f.minus_inv, 1024),
                           LaurentSeries::constant(1.0), 1024) < 1e-10);
    }
}

TEST_CASE("factorization is idempotent on an already-factored pair") {
    std::mt19937 rng(53);
    const LaurentSeries phi = random_symbol(rng);
    const auto f = wh::factorize(phi, 1024);
    const auto again = wh::factorize(detail::grid_product(f.plus, f.minus, 1024), 1024);
    double gap = 0.0;
    for (int k = 0; k <= 64; ++k)
        gap = std::max(gap, std::abs(f.plus.coeff(k) - again.plus.coeff(k)));
    for (int k = 0; k <= 64; ++k)
        gap = std::max(gap, std::abs(f.minus.coeff(-k) - again.minus.coeff(-k)));
    CHECK(gap < 1e-10);
}

TEST_CASE("factorize propagates winding and vanishing errors") {
    CHECK_THROWS_AS(wh::factorize(LaurentSeries::monomial(1), 64), NonzeroWinding);
    CHECK_THROWS_AS(
        wh::factorize(LaurentSeries::from_terms({{0, 1.0}, {1, -1.0}}), 64),
        NearVanishingSymbol);
}

TEST_CASE("Szego function of the flat weight is one") {
    const auto e = wh::szego_function(LaurentSeries::constant(1.0), cplx{0.3, 0.1}, 64);
    CHECK(std::abs(e.value - 1.0) < 1e-13);
    CHECK(e.side == wh::Side::interior);
}

TEST_CASE("Szego function at zero matches the single-moment closed form") {
    const auto w = closedform::Example1(0.8).weight();
    const auto e = wh::szego_function(w, cplx{0.0}, 256);
    CHECK(std::abs(e.value - std::sqrt(0.8)) < 1e-10);
}

TEST_CASE("interior value at zero squares to the geometric mean") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    for (int trial = 0; trial < 50; ++trial) {
        // random positive trigonometric polynomial bounded away from zero
        LaurentSeries w(4);
        w.set_coeff(0, 1.0);
        for (int k = 1; k <= 4; ++k) {
            const cplx c{u(rng), u(rng)};
            w.set_coeff(k, c);
            w.set_coeff(-k, std::conj(c));
        }
        const auto e = wh::szego_function(w, cplx{0.0}, 256);
        const auto lw = log_series(w, 256);
        CHECK(std::abs(e.value * e.value - std::exp(lw.coeff(0))) < 1e-10);
    }
}

TEST_CASE("series and quadrature routes agree off the circle") {
    const auto w = closedform::Example1(0.6).weight();
    for (const cplx z : {cplx{0.4, 0.2}, cplx{-0.7, 0.1}, cplx{1.6, 0.3}, cplx{0.0, -2.0}}) {
        const auto e = wh::szego_function(w, z, 1024);
        const cplx q = wh::szego_function_quadrature(w, z, 1024);
        CHECK(std::abs(e.value - q) < 1e-8);
    }
}

TEST_CASE("points on the circle are rejected") {
    CHECK_THROWS_AS(wh::szego_function(LaurentSeries::constant(2.0), cplx{1.0}, 64),
                    PointOnCircle);
}

TEST_CASE("reflection coefficient of the flat weight is one") {
    const auto r = wh::reflection_coefficient(LaurentSeries::constant(1.0), 64);
    CHECK(std::abs(r.coeff(0) - 1.0) < 1e-13);
    CHECK(r.max_abs_coeff() < 1.0 + 1e-13);
}

TEST_CASE("reflection coefficient of the single-moment weight") {
    // oracle: (1 - z^{-1}/2) / (1 - z/2) expands to 0.75 * 0.5^k for k >= 0
    // and a lone -0.5 at k = -1
    const auto w = closedform::Example1(0.8).weight();
    const auto r = wh::reflection_coefficient(w, 1024);
    for (int k = 0; k <= 24; ++k)
        CHECK(std::abs(r.coeff(k) - 0.75 * std::pow(0.5, k)) < 1e-10);
    CHECK(std::abs(r.coeff(-1) + 0.5) < 1e-10);
    for (int k = 2; k <= 24; ++k) CHECK(std::abs(r.coeff(-k)) < 1e-10);
}

TEST_CASE("reflection coefficient is unimodular for positive weights") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(-0.15, 0.15);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentSeries w(3);
        w.set_coeff(0, 1.0);
        for (int k = 1; k <= 3; ++k) {
            const cplx c{u(rng), u(rng)};
            w.set_coeff(k, c);
            w.set_coeff(-k, std::conj(c));
        }
        const auto r = wh::reflection_coefficient(w, 512);
        const auto g = samples_from_coeffs(r, 512);
        for (const cplx& v : g.samples) CHECK(std::abs(std::abs(v) - 1.0) < 1e-10);
    }
}

TEST_CASE("reflection data inverts on the grid") {
    const auto w = closedform::Example1(0.8).weight();
    const auto rd = wh::reflection_data(w, 1024);
    CHECK(max_grid_gap(detail::grid_product(rd.r, rd.r_inv, 1024),
                       LaurentSeries::constant(1.0), 1024) < 1e-10);
}

TEST_CASE("triple norm of the flat symbol") {
    const auto f = wh::factorize(LaurentSeries::constant(1.0), 64);
    CHECK(std::abs(wh::triple_norm(f, BeurlingWeight::wiener()) - 1.0) < 1e-12);
    CHECK(wh::triple_seminorm(f, BeurlingWeight::wiener(), 1) < 1e-12);
}

TEST_CASE("triple norm of the geometric two-factor symbol") {
    const auto phi = multiply(LaurentSeries::from_terms({{0, 1.0}, {1, -0.5}}),
                              LaurentSeries::from_terms({{0, 1.0}, {-1, -0.5}}));
    const auto f = wh::factorize(phi, 1024);
    // factors sum to 1.5, inverse factors to 2; the max is 2
    CHECK(std::abs(wh::triple_norm(f, BeurlingWeight::wiener()) - 2.0) < 1e-10);
    // tail at cut 2: the banded factors contribute nothing, each inverse
    // factor leaves the geometric tail sum_{k>=2} 0.5^k = 0.5
    CHECK(std::abs(wh::triple_seminorm(f, BeurlingWeight::wiener(), 2) - 0.5) < 1e-10);
    const auto table = wh::triple_seminorm_table(f, 8);
    CHECK(std::abs(table[0] - 2.0) < 1e-10);
    CHECK(std::abs(table[2] - 0.5) < 1e-10);
    CHECK(std::abs(wh::triple_seminorm(f, BeurlingWeight::wiener(), 5) - table[5]) <
          1e-12);
}
