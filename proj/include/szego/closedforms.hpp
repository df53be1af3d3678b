#pragma once

#include "szego/series.hpp"

namespace szego::closedform {

// Weight 1 - a cos(theta), 0 < a < 1, with its exactly known Verblunsky
// coefficients and Szego function.
class Example1 {
public:
    explicit Example1(double a);

    double a() const { return a_; }
    double mu_plus() const { return mu_plus_; }
    double mu_minus() const { return mu_minus_; }

    // alpha_n = -(mu_+ - mu_-) / (mu_+^{n+2} - mu_-^{n+2})
    double alpha(int n) const;
    // -alpha_n mu_+^{n+2}; converges to mu_+ - mu_- (the residue magnitude)
    double residue_convergent(int n) const;
    // sqrt(a/(2 mu_-)) (1 - z/mu_+)
    cplx szego_interior(cplx z) const;
    // coefficients {-1: -a/2, 0: 1, 1: -a/2}
    LaurentSeries weight() const;

private:
    double a_, mu_plus_, mu_minus_;
};

// Rogers-Szego family: alpha_n = (-1)^n q^{(n+1)/2}, 0 < q < 1.  The Szego
// function is an infinite product truncated at `terms` factors with tail
// bound q^terms.
class Example2 {
public:
    Example2(double q, int terms);

    double q() const { return q_; }
    int terms() const { return terms_; }
    double truncation_tail() const;  // q^terms

    double alpha(int n) const;
    // alpha_n (-q^{-1/2})^{n+2}; identically q^{-1/2} for the exact family
    double residue_convergent(int n) const;
    // S(z) = -sqrt(q) z / (1 + sqrt(q) z)
    cplx born_series(cplx z) const;
    // truncated product prod_j (1-q^{j+1})^{1/2} (1+q^{j+1/2} z)
    cplx szego_interior(cplx z) const;
    // |D_i|^2 sampled on the grid, folded to the requested band
    LaurentSeries weight(int half_bandwidth, int grid) const;

private:
    double q_;
    int terms_;
};

}  // namespace szego::closedform
