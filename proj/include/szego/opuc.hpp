#pragma once

#include <string>
#include <vector>

#include "szego/series.hpp"

namespace szego::opuc {

// Monic polynomial of the given degree orthogonal to lower powers against the
// weight's moment sequence.
struct MonicPolynomial {
    int degree = 0;
    std::vector<cplx> coeffs;  // coeffs[k], k = 0..degree, top coefficient 1
    double orthogonality_residual = 0.0;

    cplx at_zero() const { return coeffs.empty() ? cplx{1.0} : coeffs[0]; }
};

// Solves sum_k c_k w_{j-k} = 0 for j = 0..degree-1 with c_degree = 1 by a
// dense solve on the moment section; throws SingularMomentSection when the
// section is numerically singular (possible for complex weights at small n).
MonicPolynomial monic_opuc(const LaurentSeries& w, int degree);

enum class Method { moments, bo };

struct VerblunskyRow {
    int n = 0;           // alpha index is n-1
    cplx alpha{};        // -conj(Phi_n(0))
    cplx phi_zero{};
    Method method = Method::moments;
    double diagnostic = 0.0;  // orthogonality residual / contraction bound
    bool below_contraction = false;
    bool failed = false;
    std::string note;
};

struct VerblunskyReport {
    std::vector<VerblunskyRow> rows;
    int smallest_contracting_n = -1;  // first n whose contraction bound < 1
    int truncation = 0;               // operator truncation used (bo path)
};

VerblunskyReport verblunsky_from_moments(const LaurentSeries& w, int n_max);

}  // namespace szego::opuc
