#pragma once

#include <string>
#include <vector>

#include "szego/series.hpp"

namespace szego {

// Even, submultiplicative sequence nu_j >= 1 defining a weighted coefficient
// algebra.  Built-in kinds evaluate in closed form; log_at avoids overflow
// for large exponential indices.
class BeurlingWeight {
public:
    enum class Kind { exponential, polynomial, wiener, table };

    static BeurlingWeight exponential(double gamma);  // gamma^|j|, gamma >= 1
    static BeurlingWeight polynomial(double alpha);   // (1+|j|)^alpha, alpha >= 0
    static BeurlingWeight wiener();                   // identically 1
    static BeurlingWeight from_table(std::vector<double> values);  // values[|j|]

    double at(long long j) const;
    double log_at(long long j) const;

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

    // Checks nu_j >= 1, evenness and nu_{j+k} <= nu_j nu_k over |j|,|k| <= window.
    bool validate(int window, std::string* violation = nullptr) const;

private:
    BeurlingWeight(Kind kind, double param, std::vector<double> table)
        : kind_(kind), param_(param), table_(std::move(table)) {}

    Kind kind_;
    double param_ = 0.0;
    std::vector<double> table_;
};

// ||s||_nu = sum nu_j |c_j| over the band; zero coefficients contribute
// nothing even where nu_j overflows.
double beurling_norm(const LaurentSeries& s, const BeurlingWeight& nu);
// Tail sum restricted to |k| >= n.
double beurling_seminorm(const LaurentSeries& s, const BeurlingWeight& nu, int n);

// min over 1 <= k <= max_index of log(nu_k)/k; an upper approximation of the
// growth rate, exact for the built-in kinds.
double growth_rate(const BeurlingWeight& nu, int max_index);

}  // namespace szego
