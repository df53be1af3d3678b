#include "szego/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace szego {

BeurlingWeight BeurlingWeight::exponential(double gamma) {
    if (!(gamma >= 1.0))
        throw std::invalid_argument("exponential weight requires gamma >= 1");
    return BeurlingWeight(Kind::exponential, gamma, {});
}

BeurlingWeight BeurlingWeight::polynomial(double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("polynomial weight requires alpha >= 0");
    return BeurlingWeight(Kind::polynomial, alpha, {});
}

BeurlingWeight BeurlingWeight::wiener() {
    return BeurlingWeight(Kind::wiener, 0.0, {});
}

BeurlingWeight BeurlingWeight::from_table(std::vector<double> values) {
    if (values.empty() || values[0] != 1.0)
        throw std::invalid_argument("table weight requires nu_0 = 1");
    return BeurlingWeight(Kind::table, 0.0, std::move(values));
}

double BeurlingWeight::log_at(long long j) const {
    const long long a = j < 0 ? -j : j;
    switch (kind_) {
        case Kind::exponential:
            return static_cast<double>(a) * std::log(param_);
        case Kind::polynomial:
            return param_ * std::log1p(static_cast<double>(a));
        case Kind::wiener:
            return 0.0;
        case Kind::table:
            if (static_cast<size_t>(a) >= table_.size())
                throw std::out_of_range("table weight index beyond stored range");
            return std::log(table_[static_cast<size_t>(a)]);
    }
    return 0.0;
}

double BeurlingWeight::at(long long j) const {
    if (kind_ == Kind::table) {
        const long long a = j < 0 ? -j : j;
        if (static_cast<size_t>(a) >= table_.size())
            throw std::out_of_range("table weight index beyond stored range");
        return table_[static_cast<size_t>(a)];
    }
    return std::exp(log_at(j));
}

bool BeurlingWeight::validate(int window, std::string* violation) const {
    const auto fail = [&](const std::string& what) {
        if (violation) *violation = what;
        return false;
    };
    for (int j = -window; j <= window; ++j) {
        const double v = at(j);
        if (!(v >= 1.0))
            return fail("nu_" + std::to_string(j) + " = " + std::to_string(v) + " < 1");
        if (v != at(-j)) return fail("nu not even at j = " + std::to_string(j));
    }
    for (int j = -window; j <= window; ++j) {
        for (int k = -window; k <= window; ++k) {
            const double lhs = log_at(j + k);
            const double rhs = log_at(j) + log_at(k);
            if (lhs > rhs + 1e-12)
                return fail("submultiplicativity fails at j = " + std::to_string(j) +
                            ", k = " + std::to_string(k));
        }
    }
    return true;
}

double beurling_norm(const LaurentSeries& s, const BeurlingWeight& nu) {
    return beurling_seminorm(s, nu, 0);
}

double beurling_seminorm(const LaurentSeries& s, const BeurlingWeight& nu, int n) {
    if (n < 0) throw std::invalid_argument("seminorm cut must be nonnegative");
    double sum = 0.0;
    for (int k = -s.half_bandwidth(); k <= s.half_bandwidth(); ++k) {
        if (std::abs(k) < n) continue;
        const double a = std::abs(s.coeff(k));
        if (a == 0.0) continue;
        sum += nu.at(k) * a;
    }
    return sum;
}

double growth_rate(const BeurlingWeight& nu, int max_index) {
    if (max_index < 1) throw std::invalid_argument("growth rate needs max_index >= 1");
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= max_index; ++k)
        best = std::min(best, nu.log_at(k) / static_cast<double>(k));
    return best;
}

}  // namespace szego
