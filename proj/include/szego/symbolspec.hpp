#pragma once

#include <map>
#include <string>
#include <vector>

#include "szego/series.hpp"

namespace szego::spec {

// Declarative symbol description: explicit coefficients, one of the built-in
// closed-form weights, or exp/product combinators over nested specs.
struct SymbolSpec {
    enum class Kind { coefficients, example1, example2, exp_of, product };

    Kind kind = Kind::coefficients;
    std::map<int, cplx> coefficients;
    double a = 0.0;                   // example1
    double q = 0.0;                   // example2
    int terms = 60;                   // example2 product truncation
    std::vector<SymbolSpec> children; // exp_of (exactly one) / product
};

SymbolSpec parse_symbol_spec(const std::string& json_text);
SymbolSpec load_symbol_spec(const std::string& path);
// Canonical JSON; parse-serialize is idempotent.
std::string serialize_symbol_spec(const SymbolSpec& spec);

// Materialize the spec as a series.  Explicit coefficient indices must lie
// within the configured band.
LaurentSeries realize(const SymbolSpec& spec, int band, int grid);

enum class Normalization { none, log_mean_zero };

// Applies the requested normalization (divide by exp of the log-mean).
LaurentSeries normalize_symbol(const LaurentSeries& s, Normalization mode, int grid);

struct RunConfig {
    int band = kDefaultBand;
    int grid = kDefaultGrid;
    int bo_size = 64;
    int n_max = 20;
    Normalization normalization = Normalization::none;
};

}  // namespace szego::spec
