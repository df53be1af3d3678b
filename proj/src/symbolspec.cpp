#include "szego/symbolspec.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "szego/closedforms.hpp"

namespace szego::spec {

namespace {

using nlohmann::json;

SymbolSpec from_json(const json& j) {
    if (!j.is_object() || j.size() != 1)
        throw std::invalid_argument("symbol spec must be an object with one key");
    SymbolSpec spec;
    if (j.contains("coefficients")) {
        spec.kind = SymbolSpec::Kind::coefficients;
        for (const auto& [key, value] : j.at("coefficients").items()) {
            if (!value.is_array() || value.size() != 2)
                throw std::invalid_argument("coefficient entries must be [re, im]");
            spec.coefficients[std::stoi(key)] =
                cplx{value[0].get<double>(), value[1].get<double>()};
        }
    } else if (j.contains("example1")) {
        spec.kind = SymbolSpec::Kind::example1;
        spec.a = j.at("example1").at("a").get<double>();
    } else if (j.contains("example2")) {
        spec.kind = SymbolSpec::Kind::example2;
        spec.q = j.at("example2").at("q").get<double>();
        spec.terms = j.at("example2").value("terms", 60);
    } else if (j.contains("exp_of")) {
        spec.kind = SymbolSpec::Kind::exp_of;
        spec.children.push_back(from_json(j.at("exp_of")));
    } else if (j.contains("product")) {
        spec.kind = SymbolSpec::Kind::product;
        if (!j.at("product").is_array() || j.at("product").empty())
            throw std::invalid_argument("product requires a nonempty array");
        for (const auto& child : j.at("product")) spec.children.push_back(from_json(child));
    } else {
        throw std::invalid_argument("unknown symbol spec key");
    }
    return spec;
}

json to_json(const SymbolSpec& spec) {
    json j = json::object();
    switch (spec.kind) {
        case SymbolSpec::Kind::coefficients: {
            json c = json::object();
            for (const auto& [k, v] : spec.coefficients)
                c[std::to_string(k)] = json::array({v.real(), v.imag()});
            j["coefficients"] = std::move(c);
            break;
        }
        case SymbolSpec::Kind::example1:
            j["example1"] = json{{"a", spec.a}};
            break;
        case SymbolSpec::Kind::example2:
            j["example2"] = json{{"q", spec.q}, {"terms", spec.terms}};
            break;
        case SymbolSpec::Kind::exp_of:
            j["exp_of"] = to_json(spec.children.at(0));
            break;
        case SymbolSpec::Kind::product: {
            json arr = json::array();
            for (const auto& child : spec.children) arr.push_back(to_json(child));
            j["product"] = std::move(arr);
            break;
        }
    }
    return j;
}

}  // namespace

SymbolSpec parse_symbol_spec(const std::string& json_text) {
    return from_json(json::parse(json_text));
}

SymbolSpec load_symbol_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open symbol file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_symbol_spec(buffer.str());
}

std::string serialize_symbol_spec(const SymbolSpec& spec) {
    return to_json(spec).dump(2);
}

LaurentSeries realize(const SymbolSpec& spec, int band, int grid) {
    switch (spec.kind) {
        case SymbolSpec::Kind::coefficients: {
            for (const auto& [k, v] : spec.coefficients)
                if (k < -band || k > band)
                    throw std::invalid_argument("coefficient index " + std::to_string(k) +
                                                " outside the configured band");
            return LaurentSeries::from_terms(spec.coefficients);
        }
        case SymbolSpec::Kind::example1:
            return closedform::Example1(spec.a).weight();
        case SymbolSpec::Kind::example2:
            return closedform::Example2(spec.q, spec.terms).weight(band, grid);
        case SymbolSpec::Kind::exp_of:
            return exp_series(realize(spec.children.at(0), band, grid), grid);
        case SymbolSpec::Kind::product: {
            LaurentSeries out = realize(spec.children.at(0), band, grid);
            for (size_t i = 1; i < spec.children.size(); ++i)
                out = multiply(out, realize(spec.children[i], band, grid));
            return out;
        }
    }
    throw std::logic_error("unreachable symbol spec kind");
}

LaurentSeries normalize_symbol(const LaurentSeries& s, Normalization mode, int grid) {
    if (mode == Normalization::none) return s;
    const LaurentSeries lw = log_series(s, grid);
    return scale(s, std::exp(-lw.coeff(0)));
}

}  // namespace szego::spec
