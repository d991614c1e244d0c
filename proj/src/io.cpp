#include "vmkdv/io.hpp"

#include <cstdio>
#include <ostream>

namespace vmkdv::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["name"] = report.name;
    j["max_residual"] = report.max_residual;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    if (!report.metadata.empty()) {
        Json meta;
        for (const auto& [k, v] : report.metadata) meta[k] = v;
        j["metadata"] = meta;
    }
    return j;
}

Json to_json(const verify::Criterion& criterion) {
    Json j;
    j["criterion"] = criterion.number;
    j["title"] = criterion.title;
    j["pass"] = criterion.pass();
    Json checks = Json::array();
    for (const auto& c : criterion.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    return j;
}

Json lax_to_json(const LaxMatrix& m) {
    Json j;
    for (const auto& [degree, coeff] : m.coeffs()) {
        Json block;
        block["a"] = to_string(coeff.a);
        block["v1"] = to_string(coeff.v1);
        block["v2"] = to_string(coeff.v2);
        block["W"] = to_string(coeff.w);
        j[std::to_string(degree)] = block;
    }
    return j;
}

void write_field_csv(std::ostream& os, const SolutionField& field, double t_value) {
    os << "x,t";
    for (int j = 0; j < field.components(); ++j) os << ",u_" << (j + 1);
    os << "\n";
    const std::string t_str = format_double(t_value);
    for (int i = 0; i < field.grid.nx; ++i) {
        os << format_double(field.grid.x(i)) << ',' << t_str;
        for (int j = 0; j < field.components(); ++j) os << ',' << format_double(field.samples(i, j));
        os << "\n";
    }
}

TimeVector times_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("times: expected an object like {\"t3\": 0.5}");
    TimeVector times;
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || key[0] != 't')
            throw ConfigError("times: bad key '" + key + "' (expected t1, t3, t5, ...)");
        int index = 0;
        try {
            index = std::stoi(key.substr(1));
        } catch (const std::exception&) {
            throw ConfigError("times: bad key '" + key + "'");
        }
        if (index < 1 || index % 2 == 0)
            throw ConfigError("times: key '" + key + "' is not an odd hierarchy time");
        if (!value.is_number())
            throw ConfigError("times: value of '" + key + "' must be a number");
        times.set((index - 1) / 2, value.get<double>());
    }
    return times;
}

Json times_to_json(const TimeVector& times) {
    Json j;
    for (const auto& [n, value] : times.entries()) j["t" + std::to_string(2 * n + 1)] = value;
    return j;
}

namespace {

Complex complex_from_json(const Json& j, const std::string& field) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw ConfigError(field + ": expected a number or [re, im]");
}

} // namespace

SolitonParams soliton_params_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("soliton params: expected a JSON object");
    SolitonParams p;
    if (!j.contains("mu") || !j["mu"].is_number())
        throw ConfigError("soliton params: field 'mu' (number) is required");
    p.mu = j["mu"].get<double>();
    p.c0 = j.value("c0", 0.0);
    if (!j.contains("c") || !j["c"].is_array() || j["c"].empty())
        throw ConfigError("soliton params: field 'c' (non-empty array) is required");
    p.c = Eigen::VectorXd(static_cast<Eigen::Index>(j["c"].size()));
    for (std::size_t i = 0; i < j["c"].size(); ++i) {
        if (!j["c"][i].is_number()) throw ConfigError("soliton params: c[" + std::to_string(i) + "] must be a number");
        p.c(static_cast<Eigen::Index>(i)) = j["c"][i].get<double>();
    }
    p.validate();
    return p;
}

BreatherParams breather_params_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("breather params: expected a JSON object");
    BreatherParams p;
    if (!j.contains("mu")) throw ConfigError("breather params: field 'mu' is required");
    p.mu = complex_from_json(j["mu"], "mu");
    p.s = j.value("s", 1);
    if (!j.contains("C") || !j["C"].is_array() || j["C"].empty())
        throw ConfigError("breather params: field 'C' (array) is required");

    const Json& c = j["C"];
    const bool nested = c[0].is_array() && !c[0].empty() && c[0][0].is_array();
    const auto rows = static_cast<Eigen::Index>(c.size());
    const Eigen::Index cols = nested ? static_cast<Eigen::Index>(c[0].size()) : 1;
    p.C = Eigen::MatrixXcd(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const std::string where = "C[" + std::to_string(r) + "]";
        if (nested) {
            if (!c[static_cast<std::size_t>(r)].is_array() ||
                static_cast<Eigen::Index>(c[static_cast<std::size_t>(r)].size()) != cols)
                throw ConfigError("breather params: " + where + " has inconsistent length");
            for (Eigen::Index cc = 0; cc < cols; ++cc)
                p.C(r, cc) = complex_from_json(c[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)], where);
        } else {
            p.C(r, 0) = complex_from_json(c[static_cast<std::size_t>(r)], where);
        }
    }
    p.validate();
    return p;
}

Json error_json(const std::string& type, const std::string& message) {
    Json j;
    j["error"]["type"] = type;
    j["error"]["message"] = message;
    return j;
}

} // namespace vmkdv::io
