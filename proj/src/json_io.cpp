#include "locc/json_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace locc {

SchmidtVector schmidt_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidJson(std::string("parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw InvalidJson("expected an object with a \"coeffs\" array");
    }
    std::vector<double> raw;
    raw.reserve(j["coeffs"].size());
    for (const auto& x : j["coeffs"]) {
        if (!x.is_number()) {
            throw InvalidJson("\"coeffs\" entries must be numbers");
        }
        raw.push_back(x.get<double>());
    }
    return make_schmidt(raw);
}

std::string schmidt_to_json(const SchmidtVector& v) {
    nlohmann::json j;
    j["coeffs"] = v.coeffs();
    return j.dump();
}

std::string format_coeff(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace locc
