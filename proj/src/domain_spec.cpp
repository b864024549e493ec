#include "bergman/domain_spec.hpp"

#include "bergman/errors.hpp"

namespace bergman {

namespace {

Complex parse_complex(const nlohmann::json& v) {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return Complex(v[0].get<double>(), v[1].get<double>());
    }
    throw ValidationError("bad-coefficient",
                          "coefficients must be numbers or [re, im] pairs");
}

double require_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ValidationError("missing-field",
                              std::string("expected numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

}  // namespace

DomainSpec DomainSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("parse", "domain spec must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ValidationError("missing-field", "domain spec needs a string 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    DomainSpec spec;
    if (kind == "polymap") {
        spec.kind = Kind::polymap;
        if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
            throw ValidationError("missing-field", "polymap needs a nonempty 'coeffs' array");
        }
        for (const auto& v : j["coeffs"]) spec.coeffs.push_back(parse_complex(v));
    } else if (kind == "annulus") {
        spec.kind = Kind::annulus;
        spec.r = require_number(j, "r");
        spec.R = require_number(j, "R");
    } else if (kind == "confocal") {
        spec.kind = Kind::confocal;
        spec.r = require_number(j, "r");
        spec.R = require_number(j, "R");
    } else if (kind == "monomial-level") {
        spec.kind = Kind::monomial_level;
        const double nd = require_number(j, "n");
        if (nd != static_cast<double>(static_cast<int>(nd))) {
            throw ValidationError("bad-field", "'n' must be an integer");
        }
        spec.n = static_cast<int>(nd);
        spec.C = require_number(j, "C");
    } else {
        throw ValidationError("bad-kind",
                              "kind must be one of polymap, annulus, confocal, monomial-level");
    }
    return spec;
}

DomainSpec DomainSpec::from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("parse", std::string("invalid JSON: ") + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json DomainSpec::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(kind);
    switch (kind) {
        case Kind::polymap: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const Complex& c : coeffs) arr.push_back({c.real(), c.imag()});
            j["coeffs"] = std::move(arr);
            break;
        }
        case Kind::annulus:
        case Kind::confocal:
            j["r"] = r;
            j["R"] = R;
            break;
        case Kind::monomial_level:
            j["n"] = n;
            j["C"] = C;
            break;
    }
    return j;
}

std::string DomainSpec::kind_name(Kind k) {
    switch (k) {
        case Kind::polymap: return "polymap";
        case Kind::annulus: return "annulus";
        case Kind::confocal: return "confocal";
        case Kind::monomial_level: return "monomial-level";
    }
    return "unknown";
}

}  // namespace bergman
