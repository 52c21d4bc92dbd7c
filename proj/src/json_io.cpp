#include "szj/json_io.hpp"

#include <fstream>

namespace szj {

namespace {

std::vector<double> real_array(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array()) {
        throw SchemaError(std::string("missing or non-array field: ") + field);
    }
    std::vector<double> out;
    out.reserve(j[field].size());
    for (const auto& v : j[field]) {
        if (!v.is_number()) throw SchemaError(std::string("non-numeric entry in ") + field);
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

json to_json(const DecaySeq& s) {
    return json{{"offset", s.offset}, {"values", s.values}};
}

DecaySeq decay_seq_from_json(const json& j) {
    if (!j.is_object() || !j.contains("offset") || !j["offset"].is_number_integer()) {
        throw SchemaError("DecaySeq: expected {\"offset\": int, \"values\": [...]}");
    }
    try {
        return DecaySeq(j["offset"].get<int>(), real_array(j, "values"));
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const VerblunskySeq& a) {
    return json{{"alpha", a.entries()}, {"alpha_minus1", -1.0}};
}

VerblunskySeq verblunsky_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("VerblunskySeq: expected an object");
    if (j.contains("alpha_minus1")) {
        if (!j["alpha_minus1"].is_number() || j["alpha_minus1"].get<double>() != -1.0) {
            throw SchemaError("VerblunskySeq: alpha_minus1 must be -1.0");
        }
    }
    return VerblunskySeq(real_array(j, "alpha"));
}

json to_json(const JacobiParams& jp) {
    return json{{"a", jp.a}, {"b", jp.b}};
}

JacobiParams jacobi_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("JacobiParams: expected an object");
    try {
        return JacobiParams(real_array(j, "a"), real_array(j, "b"));
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
}

namespace {

json masses_to_json(const std::vector<PointMass>& masses) {
    json arr = json::array();
    for (const PointMass& pm : masses) arr.push_back(json::array({pm.position, pm.mass}));
    return arr;
}

std::vector<PointMass> masses_from_json(const json& j) {
    std::vector<PointMass> out;
    if (!j.contains("masses")) return out;
    if (!j["masses"].is_array()) throw SchemaError("measure: masses must be an array of pairs");
    for (const auto& e : j["masses"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw SchemaError("measure: each mass must be [position, mass]");
        }
        out.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return out;
}

} // namespace

json to_json(const CircleMeasure& mu) {
    return json{{"kind", "circle"},
                {"grid_size", mu.grid},
                {"weight", mu.weight},
                {"masses", masses_to_json(mu.masses)}};
}

json to_json(const IntervalMeasure& nu) {
    return json{{"kind", "interval"},
                {"grid_size", nu.grid},
                {"weight", nu.density},
                {"masses", masses_to_json(nu.masses)}};
}

CircleMeasure circle_measure_from_json(const json& j) {
    if (!j.is_object() || j.value("kind", "") != "circle") {
        throw SchemaError("measure: expected kind \"circle\"");
    }
    CircleMeasure mu;
    mu.grid = j.value("grid_size", 0);
    mu.weight = real_array(j, "weight");
    mu.masses = masses_from_json(j);
    try {
        mu.validate();
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
    return mu;
}

IntervalMeasure interval_measure_from_json(const json& j) {
    if (!j.is_object() || j.value("kind", "") != "interval") {
        throw SchemaError("measure: expected kind \"interval\"");
    }
    IntervalMeasure nu;
    nu.grid = j.value("grid_size", 0);
    nu.density = real_array(j, "weight");
    nu.masses = masses_from_json(j);
    try {
        nu.validate();
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
    return nu;
}

json to_json(const FourierSeries& f) {
    std::vector<double> re, im;
    re.reserve(f.c.size());
    im.reserve(f.c.size());
    for (const cplx& v : f.c) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    return json{{"coeffs_re", re}, {"coeffs_im", im}, {"offset", -f.halfw}};
}

json to_json(const GiBaxterReport& rep) {
    auto profile = [](const std::vector<std::pair<int, double>>& p) {
        json arr = json::array();
        for (const auto& [t, v] : p) arr.push_back(json::array({t, v}));
        return arr;
    };
    return json{{"alpha_profile", profile(rep.alpha_profile)},
                {"logw_profile", profile(rep.logw_profile)},
                {"alpha_flat", rep.alpha_flat},
                {"logw_flat", rep.logw_flat},
                {"consistent", rep.consistent}};
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace szj
