#include "geophase/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geophase/errors.hpp"

namespace geophase::io {

namespace {

std::vector<std::string> columns(const Trajectory& t) {
    switch (t.representation) {
        case Representation::Complex2: return {"t", "re1", "im1", "re2", "im2"};
        case Representation::Real4: return {"t", "v1", "v2", "v3", "v4"};
        case Representation::SecondOrder2: return {"t", "v1", "v2"};
    }
    return {};
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw SpecParseError(std::string("trajectory: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("trajectory: field '") + key + "': " + e.what());
    }
}

}  // namespace

Format format_from_string(const std::string& name) {
    if (name == "csv") return Format::CSV;
    if (name == "json") return Format::JSON;
    throw SpecParseError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_header(const Trajectory& t) {
    std::string out;
    for (const auto& c : columns(t)) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out;
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
    out << csv_header(t) << '\n';
    for (std::size_t k = 0; k < t.size(); ++k) {
        out << format_double(t.times[k]);
        for (const double v : t.state(k)) out << ',' << format_double(v);
        out << '\n';
    }
}

nlohmann::json trajectory_to_json(const Trajectory& t) {
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t k = 0; k < t.size(); ++k) {
        const auto s = t.state(k);
        states.push_back(std::vector<double>(s.begin(), s.end()));
    }
    nlohmann::json parameters = nlohmann::json::object();
    for (const auto& [key, value] : t.parameters) parameters[key] = value;
    return {
        {"spec_version", kSpecVersion},
        {"columns", columns(t)},
        {"metadata",
         {{"representation_tag", to_string(t.representation)},
          {"source", t.source},
          {"step", t.step},
          {"record_stride", t.record_stride},
          {"parameters", parameters}}},
        {"times", t.times},
        {"states", states},
    };
}

Trajectory trajectory_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SpecParseError("trajectory: expected a JSON object");
    if (field<int>(j, "spec_version") != kSpecVersion) {
        throw SpecParseError("trajectory: unsupported spec_version");
    }
    const nlohmann::json meta = field<nlohmann::json>(j, "metadata");
    Trajectory t;
    try {
        t.representation = representation_from_string(field<std::string>(meta, "representation_tag"));
    } catch (const InvalidParameter& e) {
        throw SpecParseError(std::string("trajectory: ") + e.what());
    }
    t.dim = t.representation == Representation::SecondOrder2 ? 2 : 4;
    t.source = field<std::string>(meta, "source");
    t.step = field<double>(meta, "step");
    t.record_stride = field<int>(meta, "record_stride");
    t.parameters = field<std::map<std::string, double>>(meta, "parameters");
    t.times = field<std::vector<double>>(j, "times");
    const auto states = field<std::vector<std::vector<double>>>(j, "states");
    if (states.size() != t.times.size()) {
        throw SpecParseError("trajectory: times and states differ in length");
    }
    t.values.reserve(states.size() * t.dim);
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].size() != t.dim) {
            throw SpecParseError("trajectory: state " + std::to_string(k) + " has wrong dimension");
        }
        t.values.insert(t.values.end(), states[k].begin(), states[k].end());
    }
    return t;
}

void export_trajectory(const Trajectory& t, Format fmt, const std::string& path) {
    if (t.size() == 0) throw InvalidParameter("export_trajectory: empty trajectory");
    std::ostringstream text;
    if (fmt == Format::CSV) {
        write_trajectory_csv(t, text);
    } else {
        text << trajectory_to_json(t).dump(2) << '\n';
    }
    write_text(path, text.str());
}

Trajectory import_trajectory_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open '" + path + "' for reading");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError("'" + path + "': " + e.what());
    }
    return trajectory_from_json(j);
}

void write_sweep_csv(const std::vector<SpectrumPoint>& sweep, std::ostream& out) {
    out << "gamma,re1,re2,re3,re4,im1,im2,im3,im4,classification\n";
    for (const auto& pt : sweep) {
        const auto modes = pt.normalized_modes();
        out << format_double(pt.gamma);
        for (const auto& m : modes) out << ',' << format_double(m.real());
        for (const auto& m : modes) out << ',' << format_double(m.imag());
        out << ',' << to_string(pt.classification) << '\n';
    }
}

nlohmann::json sweep_to_json(const std::vector<SpectrumPoint>& sweep) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : sweep) {
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (const auto& m : pt.normalized_modes()) {
            re.push_back(m.real());
            im.push_back(m.imag());
        }
        points.push_back({{"gamma", pt.gamma},
                          {"re", re},
                          {"im", im},
                          {"classification", to_string(pt.classification)}});
    }
    return {{"spec_version", kSpecVersion},
            {"omega0", sweep.empty() ? 1.0 : sweep.front().omega0},
            {"normalized_by", "omega0"},
            {"points", points}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IOError("failed writing '" + path + "'");
}

}  // namespace geophase::io
