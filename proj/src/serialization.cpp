/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "refrigimc/errors.hpp"

namespace refrigimc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::vector<double> coeff_list(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].empty()) {
        throw ConfigError(std::string("transfer function document needs a nonempty '") + key +
                          "' array");
    }
    return doc[key].get<std::vector<double>>();
}

}  // namespace

nlohmann::json tf_to_json(const Tf& tf) {
    nlohmann::json doc;
    if (const auto* d = std::get_if<DiscreteTF>(&tf)) {
        doc["domain"] = "z";
        doc["num"] = d->num.coeffs();
        doc["den"] = d->den.coeffs();
        doc["ts"] = d->ts;
    } else {
        const auto& c = std::get<ContinuousTF>(tf);
        doc["domain"] = "s";
        doc["num"] = c.num.coeffs();
        doc["den"] = c.den.coeffs();
    }
    return doc;
}

Tf tf_from_json(const nlohmann::json& doc) {
    const std::string domain = doc.value("domain", "");
    if (domain == "s") {
        return ContinuousTF(Polynomial(coeff_list(doc, "num")), Polynomial(coeff_list(doc, "den")));
    }
    if (domain == "z") {
        if (!doc.contains("ts")) {
            throw ConfigError("discrete transfer function document needs 'ts'");
        }
        return DiscreteTF(Polynomial(coeff_list(doc, "num")), Polynomial(coeff_list(doc, "den")),
                          doc["ts"].get<double>());
    }
    throw ConfigError("transfer function 'domain' must be \"s\" or \"z\"");
}

nlohmann::json plant_to_json(const MimoPlant2x2& plant) {
    nlohmann::json doc;
    doc["inputs"] = plant.input_names;
    doc["outputs"] = plant.output_names;
    doc["g11"] = tf_to_json(plant.g11);
    doc["g12"] = tf_to_json(plant.g12);
    doc["g21"] = tf_to_json(plant.g21);
    doc["g22"] = tf_to_json(plant.g22);
    return doc;
}

MimoPlant2x2 plant_from_json(const nlohmann::json& doc) {
    for (const char* key : {"g11", "g12", "g21", "g22"}) {
        if (!doc.contains(key)) {
            throw ConfigError(std::string("plant document is missing channel '") + key + "'");
        }
    }
    MimoPlant2x2 plant{tf_from_json(doc["g11"]), tf_from_json(doc["g12"]),
                       tf_from_json(doc["g21"]), tf_from_json(doc["g22"])};
    if (doc.contains("inputs")) {
        plant.input_names = doc["inputs"].get<std::array<std::string, 2>>();
    }
    if (doc.contains("outputs")) {
        plant.output_names = doc["outputs"].get<std::array<std::string, 2>>();
    }
    plant.validate();
    return plant;
}

namespace {

nlohmann::json profile_to_json(const StepProfile& p) {
    nlohmann::json doc;
    doc["initial"] = p.initial;
    doc["steps"] = nlohmann::json::array();
    for (const auto& [t, v] : p.steps) {
        doc["steps"].push_back({t, v});
    }
    return doc;
}

StepProfile profile_from_json(const nlohmann::json& doc) {
    StepProfile p;
    p.initial = doc.value("initial", 0.0);
    if (doc.contains("steps")) {
        for (const auto& s : doc["steps"]) {
            p.steps.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
        }
    }
    return p;
}

}  // namespace

nlohmann::json scenario_to_json(const Scenario& sc) {
    nlohmann::json doc;
    doc["duration"] = sc.duration;
    doc["ts"] = sc.ts;
    doc["setpoints"] = {profile_to_json(sc.setpoints[0]), profile_to_json(sc.setpoints[1])};
    doc["disturbances"] = nlohmann::json::array();
    for (const auto& d : sc.disturbances) {
        nlohmann::json dd = profile_to_json(d.profile);
        dd["name"] = d.name;
        dd["output"] = d.output + 1;  // 1-based in the file format
        doc["disturbances"].push_back(dd);
    }
    doc["transient_windows"] = nlohmann::json::array();
    for (const auto& w : sc.windows) {
        doc["transient_windows"].push_back({w.t_c, w.t_s});
    }
    return doc;
}

Scenario scenario_from_json(const nlohmann::json& doc) {
    Scenario sc;
    if (!doc.contains("duration") || !doc.contains("ts")) {
        throw ConfigError("scenario document needs 'duration' and 'ts'");
    }
    sc.duration = doc["duration"].get<double>();
    sc.ts = doc["ts"].get<double>();
    if (!doc.contains("setpoints") || doc["setpoints"].size() != 2) {
        throw ConfigError("scenario document needs exactly two setpoint profiles");
    }
    sc.setpoints[0] = profile_from_json(doc["setpoints"][0]);
    sc.setpoints[1] = profile_from_json(doc["setpoints"][1]);
    if (doc.contains("disturbances")) {
        for (const auto& dd : doc["disturbances"]) {
            DisturbanceSpec d;
            d.name = dd.value("name", "");
            d.output = dd.value("output", 2) - 1;
            d.profile = profile_from_json(dd);
            sc.disturbances.push_back(std::move(d));
        }
    }
    if (doc.contains("transient_windows")) {
        for (const auto& w : doc["transient_windows"]) {
            sc.windows.push_back(TransientWindow{w.at(0).get<double>(), w.at(1).get<double>()});
        }
    }
    sc.validate();
    return sc;
}

nlohmann::json model_to_json(const SecondOrderModel& m) {
    return nlohmann::json{{"kp", m.kp}, {"tau1", m.tau1}, {"tau2", m.tau2}};
}

SecondOrderModel model_from_json(const nlohmann::json& doc) {
    for (const char* key : {"kp", "tau1", "tau2"}) {
        if (!doc.contains(key)) {
            throw ConfigError(std::string("model document is missing '") + key + "'");
        }
    }
    return SecondOrderModel{doc["kp"].get<double>(), doc["tau1"].get<double>(),
                            doc["tau2"].get<double>()};
}

nlohmann::json pid_to_json(const PidParams& p) {
    return nlohmann::json{{"k", p.k},           {"tau_i", p.tau_i},   {"tau_d", p.tau_d},
                          {"n_filter", p.n_filter}, {"u_min", p.u_min}, {"u_max", p.u_max},
                          {"t_track", p.t_track}};
}

PidParams pid_from_json(const nlohmann::json& doc) {
    for (const char* key : {"k", "tau_i", "tau_d", "n_filter", "u_min", "u_max", "t_track"}) {
        if (!doc.contains(key)) {
            throw ConfigError(std::string("PID document is missing '") + key + "'");
        }
    }
    return make_pid_params(doc["k"].get<double>(), doc["tau_i"].get<double>(),
                           doc["tau_d"].get<double>(), doc["n_filter"].get<double>(),
                           Limits{doc["u_min"].get<double>(), doc["u_max"].get<double>()},
                           doc["t_track"].get<double>());
}

nlohmann::json weights_to_json(const JWeights& w) { return nlohmann::json{{"w", w.w}}; }

JWeights weights_from_json(const nlohmann::json& doc) {
    if (!doc.contains("w") || doc["w"].size() != 8) {
        throw ConfigError("weights document needs a 'w' array of length 8");
    }
    JWeights w;
    w.w = doc["w"].get<std::array<double, 8>>();
    return w;
}

nlohmann::json fit_report_to_json(const FitReport& r) {
    nlohmann::json doc;
    doc["model"] = model_to_json(r.model);
    doc["fit_percent"] = r.fit_percent;
    doc["residual_norm"] = r.residual_norm;
    doc["tau2_identifiable"] = r.tau2_identifiable;
    return doc;
}

nlohmann::json metrics_to_json(const MetricsReport& r) {
    nlohmann::json doc;
    const auto cand = r.candidate.ordered();
    const auto base = r.baseline.ordered();
    for (std::size_t i = 0; i < 8; ++i) {
        doc["candidate"][index_names()[i]] = cand[i];
        doc["baseline"][index_names()[i]] = base[i];
        doc["ratios"][ratio_names()[i]] = r.ratios[i];
    }
    doc["J"] = r.j;
    return doc;
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open file: " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ConfigError("cannot parse " + path.string() + ": " + ex.what());
    }
}

void save_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    out << doc.dump(2) << "\n";
}

void write_sim_csv(std::ostream& out, const SimResult& result) {
    out << "time,r1,y1,u1,e1,r2,y2,u2,e2\n";
    for (std::size_t i = 0; i < result.time.size(); ++i) {
        out << format_double(result.time[i]);
        for (int l = 0; l < 2; ++l) {
            const auto li = static_cast<std::size_t>(l);
            out << ',' << format_double(result.r[li][i]) << ',' << format_double(result.y[li][i])
                << ',' << format_double(result.u[li][i]) << ',' << format_double(result.e[li][i]);
        }
        out << '\n';
    }
}

void write_sim_csv(const std::filesystem::path& path, const SimResult& result) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    write_sim_csv(out, result);
}

SimResult read_sim_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("empty simulation CSV: " + path.string());
    }
    SimResult result;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::array<double, 9> v{};
        std::string cell;
        for (double& x : v) {
            if (!std::getline(row, cell, ',')) {
                throw ConfigError("malformed simulation CSV row in " + path.string());
            }
            x = std::stod(cell);
        }
        result.time.push_back(v[0]);
        result.r[0].push_back(v[1]);
        result.y[0].push_back(v[2]);
        result.u[0].push_back(v[3]);
        result.e[0].push_back(v[4]);
        result.r[1].push_back(v[5]);
        result.y[1].push_back(v[6]);
        result.u[1].push_back(v[7]);
        result.e[1].push_back(v[8]);
    }
    if (result.time.size() < 2) {
        throw ConfigError("simulation CSV has fewer than two samples: " + path.string());
    }
    result.ts = result.time[1] - result.time[0];
    result.saturated[0].assign(result.time.size(), 0);
    result.saturated[1].assign(result.time.size(), 0);
    return result;
}

void write_surface_csv(const std::filesystem::path& path, const SweepSurface& surface,
                       const std::string& quantity) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write file: " + path.string());
    }
    int ratio_idx = -1;
    for (std::size_t i = 0; i < ratio_names().size(); ++i) {
        if (ratio_names()[i] == quantity) {
            ratio_idx = static_cast<int>(i);
        }
    }
    if (quantity != "J" && ratio_idx < 0) {
        throw std::invalid_argument("unknown surface quantity: " + quantity);
    }
    out << "lambda11,lambda22,value\n";
    for (const auto& p : surface.points) {
        double v;
        if (!p.stable) {
            v = std::numeric_limits<double>::infinity();
        } else if (quantity == "J") {
            v = p.j;
        } else {
            v = p.report.ratios[static_cast<std::size_t>(ratio_idx)];
        }
        out << format_double(p.lambda11) << ',' << format_double(p.lambda22) << ','
            << format_double(v) << '\n';
    }
}

}  // namespace refrigimc
