/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "refrigimc/errors.hpp"
#include "refrigimc/plant_data.hpp"
#include "refrigimc/serialization.hpp"
#include "refrigimc/svg.hpp"

namespace refrigimc {

namespace {

namespace fs = std::filesystem;

struct ProjectConfig {
    std::string plant = "surrogate";     // "surrogate", "identified", or a file path
    std::string scenario = "default";    // "default" or a file path
    double ts = 1.0;                     // sample time for identification work
    std::string lambda_preset = "table"; // "table" (0.1) or "text" (0.2)
    std::optional<double> lambda11;
    std::optional<double> lambda22;
    double baseline_lambda11 = 0.2;
    double baseline_lambda22 = 0.2;
    std::string weights = "equal";       // "equal" or a file path
    std::string out_dir = "out";
    bool svg = false;
    std::string reduced_models = "canonical";  // "canonical" or "fit"
    std::optional<SweepGrid> sweep_grid;
};

ProjectConfig load_config(const std::string& path) {
    ProjectConfig cfg;
    if (path.empty()) {
        return cfg;
    }
    const nlohmann::json doc = load_json_file(path);
    cfg.plant = doc.value("plant", cfg.plant);
    cfg.scenario = doc.value("scenario", cfg.scenario);
    cfg.ts = doc.value("ts", cfg.ts);
    cfg.lambda_preset = doc.value("lambda_preset", cfg.lambda_preset);
    if (doc.contains("lambda11")) {
        cfg.lambda11 = doc["lambda11"].get<double>();
    }
    if (doc.contains("lambda22")) {
        cfg.lambda22 = doc["lambda22"].get<double>();
    }
    cfg.baseline_lambda11 = doc.value("baseline_lambda11", cfg.baseline_lambda11);
    cfg.baseline_lambda22 = doc.value("baseline_lambda22", cfg.baseline_lambda22);
    cfg.weights = doc.value("weights", cfg.weights);
    cfg.out_dir = doc.value("out_dir", cfg.out_dir);
    cfg.svg = doc.value("svg", cfg.svg);
    cfg.reduced_models = doc.value("reduced_models", cfg.reduced_models);
    if (cfg.ts <= 0.0) {
        throw ConfigError("config 'ts' must be positive");
    }
    if (doc.contains("sweep")) {
        SweepGrid g;
        g.lambda11 = doc["sweep"].value("lambda11", std::vector<double>{});
        g.lambda22 = doc["sweep"].value("lambda22", std::vector<double>{});
        g.validate();
        cfg.sweep_grid = std::move(g);
    }
    return cfg;
}

double preset_lambda(const ProjectConfig& cfg, int loop) {
    if (loop == 0 && cfg.lambda11) {
        return *cfg.lambda11;
    }
    if (loop == 1 && cfg.lambda22) {
        return *cfg.lambda22;
    }
    if (cfg.lambda_preset == "table") {
        return plant_data::lambda_table;
    }
    if (cfg.lambda_preset == "text") {
        return plant_data::lambda_text;
    }
    throw ConfigError("lambda_preset must be \"table\" or \"text\" (got '" + cfg.lambda_preset +
                      "')");
}

MimoPlant2x2 resolve_plant(const ProjectConfig& cfg) {
    if (cfg.plant == "surrogate") {
        return plant_data::control_plant();
    }
    if (cfg.plant == "identified") {
        return plant_data::identified_plant(cfg.ts);
    }
    return plant_from_json(load_json_file(cfg.plant));
}

Scenario resolve_scenario(const ProjectConfig& cfg) {
    if (cfg.scenario == "default") {
        return default_scenario();
    }
    return scenario_from_json(load_json_file(cfg.scenario));
}

JWeights resolve_weights(const ProjectConfig& cfg) {
    if (cfg.weights == "equal") {
        return JWeights{};
    }
    return weights_from_json(load_json_file(cfg.weights));
}

std::array<SecondOrderModel, 2> resolve_models(const ProjectConfig& cfg,
                                               const std::array<FitReport, 2>* fits) {
    if (cfg.reduced_models == "fit") {
        if (fits == nullptr) {
            throw ConfigError("reduced_models=\"fit\" requires the reduce stage");
        }
        return {(*fits)[0].model, (*fits)[1].model};
    }
    if (cfg.reduced_models != "canonical") {
        throw ConfigError("reduced_models must be \"canonical\" or \"fit\"");
    }
    return {plant_data::reduced_g11(), plant_data::reduced_g22()};
}

void print_gain_matrix(std::ostream& out, const GainMatrix& a, const std::string& title) {
    out << title << "\n";
    out << "  [ " << std::setw(12) << format_double(a.a11) << "  " << std::setw(12)
        << format_double(a.a12) << " ]\n";
    out << "  [ " << std::setw(12) << format_double(a.a21) << "  " << std::setw(12)
        << format_double(a.a22) << " ]\n";
}

void print_rga(std::ostream& out, const RgaMatrix& m, const std::string& title) {
    out << title << "\n";
    out << "  [ " << std::setw(12) << format_double(m.l11) << "  " << std::setw(12)
        << format_double(m.l12) << " ]\n";
    out << "  [ " << std::setw(12) << format_double(m.l21) << "  " << std::setw(12)
        << format_double(m.l22) << " ]\n";
}

void print_metrics_table(std::ostream& out, const MetricsReport& report) {
    const auto cand = report.candidate.ordered();
    const auto base = report.baseline.ordered();
    out << std::left << std::setw(12) << "Index" << std::right << std::setw(16) << "Candidate"
        << std::setw(16) << "Baseline" << std::setw(16) << "Ratio" << "\n";
    for (std::size_t i = 0; i < 8; ++i) {
        out << std::left << std::setw(12) << ratio_names()[i] << std::right << std::setw(16)
            << format_double(cand[i]) << std::setw(16) << format_double(base[i]) << std::setw(16)
            << format_double(report.ratios[i]) << "\n";
    }
    out << std::left << std::setw(12) << "J" << std::right << std::setw(48)
        << format_double(report.j) << "\n";
}

void write_manifest(const fs::path& dir, const std::vector<std::string>& args) {
    // The manifest is the one artifact allowed to carry a timestamp.
    nlohmann::json doc;
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    doc["timestamp"] = buf;
    doc["command"] = args;
    save_json_file(dir / "run_manifest.json", doc);
}

struct FitStageResult {
    std::array<FitReport, 2> reports;
    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["g11"] = fit_report_to_json(reports[0]);
        doc["g22"] = fit_report_to_json(reports[1]);
        return doc;
    }
};

FitStageResult run_reduce_stage(double ts) {
    const auto resp11 = step_response(plant_data::identified_g11(ts), 300.0);
    const auto resp22 = step_response(plant_data::identified_g22(ts), 60.0);
    return FitStageResult{{fit_sopm(resp11, ts, 1.0), fit_sopm(resp22, ts, 1.0)}};
}

int cmd_rga(const ProjectConfig& cfg, const std::string& plant_arg, bool csv, std::ostream& out) {
    if (!plant_arg.empty()) {
        const MimoPlant2x2 plant = plant_from_json(load_json_file(plant_arg));
        const GainMatrix a = steady_state_matrix(plant);
        const RgaMatrix m = rga(a);
        const PairingDecision pairing =
            recommend_pairing(m, plant.input_names, plant.output_names);
        print_gain_matrix(out, a, "Steady-state gain matrix");
        print_rga(out, m, "Relative gain array");
        out << "Pairing: " << pairing.description << "\n";
        if (csv) {
            out << "csv,a11,a12,a21,a22," << format_double(a.a11) << ',' << format_double(a.a12)
                << ',' << format_double(a.a21) << ',' << format_double(a.a22) << "\n";
            out << "csv,l11,l12,l21,l22," << format_double(m.l11) << ',' << format_double(m.l12)
                << ',' << format_double(m.l21) << ',' << format_double(m.l22) << "\n";
        }
        return 0;
    }

    // Default report: the identified channels cannot deliver a usable
    // steady-state matrix (G22 is ill-conditioned at z = 1), so the gain
    // matrix substitutes the reduced-model gains on the diagonal and keeps
    // the identified cross gains; the published RGA is printed alongside and
    // drives the recommendation.
    const MimoPlant2x2 ident = plant_data::identified_plant(cfg.ts);
    out << "Identified discrete channels at ts = " << format_double(cfg.ts) << " s\n";
    GainMatrix sub;
    try {
        sub = steady_state_matrix(ident);
        print_gain_matrix(out, sub, "Steady-state gain matrix (identified)");
    } catch (const IllConditionedGain& ex) {
        out << "  steady-state matrix is ill-conditioned: " << ex.what() << "\n";
        sub.a11 = plant_data::reduced_g11().kp;
        sub.a22 = plant_data::reduced_g22().kp;
        sub.a12 = dc_gain_discrete(plant_data::identified_g12(cfg.ts), "G12");
        sub.a21 = dc_gain_discrete(plant_data::identified_g21(cfg.ts), "G21");
        print_gain_matrix(out, sub,
                          "Gain matrix (diagonal from reduced models, cross from identified)");
    }
    const RgaMatrix reconstructed = rga(sub);
    print_rga(out, reconstructed, "RGA of that matrix");
    out << "  note: the reconstructed coupling disagrees with the published RGA below;\n"
           "  the printed channel coefficients are too coarse at z = 1 to reproduce it.\n";
    const RgaMatrix published = plant_data::benchmark_rga();
    print_rga(out, published, "Published benchmark RGA");
    const PairingDecision pairing = recommend_pairing(published);
    out << "Pairing (from the published RGA): " << pairing.description << "\n";
    if (csv) {
        out << "csv,source,l11,l12,l21,l22\n";
        out << "csv,reconstructed," << format_double(reconstructed.l11) << ','
            << format_double(reconstructed.l12) << ',' << format_double(reconstructed.l21) << ','
            << format_double(reconstructed.l22) << "\n";
        out << "csv,published," << format_double(published.l11) << ','
            << format_double(published.l12) << ',' << format_double(published.l21) << ','
            << format_double(published.l22) << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& tf_path, const std::string& csv_path, double horizon, double ts,
               double amplitude, bool as_json, std::ostream& out) {
    std::vector<double> response;
    if (!tf_path.empty()) {
        const Tf tf = tf_from_json(load_json_file(tf_path));
        if (const auto* d = std::get_if<DiscreteTF>(&tf)) {
            response = step_response(*d, horizon);
            ts = d->ts;
        } else {
            response = step_response(std::get<ContinuousTF>(tf), horizon, ts);
        }
        amplitude = 1.0;
    } else if (!csv_path.empty()) {
        std::ifstream in(csv_path);
        if (!in) {
            throw ConfigError("cannot open file: " + csv_path);
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            try {
                response.push_back(std::stod(line));
            } catch (const std::exception&) {
                throw ConfigError("malformed step-response CSV line in " + csv_path + ": " + line);
            }
        }
    } else {
        throw ConfigError("reduce needs --tf or --csv");
    }

    const FitReport report = fit_sopm(response, ts, amplitude);
    if (as_json) {
        out << fit_report_to_json(report).dump(2) << "\n";
    } else {
        out << "kp        = " << format_double(report.model.kp) << "\n";
        out << "tau1      = " << format_double(report.model.tau1) << " s\n";
        out << "tau2      = " << format_double(report.model.tau2) << " s"
            << (report.tau2_identifiable ? "" : "  (below the sample time; not identifiable)")
            << "\n";
        out << "fit       = " << format_double(report.fit_percent) << " %\n";
        out << "residual  = " << format_double(report.residual_norm) << "\n";
    }
    return 0;
}

int cmd_tune(const std::string& model_path, std::optional<double> kp, std::optional<double> tau1,
             std::optional<double> tau2, double lambda, double n_filter, Limits limits,
             bool as_json, std::ostream& out) {
    SecondOrderModel model;
    if (!model_path.empty()) {
        model = model_from_json(load_json_file(model_path));
    } else if (kp && tau1 && tau2) {
        model = SecondOrderModel{*kp, *tau1, *tau2};
    } else {
        throw ConfigError("tune needs --model or all of --kp/--tau1/--tau2");
    }
    const PidParams p = imc_pid(model, lambda, n_filter, limits);
    if (as_json) {
        out << pid_to_json(p).dump(2) << "\n";
    } else {
        out << "k        = " << format_double(p.k) << "\n";
        out << "tau_i    = " << format_double(p.tau_i) << " s\n";
        out << "tau_d    = " << format_double(p.tau_d) << " s\n";
        out << "N        = " << format_double(p.n_filter) << "\n";
        out << "limits   = [" << format_double(p.u_min) << ", " << format_double(p.u_max) << "]\n";
        out << "t_track  = " << format_double(p.t_track) << " s\n";
    }
    return 0;
}

std::array<PidParams, 2> candidate_controllers(const ProjectConfig& cfg) {
    return {plant_data::controller1(preset_lambda(cfg, 0)),
            plant_data::controller2(preset_lambda(cfg, 1))};
}

std::array<PidParams, 2> baseline_controllers(const ProjectConfig& cfg) {
    return {plant_data::controller1(cfg.baseline_lambda11),
            plant_data::controller2(cfg.baseline_lambda22)};
}

int cmd_simulate(const ProjectConfig& cfg, bool use_baseline, std::ostream& out) {
    const MimoPlant2x2 plant = resolve_plant(cfg);
    const Scenario scenario = resolve_scenario(cfg);
    const auto controllers = use_baseline ? baseline_controllers(cfg) : candidate_controllers(cfg);
    const SimResult result =
        run_closed_loop(plant, controllers, scenario, plant_data::operating_point());
    fs::create_directories(cfg.out_dir);
    const fs::path csv = fs::path(cfg.out_dir) / (use_baseline ? "baseline_sim.csv" : "sim.csv");
    write_sim_csv(csv, result);
    if (cfg.svg) {
        write_sim_svg(fs::path(cfg.out_dir) / (use_baseline ? "baseline_sim.svg" : "sim.svg"),
                      result, use_baseline ? "baseline closed loop" : "closed loop");
    }
    out << "wrote " << csv.string() << (result.unstable ? "  (flagged unstable)" : "") << "\n";
    return 0;
}

int cmd_report(const std::string& cand_path, const std::string& base_path, const ProjectConfig& cfg,
               const std::string& json_out, std::ostream& out) {
    const SimResult cand = read_sim_csv(cand_path);
    const SimResult base = read_sim_csv(base_path);
    const Scenario scenario = resolve_scenario(cfg);
    const MetricsReport report =
        aggregate_j(compute_indices(cand, scenario.windows),
                    compute_indices(base, scenario.windows), resolve_weights(cfg));
    print_metrics_table(out, report);
    if (!json_out.empty()) {
        save_json_file(json_out, metrics_to_json(report));
    }
    return 0;
}

void write_sweep_artifacts(const SweepSurface& surface, const fs::path& dir, bool svg) {
    write_surface_csv(dir / "sweep_J.csv", surface, "J");
    for (const auto& name : ratio_names()) {
        write_surface_csv(dir / ("sweep_" + name + ".csv"), surface, name);
    }
    nlohmann::json summary;
    const ArgminResult best = argmin_j(surface);
    summary["argmin"] = {{"lambda11", best.lambda11},
                         {"lambda22", best.lambda22},
                         {"J", best.j}};
    std::size_t unstable = 0;
    for (const auto& p : surface.points) {
        if (!p.stable) {
            ++unstable;
        }
    }
    summary["points"] = surface.points.size();
    summary["unstable_points"] = unstable;
    save_json_file(dir / "sweep_summary.json", summary);
    if (svg) {
        write_surface_svg(dir / "sweep_J.svg", surface, "J", "J surface");
        for (const auto& name : ratio_names()) {
            write_surface_svg(dir / ("sweep_" + name + ".svg"), surface, name, name + " surface");
        }
    }
}

int cmd_sweep(const ProjectConfig& cfg, std::ostream& out) {
    const MimoPlant2x2 plant = resolve_plant(cfg);
    const Scenario scenario = resolve_scenario(cfg);
    const SweepGrid grid = cfg.sweep_grid ? *cfg.sweep_grid : standard_grid();
    const SimResult baseline = run_closed_loop(plant, baseline_controllers(cfg), scenario,
                                               plant_data::operating_point());
    SweepOptions options;
    options.limits1 = plant_data::valve_range();
    options.limits2 = plant_data::compressor_range();
    options.op = plant_data::operating_point();
    const auto models = resolve_models(cfg, nullptr);
    const SweepSurface surface =
        run_sweep(models, plant, scenario, baseline, grid, resolve_weights(cfg), options);
    fs::create_directories(cfg.out_dir);
    write_sweep_artifacts(surface, cfg.out_dir, cfg.svg);
    const ArgminResult best = argmin_j(surface);
    out << "sweep: " << surface.points.size() << " points, argmin J = " << format_double(best.j)
        << " at (lambda11, lambda22) = (" << format_double(best.lambda11) << ", "
        << format_double(best.lambda22) << ")\n";
    out << "wrote " << (fs::path(cfg.out_dir) / "sweep_J.csv").string() << " and companions\n";
    return 0;
}

int cmd_pipeline(const ProjectConfig& cfg, bool with_sweep, const std::vector<std::string>& args,
                 std::ostream& out) {
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);

    out << "[1/5] reduce: fitting second-order models to the identified step responses\n";
    const FitStageResult fits = run_reduce_stage(cfg.ts);
    save_json_file(dir / "reduction.json", fits.to_json());

    const auto models = resolve_models(cfg, &fits.reports);
    out << "[2/5] tune: lambda = (" << format_double(preset_lambda(cfg, 0)) << ", "
        << format_double(preset_lambda(cfg, 1)) << "), baseline lambda = ("
        << format_double(cfg.baseline_lambda11) << ", " << format_double(cfg.baseline_lambda22)
        << ")\n";
    const std::array<PidParams, 2> candidate{
        imc_pid(models[0], preset_lambda(cfg, 0), plant_data::default_n_filter,
                plant_data::valve_range()),
        imc_pid(models[1], preset_lambda(cfg, 1), plant_data::default_n_filter,
                plant_data::compressor_range())};
    const std::array<PidParams, 2> baseline = baseline_controllers(cfg);
    nlohmann::json ctl;
    ctl["candidate"] = {{"loop1", pid_to_json(candidate[0])}, {"loop2", pid_to_json(candidate[1])}};
    ctl["baseline"] = {{"loop1", pid_to_json(baseline[0])}, {"loop2", pid_to_json(baseline[1])}};
    save_json_file(dir / "controllers.json", ctl);

    const MimoPlant2x2 plant = resolve_plant(cfg);
    const Scenario scenario = resolve_scenario(cfg);
    out << "[3/5] simulate: " << format_double(scenario.duration) << " s at ts = "
        << format_double(scenario.ts) << " s\n";
    const SimResult cand_run =
        run_closed_loop(plant, candidate, scenario, plant_data::operating_point());
    const SimResult base_run =
        run_closed_loop(plant, baseline, scenario, plant_data::operating_point());
    write_sim_csv(dir / "candidate_sim.csv", cand_run);
    write_sim_csv(dir / "baseline_sim.csv", base_run);
    if (cfg.svg) {
        write_sim_svg(dir / "candidate_sim.svg", cand_run, "candidate closed loop");
        write_sim_svg(dir / "baseline_sim.svg", base_run, "baseline closed loop");
    }
    if (cand_run.unstable || base_run.unstable) {
        out << "  warning: a run was flagged unstable\n";
    }

    out << "[4/5] report\n";
    const MetricsReport report =
        aggregate_j(compute_indices(cand_run, scenario.windows),
                    compute_indices(base_run, scenario.windows), resolve_weights(cfg));
    save_json_file(dir / "metrics.json", metrics_to_json(report));
    print_metrics_table(out, report);

    if (with_sweep || cfg.sweep_grid) {
        out << "[5/5] sweep\n";
        SweepOptions options;
        options.limits1 = plant_data::valve_range();
        options.limits2 = plant_data::compressor_range();
        options.op = plant_data::operating_point();
        const SweepGrid grid = cfg.sweep_grid ? *cfg.sweep_grid : standard_grid();
        const SweepSurface surface =
            run_sweep(models, plant, scenario, base_run, grid, resolve_weights(cfg), options);
        write_sweep_artifacts(surface, dir, cfg.svg);
        const ArgminResult best = argmin_j(surface);
        out << "  argmin J = " << format_double(best.j) << " at ("
            << format_double(best.lambda11) << ", " << format_double(best.lambda22) << ")\n";
    } else {
        out << "[5/5] sweep: skipped (enable with --sweep or a config sweep grid)\n";
    }

    write_manifest(dir, args);
    out << "artifacts in " << dir.string() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"IMC-PID control toolkit for the PID18 refrigeration benchmark"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON project configuration")->capture_default_str();

    // rga
    auto* rga_cmd = app.add_subcommand("rga", "steady-state gains, RGA, and pairing");
    std::string rga_plant;
    bool rga_csv = false;
    rga_cmd->add_option("--plant", rga_plant, "plant JSON document");
    rga_cmd->add_flag("--csv", rga_csv, "append machine-readable rows");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "fit a second-order model to a step response");
    std::string reduce_tf;
    std::string reduce_csv;
    double reduce_horizon = 300.0;
    double reduce_ts = 1.0;
    double reduce_amplitude = 1.0;
    bool reduce_json = false;
    reduce_cmd->add_option("--tf", reduce_tf, "transfer-function JSON document");
    reduce_cmd->add_option("--csv", reduce_csv, "step-response CSV (one sample per line)");
    reduce_cmd->add_option("--horizon", reduce_horizon, "step horizon, seconds");
    reduce_cmd->add_option("--ts", reduce_ts, "sample time, seconds");
    reduce_cmd->add_option("--step-amplitude", reduce_amplitude, "input step amplitude");
    reduce_cmd->add_flag("--json", reduce_json, "emit JSON");

    // tune
    auto* tune_cmd = app.add_subcommand("tune", "IMC-PID tuning of a second-order model");
    std::string tune_model;
    std::optional<double> tune_kp;
    std::optional<double> tune_tau1;
    std::optional<double> tune_tau2;
    double tune_lambda = plant_data::lambda_table;
    double tune_nf = plant_data::default_n_filter;
    double tune_umin = 10.0;
    double tune_umax = 90.0;
    bool tune_json = false;
    tune_cmd->add_option("--model", tune_model, "model JSON document");
    tune_cmd->add_option("--kp", tune_kp, "steady-state gain");
    tune_cmd->add_option("--tau1", tune_tau1, "first time constant, seconds");
    tune_cmd->add_option("--tau2", tune_tau2, "second time constant, seconds");
    tune_cmd->add_option("--lambda", tune_lambda, "IMC filter constant, seconds");
    tune_cmd->add_option("--n-filter", tune_nf, "derivative filter coefficient");
    tune_cmd->add_option("--u-min", tune_umin, "lower actuator limit");
    tune_cmd->add_option("--u-max", tune_umax, "upper actuator limit");
    tune_cmd->add_flag("--json", tune_json, "emit JSON");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "run the closed-loop scenario");
    bool sim_baseline = false;
    sim_cmd->add_flag("--baseline", sim_baseline, "use the baseline controllers");

    // report
    auto* report_cmd = app.add_subcommand("report", "score a candidate run against a baseline");
    std::string report_cand;
    std::string report_base;
    std::string report_json;
    report_cmd->add_option("--candidate", report_cand, "candidate SimResult CSV")->required();
    report_cmd->add_option("--baseline", report_base, "baseline SimResult CSV")->required();
    report_cmd->add_option("--json", report_json, "also write the report as JSON here");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid search over the two filter constants");

    // pipeline
    auto* pipe_cmd = app.add_subcommand("pipeline", "reduce, tune, simulate, report, sweep");
    bool pipe_sweep = false;
    pipe_cmd->add_flag("--sweep", pipe_sweep, "also run the lambda sweep");

    for (CLI::App* sub :
         {rga_cmd, reduce_cmd, tune_cmd, sim_cmd, report_cmd, sweep_cmd, pipe_cmd}) {
        sub->add_option("--config", config_path, "JSON project configuration");
    }

    // Shared overrides.
    std::string out_dir_flag;
    std::optional<double> ts_flag;
    std::optional<double> l11_flag;
    std::optional<double> l22_flag;
    std::string weights_flag;
    std::string scenario_flag;
    std::string plant_flag;
    bool svg_flag = false;
    for (CLI::App* sub : {sim_cmd, sweep_cmd, pipe_cmd, report_cmd}) {
        sub->add_option("--out", out_dir_flag, "output directory");
        sub->add_option("--ts", ts_flag, "identification sample time, seconds");
        sub->add_option("--lambda11", l11_flag, "candidate filter constant, loop 1");
        sub->add_option("--lambda22", l22_flag, "candidate filter constant, loop 2");
        sub->add_option("--weights", weights_flag, "weights JSON document");
        sub->add_option("--scenario", scenario_flag, "scenario JSON document");
        sub->add_option("--plant", plant_flag, "plant: surrogate, identified, or a JSON path");
        sub->add_flag("--svg", svg_flag, "emit SVG plots");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        ProjectConfig cfg = load_config(config_path);
        if (!out_dir_flag.empty()) {
            cfg.out_dir = out_dir_flag;
        }
        if (ts_flag) {
            cfg.ts = *ts_flag;
        }
        if (l11_flag) {
            cfg.lambda11 = l11_flag;
        }
        if (l22_flag) {
            cfg.lambda22 = l22_flag;
        }
        if (!weights_flag.empty()) {
            cfg.weights = weights_flag;
        }
        if (!scenario_flag.empty()) {
            cfg.scenario = scenario_flag;
        }
        if (!plant_flag.empty()) {
            cfg.plant = plant_flag;
        }
        cfg.svg = cfg.svg || svg_flag;

        if (rga_cmd->parsed()) {
            return cmd_rga(cfg, rga_plant, rga_csv, out);
        }
        if (reduce_cmd->parsed()) {
            return cmd_reduce(reduce_tf, reduce_csv, reduce_horizon, reduce_ts, reduce_amplitude,
                              reduce_json, out);
        }
        if (tune_cmd->parsed()) {
            return cmd_tune(tune_model, tune_kp, tune_tau1, tune_tau2, tune_lambda, tune_nf,
                            Limits{tune_umin, tune_umax}, tune_json, out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(cfg, sim_baseline, out);
        }
        if (report_cmd->parsed()) {
            return cmd_report(report_cand, report_base, cfg, report_json, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(cfg, out);
        }
        if (pipe_cmd->parsed()) {
            return cmd_pipeline(cfg, pipe_sweep, args, out);
        }
        err << "no subcommand selected\n";
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace refrigimc
