// cxm: command-line front end for the measures library. Every subcommand is
// seeded, deterministic, and writes a manifest next to its outputs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cxm/csv.hpp"
#include "cxm/eca.hpp"
#include "cxm/ecology.hpp"
#include "cxm/measures.hpp"
#include "cxm/rbn.hpp"
#include "cxm/traffic.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit-code classes, also used by the tests.
enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kParameterError = 3,
    kDomainError = 4,
    kLibraryError = 5,
};

struct Manifest {
    std::string subcommand;
    json args = json::object();
    std::uint64_t seed = 0;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const std::string& path) const {
        json m;
        m["tool"] = "cxm";
        m["version"] = kVersion;
        m["schema"] = 1;
        m["subcommand"] = subcommand;
        m["seed"] = seed;
        m["args"] = args;
        m["outputs"] = outputs;
        m["wall_clock_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        std::ofstream out(path);
        if (!out) throw cxm::error("cannot write " + path);
        out << m.dump(2) << '\n';
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw cxm::error("cannot write " + path);
    return out;
}

cxm::Dataset load_dataset(const std::string& input, const std::string& synthetic,
                          std::size_t days, std::size_t vars, std::uint64_t seed) {
    if (!synthetic.empty()) {
        const auto kind = synthetic == "arctic" ? cxm::SyntheticKind::ArcticLike
                                                : cxm::SyntheticKind::TropicLike;
        return cxm::synthetic_lake(kind, days, vars, seed);
    }
    std::ifstream in(input);
    if (!in) throw cxm::parse_error("cannot read " + input);
    return cxm::ingest_table(in);
}

json measures_json(const cxm::MeasureSet& ms) {
    json j;
    j["E"] = ms.E();
    j["S"] = ms.S();
    j["C"] = ms.C();
    if (ms.H) j["H"] = *ms.H;
    if (ms.category) {
        j["category"] = cxm::category_label_name(ms.category->label);
        j["color"] = cxm::category_color_name(ms.category->color);
    }
    return j;
}

// ---------------------------------------------------------------- measure --

int cmd_measure(const std::string& input, std::uint32_t beta,
                const std::vector<std::uint32_t>& scales, const std::string& out,
                Manifest manifest) {
    std::ifstream in(input);
    if (!in) throw cxm::parse_error("cannot read " + input);
    cxm::Dataset ds = cxm::ingest_table(in);

    std::vector<std::string> names;
    for (const auto& v : ds.variables) names.push_back(v.name);
    cxm::ComponentReport rep = cxm::component_report(ds, names, beta);

    json j;
    j["beta"] = beta;
    j["rows"] = ds.length();
    j["variables"] = json::array();
    for (const auto& var : rep.variables) {
        json vj;
        vj["name"] = var.name;
        vj["degenerate"] = var.degenerate;
        vj["measures"] = measures_json(var.measures);
        vj["hmv"] = var.hmv.hmv;
        vj["hmv_n"] = var.hmv.hmv_n;
        j["variables"].push_back(vj);
    }
    j["mean"] = {{"E", rep.mean_e}, {"S", rep.mean_s}, {"C", rep.mean_c},
                 {"H", rep.mean_h}};
    j["sd"] = {{"E", rep.sd_e}, {"S", rep.sd_s}, {"C", rep.sd_c}};

    if (!scales.empty()) {
        // Multi-scale analysis reads the input as a binary state matrix.
        cxm::StateMatrix m(ds.length(), ds.variables.size(), 2);
        for (std::size_t c = 0; c < ds.variables.size(); ++c)
            for (std::size_t r = 0; r < ds.length(); ++r) {
                const double v = ds.variables[c].values[r];
                if (v != 0.0 && v != 1.0)
                    throw cxm::parameter_error(
                        "multi-scale profiles need binary input");
                m.set(r, c, v != 0.0 ? 1 : 0);
            }
        j["scales"] = json::array();
        for (const auto& sc : cxm::multiscale_profile(m, scales)) {
            json sj;
            sj["bits"] = sc.bits;
            sj["beta"] = sc.beta;
            sj["E"] = sc.measures.e;
            sj["S"] = sc.measures.s;
            sj["C"] = sc.measures.c;
            if (sc.measures.h) sj["H"] = *sc.measures.h;
            j["scales"].push_back(sj);
        }
    }

    const std::string json_path = out + ".json";
    const std::string csv_path = out + ".csv";
    open_out(json_path) << j.dump(2) << '\n';
    {
        auto csv = open_out(csv_path);
        cxm::write_csv_row(csv, {"variable", "E", "S", "C", "hmv", "hmv_n",
                                 "category", "color"});
        for (const auto& var : rep.variables)
            cxm::write_csv_row(
                csv, {var.name, cxm::format_number(var.measures.E()),
                      cxm::format_number(var.measures.S()),
                      cxm::format_number(var.measures.C()),
                      cxm::format_number(var.hmv.hmv),
                      cxm::format_number(var.hmv.hmv_n),
                      cxm::category_label_name(var.measures.category->label),
                      cxm::category_color_name(var.measures.category->color)});
    }
    manifest.outputs = {json_path, csv_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

// -------------------------------------------------------------- rbn-sweep --

int cmd_rbn_sweep(std::size_t n, const std::vector<std::size_t>& ks,
                  std::size_t replicates, std::size_t transient,
                  std::size_t record, const std::vector<std::uint32_t>& bases,
                  std::uint64_t seed, unsigned jobs, const std::string& out,
                  Manifest manifest) {
    const std::string csv_path = out + ".csv";
    auto csv = open_out(csv_path);
    cxm::write_csv_row(csv, {"k", "bits", "stat", "min", "q1", "median", "q3",
                             "max"});
    auto row = [&](std::size_t k, std::uint32_t bits, const char* stat,
                   const cxm::Quartiles& q) {
        cxm::write_csv_row(csv, {std::to_string(k), std::to_string(bits), stat,
                                 cxm::format_number(q.min), cxm::format_number(q.q1),
                                 cxm::format_number(q.median),
                                 cxm::format_number(q.q3),
                                 cxm::format_number(q.max)});
    };
    for (std::size_t i = 0; i < ks.size(); ++i) {
        auto stats = cxm::measure_ensemble(n, ks[i], replicates, transient, record,
                                           bases, cxm::mix_seed(seed, i), jobs);
        for (const auto& st : stats) {
            row(ks[i], st.bits, "E", st.e);
            row(ks[i], st.bits, "S", st.s);
            row(ks[i], st.bits, "C", st.c);
            row(ks[i], st.bits, "H", st.h);
        }
    }
    csv.close();
    manifest.outputs = {csv_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

// ------------------------------------------------------------ eca-profile --

int cmd_eca_profile(const std::vector<std::uint32_t>& rules, std::size_t width,
                    std::size_t transient, std::size_t record,
                    const std::vector<std::uint32_t>& bases,
                    std::size_t replicates, std::uint64_t seed, unsigned jobs,
                    const std::string& out, Manifest manifest) {
    const std::string csv_path = out + ".csv";
    auto csv = open_out(csv_path);
    cxm::write_csv_row(csv, {"rule", "bits", "beta", "E", "S", "C", "H",
                             "h_deviation"});
    for (std::size_t i = 0; i < rules.size(); ++i) {
        auto results = cxm::measure_rule(rules[i], width, transient, record, bases,
                                         replicates, cxm::mix_seed(seed, i), jobs);
        for (const auto& r : results)
            cxm::write_csv_row(
                csv, {std::to_string(rules[i]), std::to_string(r.bits),
                      std::to_string(r.beta), cxm::format_number(r.measures.e),
                      cxm::format_number(r.measures.s),
                      cxm::format_number(r.measures.c),
                      cxm::format_number(r.measures.h.value_or(1.0)),
                      cxm::format_number(r.h_deviation)});
    }
    csv.close();
    manifest.outputs = {csv_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

// ---------------------------------------------------------------- traffic --

void apply_traffic_config_file(cxm::TrafficConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cxm::parse_error("cannot read " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw cxm::parse_error("expected key=value", lineno, 1);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        auto num = [&] {
            return static_cast<std::size_t>(
                cxm::parse_number(value, lineno, 2));
        };
        if (key == "n_h") cfg.n_h = num();
        else if (key == "n_v") cfg.n_v = num();
        else if (key == "block_len") cfg.block_len = num();
        else if (key == "density") cfg.density = cxm::parse_number(value, lineno, 2);
        else if (key == "boundary")
            cfg.boundary = value == "cyclic" ? cxm::BoundaryMode::Cyclic
                                             : cxm::BoundaryMode::NonOrientable;
        else if (key == "controller") {
            if (value == "greenwave")
                cfg.controller.kind = cxm::ControllerConfig::Kind::GreenWave;
            else if (value == "selforg")
                cfg.controller.kind = cxm::ControllerConfig::Kind::SelfOrg;
            else if (value == "fixedgreen")
                cfg.controller.kind = cxm::ControllerConfig::Kind::FixedGreen;
            else
                throw cxm::parse_error("unknown controller: " + value, lineno, 2);
        } else if (key == "period") cfg.controller.green_wave.period = num();
        else if (key == "offset_step") cfg.controller.green_wave.offset_step = num();
        else if (key == "d") cfg.controller.self_org.d = num();
        else if (key == "n") cfg.controller.self_org.n = num();
        else if (key == "u") cfg.controller.self_org.u = num();
        else if (key == "m") cfg.controller.self_org.m = num();
        else if (key == "r") cfg.controller.self_org.r = num();
        else if (key == "e") cfg.controller.self_org.e = num();
        else throw cxm::parse_error("unknown key: " + key, lineno, 1);
    }
}

int cmd_traffic(cxm::TrafficConfig cfg, const std::string& config_file,
                const std::string& controller,
                const std::vector<double>& densities, std::size_t warmup,
                std::size_t horizon, std::uint64_t seed, unsigned jobs,
                const std::string& out, Manifest manifest) {
    if (!config_file.empty()) apply_traffic_config_file(cfg, config_file);
    if (controller == "greenwave")
        cfg.controller.kind = cxm::ControllerConfig::Kind::GreenWave;
    else if (controller == "selforg")
        cfg.controller.kind = cxm::ControllerConfig::Kind::SelfOrg;
    else if (controller == "fixedgreen")
        cfg.controller.kind = cxm::ControllerConfig::Kind::FixedGreen;
    else if (!controller.empty())
        throw cxm::parameter_error("unknown controller: " + controller);
    cfg.validate();

    auto rows = cxm::density_sweep(cfg, densities, warmup, horizon, seed, jobs);

    const std::string csv_path = out + ".csv";
    auto csv = open_out(csv_path);
    cxm::write_csv_row(csv, {"rho", "v", "J", "E_lights", "S_lights", "C_lights",
                             "E_intersections", "S_intersections",
                             "C_intersections", "E_streets", "S_streets",
                             "C_streets"});
    auto esc = [](const std::optional<cxm::MeasureSet>& ms, std::size_t which) {
        if (!ms) return std::string("nan");
        const double v = which == 0 ? ms->E() : which == 1 ? ms->S() : ms->C();
        return cxm::format_number(v);
    };
    for (const auto& r : rows)
        cxm::write_csv_row(
            csv, {cxm::format_number(r.rho), cxm::format_number(r.v),
                  cxm::format_number(r.j), esc(r.lights, 0), esc(r.lights, 1),
                  esc(r.lights, 2), esc(r.intersections, 0),
                  esc(r.intersections, 1), esc(r.intersections, 2),
                  esc(r.streets, 0), esc(r.streets, 1), esc(r.streets, 2)});
    csv.close();
    manifest.outputs = {csv_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

// -------------------------------------------------------------------- eco --

int cmd_eco_report(const cxm::Dataset& ds, const std::vector<std::string>& vars,
                   std::uint32_t beta, const cxm::Normalization& norm,
                   const std::string& out, Manifest manifest) {
    std::vector<std::string> names = vars;
    if (names.empty())
        for (const auto& v : ds.variables) names.push_back(v.name);
    cxm::ComponentReport rep = cxm::component_report(ds, names, beta, norm);

    json j;
    j["beta"] = beta;
    j["variables"] = json::array();
    for (const auto& var : rep.variables) {
        json vj;
        vj["name"] = var.name;
        vj["degenerate"] = var.degenerate;
        vj["measures"] = measures_json(var.measures);
        j["variables"].push_back(vj);
    }
    j["mean"] = {{"E", rep.mean_e}, {"S", rep.mean_s}, {"C", rep.mean_c},
                 {"H", rep.mean_h}};
    j["sd"] = {{"E", rep.sd_e}, {"S", rep.sd_s}, {"C", rep.sd_c}};
    const std::string json_path = out + ".json";
    open_out(json_path) << j.dump(2) << '\n';
    manifest.outputs = {json_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

int cmd_eco_autopoiesis(const cxm::Dataset& ds,
                        const std::vector<std::string>& system_vars,
                        const std::vector<std::string>& environment_vars,
                        std::uint32_t beta, const std::string& out,
                        Manifest manifest) {
    auto rep = cxm::component_autopoiesis(ds, system_vars, environment_vars, beta);
    json j;
    j["mean_c_system"] = rep.mean_c_system;
    j["mean_c_environment"] = rep.mean_c_environment;
    switch (rep.a.kind) {
        case cxm::Autopoiesis::Kind::Value: j["A"] = rep.a.value; break;
        case cxm::Autopoiesis::Kind::Infinite: j["A"] = "infinity"; break;
        case cxm::Autopoiesis::Kind::Undefined: j["A"] = "undefined"; break;
    }
    j["color"] = cxm::category_color_name(rep.color);
    const std::string json_path = out + ".json";
    open_out(json_path) << j.dump(2) << '\n';
    manifest.outputs = {json_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

int cmd_eco_occupancy(const cxm::OccupancyConfig& cfg, std::uint64_t seed,
                      const std::string& out, Manifest manifest) {
    auto result = cxm::occupancy_sim(cfg, seed);
    const std::string csv_path = out + ".csv";
    auto csv = open_out(csv_path);
    cxm::write_csv_row(csv, {"site", "E", "S", "C", "category", "color"});
    for (std::size_t site = 0; site < result.site_measures.size(); ++site) {
        const auto& ms = result.site_measures[site];
        cxm::write_csv_row(csv, {std::to_string(site), cxm::format_number(ms.E()),
                                 cxm::format_number(ms.S()),
                                 cxm::format_number(ms.C()),
                                 cxm::category_label_name(ms.category->label),
                                 cxm::category_color_name(ms.category->color)});
    }
    csv.close();
    manifest.outputs = {csv_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

int cmd_eco_analytic(const std::string& component, double s, double a, double h,
                     const std::string& out, Manifest manifest) {
    const auto comp = cxm::component_from_string(component);
    const double value = cxm::analytic_emergence(comp, s, a, h);
    json j;
    j["component"] = cxm::to_string(comp);
    j["S"] = s;
    j["A"] = a;
    j["H"] = h;
    j["E"] = value;
    const std::string json_path = out + ".json";
    open_out(json_path) << j.dump(2) << '\n';
    std::cout << value << '\n';
    manifest.outputs = {json_path};
    manifest.write(out + ".manifest.json");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-theoretic measures of emergence, self-organization, "
                 "complexity, homeostasis, and autopoiesis"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    unsigned jobs = 0;
    app.add_option("--seed", seed, "Master seed; all streams derive from it");
    app.add_option("--jobs", jobs, "Worker threads (0 = hardware)")
        ->envname("CXM_JOBS");

    // measure
    auto* measure = app.add_subcommand("measure", "Measure a CSV table");
    std::string m_input, m_out = "measure";
    std::uint32_t m_beta = 10;
    std::vector<std::uint32_t> m_scales;
    measure->add_option("input", m_input, "CSV file with a header row")->required();
    measure->add_option("--beta", m_beta, "Number of classes");
    measure->add_option("--scales", m_scales, "Bit widths for multi-scale");
    measure->add_option("--out", m_out, "Output prefix");

    // rbn-sweep
    auto* rbn = app.add_subcommand("rbn-sweep", "RBN ensemble sweep over K");
    std::size_t r_n = 50, r_replicates = 100, r_transient = 500, r_record = 500;
    std::vector<std::size_t> r_ks = {1, 2, 3, 4, 5};
    std::vector<std::uint32_t> r_bases = {1};
    std::string r_out = "rbn";
    rbn->add_option("--n", r_n, "Nodes per network");
    rbn->add_option("--k", r_ks, "Connectivity values");
    rbn->add_option("--replicates", r_replicates, "Networks per K");
    rbn->add_option("--transient", r_transient, "Discarded steps");
    rbn->add_option("--record", r_record, "Recorded steps");
    rbn->add_option("--bases", r_bases, "Bit widths");
    rbn->add_option("--out", r_out, "Output prefix");

    // eca-profile
    auto* eca = app.add_subcommand("eca-profile", "ECA rule profiles");
    std::vector<std::uint32_t> e_rules = {30};
    std::size_t e_width = 128, e_transient = 1024, e_record = 1024,
                e_replicates = 10;
    std::vector<std::uint32_t> e_bases = {1, 2, 4, 8};
    std::string e_out = "eca";
    eca->add_option("--rules", e_rules, "Rule numbers (0-255)");
    eca->add_option("--width", e_width, "Cells per ring");
    eca->add_option("--transient", e_transient, "Discarded steps");
    eca->add_option("--record", e_record, "Recorded steps");
    eca->add_option("--bases", e_bases, "Bit widths");
    eca->add_option("--replicates", e_replicates, "Random initial conditions");
    eca->add_option("--out", e_out, "Output prefix");

    // traffic
    auto* traffic = app.add_subcommand("traffic", "Traffic-grid density sweep");
    cxm::TrafficConfig t_cfg;
    std::string t_config_file, t_controller, t_out = "traffic";
    std::vector<double> t_densities = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::size_t t_warmup = 1000, t_horizon = 4000;
    traffic->add_option("--config", t_config_file, "key=value config file");
    traffic->add_option("--controller", t_controller,
                        "greenwave | selforg | fixedgreen");
    traffic->add_option("--densities", t_densities, "Densities to sweep");
    traffic->add_option("--nh", t_cfg.n_h, "Horizontal streets");
    traffic->add_option("--nv", t_cfg.n_v, "Vertical streets");
    traffic->add_option("--block", t_cfg.block_len, "Cells per block");
    traffic->add_option("--warmup", t_warmup, "Warmup ticks");
    traffic->add_option("--horizon", t_horizon, "Measured ticks");
    traffic->add_option("--out", t_out, "Output prefix");

    // eco
    auto* eco = app.add_subcommand("eco", "Ecological pipeline");
    eco->require_subcommand(1);
    std::string eco_input, eco_synthetic, eco_out = "eco";
    std::size_t eco_days = 365, eco_vars = 4;
    std::uint32_t eco_beta = 10;
    for (auto* sub : {eco}) (void)sub;

    auto* report = eco->add_subcommand("report", "Per-variable measure report");
    std::vector<std::string> rep_vars;
    double rep_gmin = 0, rep_gmax = 0;
    bool rep_global = false;
    report->add_option("--input", eco_input, "CSV table");
    report->add_option("--synthetic", eco_synthetic, "arctic | tropic");
    report->add_option("--days", eco_days, "Synthetic length");
    report->add_option("--vars-per-component", eco_vars, "Synthetic width");
    report->add_option("--beta", eco_beta, "Classes");
    report->add_option("--vars", rep_vars, "Variable subset");
    report->add_option("--global-min", rep_gmin, "Shared range minimum");
    report->add_option("--global-max", rep_gmax, "Shared range maximum");
    report->add_flag("--global", rep_global, "Use the shared range");
    report->add_option("--out", eco_out, "Output prefix");

    auto* auto_sub = eco->add_subcommand("autopoiesis", "A between groups");
    std::vector<std::string> a_system, a_environment;
    auto_sub->add_option("--input", eco_input, "CSV table");
    auto_sub->add_option("--synthetic", eco_synthetic, "arctic | tropic");
    auto_sub->add_option("--days", eco_days, "Synthetic length");
    auto_sub->add_option("--vars-per-component", eco_vars, "Synthetic width");
    auto_sub->add_option("--beta", eco_beta, "Classes");
    auto_sub->add_option("--system", a_system, "System variables")->required();
    auto_sub->add_option("--environment", a_environment, "Environment variables")
        ->required();
    auto_sub->add_option("--out", eco_out, "Output prefix");

    auto* occ = eco->add_subcommand("occupancy", "Species occupancy simulation");
    cxm::OccupancyConfig occ_cfg;
    occ->add_option("--sites", occ_cfg.sites, "Sampling sites");
    occ->add_option("--species", occ_cfg.species, "Species count");
    occ->add_option("--iterations", occ_cfg.iterations, "Iterations");
    occ->add_option("--visits", occ_cfg.visits, "Visits per iteration");
    occ->add_option("--psi-min", occ_cfg.psi_min, "Occurrence lower bound");
    occ->add_option("--psi-max", occ_cfg.psi_max, "Occurrence upper bound");
    occ->add_option("--p-min", occ_cfg.p_min, "Detection lower bound");
    occ->add_option("--p-max", occ_cfg.p_max, "Detection upper bound");
    occ->add_option("--out", eco_out, "Output prefix");

    auto* analytic = eco->add_subcommand("analytic", "Closed-form emergence");
    std::string an_component = "Bio";
    double an_s = 0.5, an_a = 1.0, an_h = 0.5;
    analytic->add_option("--component", an_component, "PC | LN | Bio");
    analytic->add_option("--S", an_s, "Self-organization")->required();
    analytic->add_option("--A", an_a, "Autopoiesis")->required();
    analytic->add_option("--H", an_h, "Homeostasis")->required();
    analytic->add_option("--out", eco_out, "Output prefix");

    CLI11_PARSE(app, argc, argv);

    Manifest manifest;
    manifest.seed = seed;
    try {
        if (*measure) {
            manifest.subcommand = "measure";
            manifest.args = {{"input", m_input}, {"beta", m_beta},
                             {"scales", m_scales}};
            return cmd_measure(m_input, m_beta, m_scales, m_out, manifest);
        }
        if (*rbn) {
            manifest.subcommand = "rbn-sweep";
            manifest.args = {{"n", r_n}, {"k", r_ks},
                             {"replicates", r_replicates},
                             {"transient", r_transient}, {"record", r_record},
                             {"bases", r_bases}};
            return cmd_rbn_sweep(r_n, r_ks, r_replicates, r_transient, r_record,
                                 r_bases, seed, jobs, r_out, manifest);
        }
        if (*eca) {
            manifest.subcommand = "eca-profile";
            manifest.args = {{"rules", e_rules}, {"width", e_width},
                             {"transient", e_transient}, {"record", e_record},
                             {"bases", e_bases}, {"replicates", e_replicates}};
            return cmd_eca_profile(e_rules, e_width, e_transient, e_record,
                                   e_bases, e_replicates, seed, jobs, e_out,
                                   manifest);
        }
        if (*traffic) {
            manifest.subcommand = "traffic";
            manifest.args = {{"controller", t_controller},
                             {"densities", t_densities}, {"nh", t_cfg.n_h},
                             {"nv", t_cfg.n_v}, {"block", t_cfg.block_len},
                             {"warmup", t_warmup}, {"horizon", t_horizon}};
            return cmd_traffic(t_cfg, t_config_file, t_controller, t_densities,
                               t_warmup, t_horizon, seed, jobs, t_out, manifest);
        }
        if (*eco) {
            cxm::Normalization norm;
            if (rep_global) norm = cxm::Normalization::global(rep_gmin, rep_gmax);
            if (*report) {
                manifest.subcommand = "eco report";
                manifest.args = {{"input", eco_input},
                                 {"synthetic", eco_synthetic}, {"beta", eco_beta}};
                return cmd_eco_report(load_dataset(eco_input, eco_synthetic,
                                                   eco_days, eco_vars, seed),
                                      rep_vars, eco_beta, norm, eco_out, manifest);
            }
            if (*auto_sub) {
                manifest.subcommand = "eco autopoiesis";
                manifest.args = {{"input", eco_input},
                                 {"synthetic", eco_synthetic},
                                 {"system", a_system},
                                 {"environment", a_environment}};
                return cmd_eco_autopoiesis(
                    load_dataset(eco_input, eco_synthetic, eco_days, eco_vars,
                                 seed),
                    a_system, a_environment, eco_beta, eco_out, manifest);
            }
            if (*occ) {
                manifest.subcommand = "eco occupancy";
                manifest.args = {{"sites", occ_cfg.sites},
                                 {"species", occ_cfg.species},
                                 {"iterations", occ_cfg.iterations},
                                 {"visits", occ_cfg.visits}};
                return cmd_eco_occupancy(occ_cfg, seed, eco_out, manifest);
            }
            if (*analytic) {
                manifest.subcommand = "eco analytic";
                manifest.args = {{"component", an_component}, {"S", an_s},
                                 {"A", an_a}, {"H", an_h}};
                return cmd_eco_analytic(an_component, an_s, an_a, an_h, eco_out,
                                        manifest);
            }
        }
    } catch (const cxm::parse_error& e) {
        std::cerr << "parse error";
        if (e.row) std::cerr << " (row " << e.row << ", col " << e.col << ")";
        std::cerr << ": " << e.what() << '\n';
        return kParseError;
    } catch (const cxm::domain_error& e) {
        std::cerr << "domain error: " << e.what();
        if (!e.subexpression.empty()) std::cerr << " in " << e.subexpression;
        std::cerr << '\n';
        return kDomainError;
    } catch (const cxm::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kParameterError;
    } catch (const cxm::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kLibraryError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
