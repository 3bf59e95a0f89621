// cvarctl: cointegrated-VAR estimation, rank and stability testing,
// controllability analysis and counterfactual policy simulation.

#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cvar/commands.hpp"
#include "cvar/errors.hpp"

namespace {

struct FlagState {
    std::string config, data, schema, spec, restrictions, policy, scenario, transforms,
        estimate, out, delimiter;
    long seed = -1;
    int bootstrap = -1;
    int threads = -1;
    bool force = false;
    bool fill_gaps = false;
    bool svg = false;
};

void add_common(CLI::App* cmd, FlagState& f) {
    cmd->add_option("--config", f.config, "config file with shared keys");
    cmd->add_option("--data", f.data, "data file (delimiter-separated, year column)");
    cmd->add_option("--schema", f.schema, "column roles, e.g. y:endogenous,f:exogenous");
    cmd->add_option("--spec", f.spec, "model spec file");
    cmd->add_option("--restrictions", f.restrictions, "restriction file");
    cmd->add_option("--policy", f.policy, "policy file");
    cmd->add_option("--scenario", f.scenario, "scenario file");
    cmd->add_option("--transforms", f.transforms, "transform list for prepare");
    cmd->add_option("--estimate", f.estimate, "estimate artifact (control/simulate input)");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_option("--bootstrap", f.bootstrap, "bootstrap replications");
    cmd->add_option("--threads", f.threads, "worker threads for bootstrap loops");
    cmd->add_option("--delimiter", f.delimiter, "field delimiter (default ,)");
    cmd->add_flag("--force", f.force, "overwrite existing outputs");
    cmd->add_flag("--fill-gaps", f.fill_gaps, "insert missing rows for year gaps");
    cmd->add_flag("--svg", f.svg, "emit vector-graphic path plots");
}

cvar::RunConfig resolve(const FlagState& f) {
    cvar::RunConfig cfg;
    std::map<std::string, bool> overridden;
    overridden["data"] = !f.data.empty();
    overridden["schema"] = !f.schema.empty();
    overridden["spec"] = !f.spec.empty();
    overridden["restrictions"] = !f.restrictions.empty();
    overridden["policy"] = !f.policy.empty();
    overridden["scenario"] = !f.scenario.empty();
    overridden["transforms"] = !f.transforms.empty();
    overridden["estimate"] = !f.estimate.empty();
    overridden["seed"] = f.seed >= 0;
    overridden["out"] = !f.out.empty();
    overridden["bootstrap"] = f.bootstrap >= 0;
    overridden["threads"] = f.threads >= 0;
    overridden["delimiter"] = !f.delimiter.empty();
    overridden["svg"] = f.svg;
    overridden["fill_gaps"] = f.fill_gaps;

    cfg.data_path = f.data;
    cfg.spec_path = f.spec;
    cfg.restrictions_path = f.restrictions;
    cfg.policy_path = f.policy;
    cfg.scenario_path = f.scenario;
    cfg.transforms_path = f.transforms;
    cfg.estimate_path = f.estimate;
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (!f.out.empty()) cfg.out_dir = f.out;
    if (f.bootstrap >= 0) cfg.bootstrap = f.bootstrap;
    if (f.threads >= 0) cfg.threads = static_cast<unsigned>(f.threads);
    if (!f.delimiter.empty()) cfg.delimiter = f.delimiter == "tab" ? '\t' : f.delimiter[0];
    cfg.force = f.force;
    cfg.fill_gaps = f.fill_gaps;
    cfg.svg = f.svg;

    if (!f.config.empty()) cvar::apply_config_file(cfg, f.config, overridden);
    if (!f.schema.empty()) {
        // Inline schema overrides the config file's.
        std::map<std::string, cvar::Role> schema;
        std::string item;
        std::stringstream ss(f.schema);
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw cvar::Error(cvar::ErrorCode::InvalidArgument,
                                  "--schema entries look like name:role");
            schema[item.substr(0, colon)] = cvar::role_from_string(item.substr(colon + 1));
        }
        cfg.schema = schema;
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cointegrated VAR toolbox: estimation, control, counterfactuals"};
    app.require_subcommand(1);

    FlagState f;
    auto* prepare = app.add_subcommand("prepare", "run data reconstruction transforms");
    auto* estimate = app.add_subcommand("estimate", "fit the cointegrated VAR");
    auto* ranktest = app.add_subcommand("ranktest", "trace test for cointegration rank");
    auto* stability = app.add_subcommand("stability", "parameter constancy test");
    auto* control = app.add_subcommand("control", "controllability test and control rule");
    auto* simulate = app.add_subcommand("simulate", "counterfactual and forecast paths");
    for (auto* cmd : {prepare, estimate, ranktest, stability, control, simulate})
        add_common(cmd, f);

    CLI11_PARSE(app, argc, argv);

    try {
        const cvar::RunConfig cfg = resolve(f);
        if (prepare->parsed()) cvar::cmd_prepare(cfg);
        if (estimate->parsed()) cvar::cmd_estimate(cfg);
        if (ranktest->parsed()) cvar::cmd_ranktest(cfg);
        if (stability->parsed()) cvar::cmd_stability(cfg);
        if (control->parsed()) cvar::cmd_control(cfg);
        if (simulate->parsed()) cvar::cmd_simulate(cfg);
    } catch (const cvar::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", cvar::error_code_name(e.code()), e.what());
        return e.is_io() || e.code() == cvar::ErrorCode::WouldOverwrite ? 1 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
