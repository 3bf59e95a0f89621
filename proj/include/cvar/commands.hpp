#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cvar/timeseries.hpp"

namespace cvar {

// Shared run configuration; flags override config-file keys.
struct RunConfig {
    std::string config_path;
    std::string data_path;
    std::map<std::string, Role> schema;
    char delimiter = ',';
    bool fill_gaps = false;

    std::string spec_path;
    std::string restrictions_path;
    std::string policy_path;
    std::string scenario_path;
    std::string transforms_path;
    std::string estimate_path;  // input artifact for control/simulate

    std::uint64_t seed = 42;
    std::string out_dir = "out";
    bool force = false;
    int bootstrap = 0;  // 0 = command default
    unsigned threads = 0;
    int verbosity = 1;
    bool svg = false;
};

// Loads `key = value` pairs from config_path into cfg (only keys not already
// set by flags; pass `overridden` with the flag-set keys).
void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::map<std::string, bool>& overridden);

// Subcommand bodies. They throw cvar::Error; main() maps Io errors to exit
// code 1 and everything else to 2.
void cmd_prepare(const RunConfig& cfg);
void cmd_estimate(const RunConfig& cfg);
void cmd_ranktest(const RunConfig& cfg);
void cmd_stability(const RunConfig& cfg);
void cmd_control(const RunConfig& cfg);
void cmd_simulate(const RunConfig& cfg);

}  // namespace cvar
