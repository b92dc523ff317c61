#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace chebtrot::cli {

enum class OutputFormat { csv, json };

// Defaults < config file < CHEBTROT_THREADS (threads only) < command-line flags.
struct RunOptions {
    nlohmann::json config;  // merged with defaults
    std::filesystem::path out_dir;
    bool has_out = false;
    std::uint64_t seed = 1;
    int threads = 1;
    OutputFormat format = OutputFormat::csv;
};

nlohmann::json default_config();
nlohmann::json merge_config(const nlohmann::json& user);

// File name -> content; nothing touches the disk until every output is ready.
using OutputSet = std::map<std::string, std::string>;

OutputSet cmd_energy(const RunOptions& opt);
OutputSet cmd_expval(const RunOptions& opt);
OutputSet cmd_trotter_error(const RunOptions& opt);
OutputSet cmd_truncation(const RunOptions& opt);
OutputSet cmd_cost(const RunOptions& opt);
OutputSet cmd_window(const RunOptions& opt);
// Also returns the human-readable table through `text`.
OutputSet cmd_bounds(const RunOptions& opt, std::string& text);

void write_outputs(const std::filesystem::path& dir, const OutputSet& files);

}  // namespace chebtrot::cli
