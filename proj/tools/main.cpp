#include "commands.hpp"

#include "chebtrot/errors.hpp"
#include "chebtrot/io.hpp"
#include "chebtrot/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace chebtrot;
using namespace chebtrot::cli;

namespace {

constexpr int kOk = 0, kNumeric = 1, kConfig = 2;

struct Flags {
    std::string config_path;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::string format = "csv";
};

RunOptions resolve(const Flags& f) {
    RunOptions opt;
    nlohmann::json user = nlohmann::json::object();
    if (!f.config_path.empty()) {
        try {
            user = nlohmann::json::parse(read_file(f.config_path));
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("config: ") + e.what());
        }
    }
    opt.config = merge_config(user);
    opt.seed = f.seed ? *f.seed : opt.config.value("seed", std::uint64_t{1});
    if (f.threads) {
        opt.threads = *f.threads;
    } else if (const char* env = std::getenv("CHEBTROT_THREADS"); env && *env) {
        try {
            opt.threads = std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("CHEBTROT_THREADS must be an integer");
        }
    } else {
        opt.threads = opt.config.at("threads").get<int>();
    }
    if (opt.threads < 1) throw InputError("thread count must be positive");
    if (f.format == "json")
        opt.format = OutputFormat::json;
    else if (f.format != "csv")
        throw InputError("--format must be csv or json");
    if (!f.out.empty()) {
        opt.out_dir = f.out;
        opt.has_out = true;
    } else if (opt.config.contains("out")) {
        opt.out_dir = opt.config.at("out").get<std::string>();
        opt.has_out = true;
    }
    return opt;
}

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config_path, "JSON experiment config");
    sub->add_option("--out", f.out, "output directory (must exist)");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--threads", f.threads, "worker threads");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev extrapolation of Trotterized simulation data"};
    app.require_subcommand(1);
    Flags flags;

    using Runner = std::function<OutputSet(const RunOptions&)>;
    std::vector<std::pair<CLI::App*, Runner>> runners;
    auto add = [&](const std::string& name, const std::string& help, Runner r) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, flags);
        runners.emplace_back(sub, std::move(r));
    };
    add("energy", "extrapolate the ground energy to zero step size", cmd_energy);
    add("expval", "extrapolate a time-evolved expectation value", cmd_expval);
    add("trotter-error", "extrapolate the Frobenius distance of the product formula", cmd_trotter_error);
    add("truncation", "exact truncation error against the Bernstein-ellipse bound", cmd_truncation);
    add("cost", "exponential counts: single formula against extrapolation", cmd_cost);
    add("window", "Gaussian window upsampling error against its budget", cmd_window);

    std::string bounds_text;
    auto* bounds = app.add_subcommand("bounds", "evaluate the analytic bounds for a config");
    add_common(bounds, flags);

    PlotSpec plot_spec;
    std::string plot_csv, plot_out, plot_y;
    auto* plot = app.add_subcommand("plot", "render an SVG line plot from a CSV file");
    plot->add_option("--csv", plot_csv, "input CSV")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();
    plot->add_option("--x", plot_spec.x, "x column")->required();
    plot->add_option("--y", plot_y, "comma-separated y columns")->required();
    plot->add_option("--group", plot_spec.group, "split series by this column");
    plot->add_option("--title", plot_spec.title, "plot title");
    plot->add_flag("--logx", plot_spec.log_x, "logarithmic x axis");
    plot->add_flag("--logy", plot_spec.log_y, "logarithmic y axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (plot->parsed()) {
            std::stringstream ys(plot_y);
            for (std::string col; std::getline(ys, col, ',');) plot_spec.y.push_back(col);
            write_file_atomic(plot_out, render_svg(parse_csv(read_file(plot_csv)), plot_spec));
            return kOk;
        }
        const RunOptions opt = resolve(flags);
        // Fail before any work if the destination is unusable.
        if (opt.has_out && !fs::is_directory(opt.out_dir)) {
            std::cerr << "error: output directory does not exist: " << opt.out_dir << "\n";
            return kConfig;
        }
        OutputSet files;
        if (bounds->parsed()) {
            files = cmd_bounds(opt, bounds_text);
            std::cout << bounds_text;
            if (opt.has_out) write_outputs(opt.out_dir, files);
            return kOk;
        }
        for (auto& [sub, run] : runners) {
            if (!sub->parsed()) continue;
            if (!opt.has_out) throw InputError("--out is required for " + sub->get_name());
            files = run(opt);
            write_outputs(opt.out_dir, files);
            for (const auto& [name, content] : files) std::cout << (opt.out_dir / name).string() << "\n";
            if (files.count("cost_summary.json")) std::cout << files.at("cost_summary.json");
        }
        return kOk;
    } catch (const DomainError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumeric;
    } catch (const InputError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const CapabilityError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kConfig;
    }
}
