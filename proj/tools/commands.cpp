#include "commands.hpp"

#include "chebtrot/bounds.hpp"
#include "chebtrot/errors.hpp"
#include "chebtrot/experiments.hpp"
#include "chebtrot/io.hpp"
#include "chebtrot/parallel.hpp"
#include "chebtrot/svg.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace chebtrot::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string num(double v) { return format_double(v); }

HamiltonianModel model_from_config(const json& cfg) {
    const auto& m = cfg.at("model");
    const auto type = m.value("type", std::string("tfim"));
    if (type == "tfim") return build_tfim(m.value("num_spins", 2), m.value("J", 1.0), m.value("g", 1.0));
    if (type == "file") return load_model(m.at("path").get<std::string>());
    if (type == "inline") return model_from_json(m.dump());
    throw InputError("unknown model type '" + type + "'");
}

std::vector<int> n_values(const json& cfg) {
    auto ns = cfg.at("n").get<std::vector<int>>();
    if (ns.empty()) throw InputError("config needs at least one n");
    for (int n : ns)
        if (n < 2 || n % 2) throw InputError("every n must be even and >= 2");
    return ns;
}

int order_of(const json& cfg) {
    const int order = cfg.at("order").get<int>();
    if (order < 2 || order % 2) throw InputError("order must be even and >= 2");
    return order;
}

std::vector<int> orders_of(const json& cfg) {
    auto orders = cfg.at("orders").get<std::vector<int>>();
    for (int o : orders)
        if (o < 2 || o % 2) throw InputError("orders must be even and >= 2");
    return orders;
}

void add_plot(OutputSet& out, const std::string& csv_name, PlotSpec spec) {
    const auto& text = out.at(csv_name);
    auto svg_name = csv_name.substr(0, csv_name.size() - 4) + ".svg";
    out[svg_name] = render_svg(parse_csv(text), spec);
}

ojson node_rows_json(const std::vector<NodeRecord>& rows) {
    ojson arr = ojson::array();
    for (const auto& r : rows)
        arr.push_back({{"s", r.s}, {"value", r.value}, {"sigma", r.sigma}, {"e_prime", r.e_prime},
                       {"exponentials", r.exponentials}});
    return arr;
}

ojson result_json(int n, const ExtrapolationResult& r) {
    ojson j;
    j["n"] = n;
    j["per_node"] = node_rows_json(r.per_node);
    j["estimate"] = r.estimate;
    j["reference"] = r.exact_reference;
    j["systematic_error"] = r.systematic_error;
    j["ledger"] = {{"exponentials_total", r.cost.exponentials_total},
                   {"stages_per_step", r.cost.stages_per_step},
                   {"merged_stages_per_step", r.cost.merged_stages_per_step},
                   {"repetitions_model", r.cost.repetitions_model}};
    j["flags"] = r.flags;
    return j;
}

ojson config_echo(const RunOptions& opt) {
    ojson j = ojson::parse(opt.config.dump());
    j["seed"] = opt.seed;
    return j;
}

// Rows in grid order, mirrored nodes included: (s, value, sigma, e_prime, exponentials).
CsvTable node_table(const ExtrapolationResult& r) {
    CsvTable t({"s", "value", "sigma", "e_prime", "exponentials"});
    const auto& grid = r.fit.grid;
    const auto half = r.per_node.size();
    for (int k = 0; k < grid.n(); ++k) {
        const auto idx = static_cast<std::size_t>(k) < half ? static_cast<std::size_t>(k)
                                                            : static_cast<std::size_t>(grid.n() - 1 - k);
        const auto& rec = r.per_node[idx];
        const bool mirror = static_cast<std::size_t>(k) >= half;
        t.add_row({num(grid.node(k)), num(rec.value), num(rec.sigma), std::to_string(mirror ? -rec.e_prime : rec.e_prime),
                   std::to_string(mirror ? 0 : rec.exponentials)});
    }
    return t;
}

std::vector<ExtrapolationResult> run_nodes(const std::vector<int>& ns, int threads,
                                           const std::function<ExtrapolationResult(int)>& fn) {
    std::vector<std::optional<ExtrapolationResult>> slots(ns.size());
    parallel_for(ns.size(), threads, [&](std::size_t i) { slots[i].emplace(fn(ns[i])); });
    std::vector<ExtrapolationResult> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

EnergyEstimator estimator_of(const json& cfg, std::uint64_t seed) {
    const auto& e = cfg.at("estimator");
    const auto type = e.value("type", std::string("exact"));
    if (type == "exact") return ExactEstimator{};
    if (type == "gqpe") return GqpeEstimator{e.value("m", 6), e.value("q", 8), e.value("shots", 1000L), seed};
    throw InputError("unknown estimator '" + type + "'");
}

DataModel data_model_of(const json& cfg, std::uint64_t seed) {
    const auto& d = cfg.at("data_model");
    const auto type = d.value("type", std::string("exact"));
    if (type == "exact") return ExactData{};
    if (type == "gaussian") return GaussianNoise{d.at("sigma").get<double>(), seed};
    if (type == "shot") return ShotNoise{d.value("shots", 1000L), seed};
    throw InputError("unknown data model '" + type + "'");
}

}  // namespace

json default_config() {
    return json::parse(R"({
      "model": {"type": "tfim", "num_spins": 2, "J": 1.0, "g": 1.0},
      "order": 2,
      "orders": [2, 4],
      "t": 0.1,
      "a": 1.0,
      "n": [2, 4, 6, 8],
      "threads": 1,
      "estimator": {"type": "exact"},
      "data_model": {"type": "exact"},
      "initial_state": "00",
      "observable": "ZI",
      "phase_noise": 0.0,
      "fit_points": 41,
      "cost": {"eps_hi_exp": -2, "eps_lo_exp": -8, "points": 25, "n_min": 4, "n_max": 16},
      "window": {"m": [4, 5, 6, 7, 8], "extra_q": 4, "T": 1.0,
                 "dump": {"m": 6, "q": 8, "theta": 0.1}},
      "bounds": {"Gamma": 0.0, "eps": 1e-3, "delta": 0.05, "eps_data": 0.01, "gamma_ratio": 1.0,
                 "kk": 2.0, "s": 1.0}
    })");
}

json merge_config(const json& user) {
    if (!user.is_object()) throw InputError("config must be a JSON object");
    json cfg = default_config();
    cfg.merge_patch(user);
    return cfg;
}

OutputSet cmd_energy(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const int order = order_of(cfg);
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto ns = n_values(cfg);
    const auto runs = run_energy(model, order, t, a, ns, estimator_of(cfg, opt.seed), opt.threads);

    OutputSet out;
    if (opt.format == OutputFormat::json) {
        ojson j;
        j["config"] = config_echo(opt);
        j["runs"] = ojson::array();
        for (const auto& r : runs) {
            auto rj = result_json(r.n, r.result);
            rj["bound"] = r.bound.available ? ojson(r.bound.bound) : ojson(nullptr);
            j["runs"].push_back(rj);
        }
        out["energy.json"] = j.dump(2) + "\n";
        return out;
    }

    CsvTable summary({"n", "systematic_error", "bound"});
    CsvTable curves({"n", "s", "fit"});
    const int points = cfg.at("fit_points").get<int>();
    for (const auto& r : runs) {
        CsvTable per({"s", "energy", "sigma"});
        const auto nodes = node_table(r.result);
        for (const auto& row : nodes.rows()) per.add_row({row[0], row[1], row[2]});
        out["energy_n" + std::to_string(r.n) + ".csv"] = per.str();
        summary.add_row({std::to_string(r.n), num(r.result.systematic_error),
                         r.bound.available ? num(r.bound.bound) : "NA"});
        for (int i = 0; i < points; ++i) {
            const double s = -a + 2.0 * a * i / (points - 1.0);
            curves.add_row({std::to_string(r.n), num(s), num(r.result.fit.evaluate(s))});
        }
    }
    out["energy_summary.csv"] = summary.str();
    out["energy_fit.csv"] = curves.str();
    add_plot(out, "energy_summary.csv", {"ground-energy extrapolation error", "n", {"systematic_error", "bound"}, "", false, true});
    add_plot(out, "energy_fit.csv", {"fitted ground energy", "s", {"fit"}, "n", false, false});
    return out;
}

OutputSet cmd_expval(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const int order = order_of(cfg);
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto ns = n_values(cfg);
    const Vector psi = basis_state(cfg.at("initial_state").get<std::string>());
    if (psi.size() != model.dim()) throw InputError("initial_state length does not match the model");
    const Matrix rho = psi * psi.adjoint();
    const auto obs_label = cfg.at("observable").get<std::string>();
    const Matrix obs = pauli_matrix(obs_label);
    const auto data = data_model_of(cfg, opt.seed);
    const auto results = run_nodes(ns, opt.threads, [&](int n) {
        return extrapolate_expectation(model, rho, obs, order, t, n, a, data);
    });

    OutputSet out;
    if (opt.format == OutputFormat::json) {
        ojson j;
        j["config"] = config_echo(opt);
        j["runs"] = ojson::array();
        for (std::size_t i = 0; i < ns.size(); ++i) j["runs"].push_back(result_json(ns[i], results[i]));
        out["expval.json"] = j.dump(2) + "\n";
        return out;
    }
    CsvTable summary({"n", "estimate", "reference", "systematic_error", "single_node_error"});
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& r = results[i];
        out["expval_n" + std::to_string(ns[i]) + ".csv"] = node_table(r).str();
        summary.add_row({std::to_string(ns[i]), num(r.estimate), num(r.exact_reference), num(r.systematic_error),
                         num(std::abs(r.per_node.front().value - r.exact_reference))});
    }
    out["expval_summary.csv"] = summary.str();
    add_plot(out, "expval_summary.csv", {"expectation-value extrapolation error", "n",
                                         {"systematic_error", "single_node_error"}, "", false, true});
    return out;
}

OutputSet cmd_trotter_error(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const int order = order_of(cfg);
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto ns = n_values(cfg);
    const double sigma_phi = cfg.at("phase_noise").get<double>();
    std::optional<GaussianNoise> noise;
    if (sigma_phi > 0) noise = GaussianNoise{sigma_phi, opt.seed};
    const auto results = run_nodes(ns, opt.threads,
                                   [&](int n) { return estimate_trotter_error(model, order, t, n, a, noise); });

    OutputSet out;
    if (opt.format == OutputFormat::json) {
        ojson j;
        j["config"] = config_echo(opt);
        j["runs"] = ojson::array();
        for (std::size_t i = 0; i < ns.size(); ++i) j["runs"].push_back(result_json(ns[i], results[i]));
        out["trotter_error.json"] = j.dump(2) + "\n";
        return out;
    }
    CsvTable summary({"n", "estimate", "reference", "systematic_error"});
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const auto& r = results[i];
        out["trotter_error_n" + std::to_string(ns[i]) + ".csv"] = node_table(r).str();
        summary.add_row({std::to_string(ns[i]), num(r.estimate), num(r.exact_reference), num(r.systematic_error)});
    }
    out["trotter_error_summary.csv"] = summary.str();
    add_plot(out, "trotter_error_summary.csv", {"Frobenius-distance extrapolation error", "n",
                                                {"systematic_error"}, "", false, true});
    return out;
}

OutputSet cmd_truncation(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto ns = n_values(cfg);
    OutputSet out;
    ojson j;
    j["config"] = config_echo(opt);
    for (int order : orders_of(cfg)) {
        const auto rows = truncation_table(model, order, t, a, ns, opt.threads);
        const auto name = "truncation_order" + std::to_string(order);
        if (opt.format == OutputFormat::json) {
            ojson arr = ojson::array();
            for (const auto& r : rows)
                arr.push_back({{"n", r.n}, {"exact_error", r.exact_error},
                               {"bernstein_bound", r.bound_available ? ojson(r.bound) : ojson(nullptr)}});
            j[name] = arr;
            continue;
        }
        CsvTable table({"n", "exact_error", "bernstein_bound"});
        for (const auto& r : rows)
            table.add_row({std::to_string(r.n), num(r.exact_error), r.bound_available ? num(r.bound) : "NA"});
        out[name + ".csv"] = table.str();
        add_plot(out, name + ".csv", {"truncation error, order " + std::to_string(order), "n",
                                      {"exact_error", "bernstein_bound"}, "", false, true});
    }
    if (opt.format == OutputFormat::json) out["truncation.json"] = j.dump(2) + "\n";
    return out;
}

OutputSet cmd_cost(const RunOptions& opt) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto& c = cfg.at("cost");
    const auto eps = log_grid(c.at("eps_hi_exp").get<double>(), c.at("eps_lo_exp").get<double>(),
                              c.at("points").get<int>());
    OutputSet out;
    ojson summary;
    summary["config"] = config_echo(opt);
    for (int order : orders_of(cfg)) {
        const auto scan = crossover_scan(model, order, t, a, c.at("n_min").get<int>(), c.at("n_max").get<int>(), eps,
                                         opt.threads);
        const auto name = "cost_order" + std::to_string(order);
        summary[name]["eps_star"] = scan.eps_star ? ojson(*scan.eps_star) : ojson(nullptr);
        if (opt.format == OutputFormat::json) {
            ojson arr = ojson::array();
            for (const auto& r : scan.rows)
                arr.push_back({{"epsilon", r.epsilon}, {"cost_single", r.cost_single},
                               {"cost_extrap", r.cost_extrap ? ojson(*r.cost_extrap) : ojson(nullptr)},
                               {"n_used", r.n_used}});
            summary[name]["rows"] = arr;
            continue;
        }
        CsvTable table({"epsilon", "cost_single", "cost_extrap", "n_used"});
        for (const auto& r : scan.rows)
            table.add_row({num(r.epsilon), std::to_string(r.cost_single),
                           r.cost_extrap ? std::to_string(*r.cost_extrap) : "NA", std::to_string(r.n_used)});
        out[name + ".csv"] = table.str();
        add_plot(out, name + ".csv", {"exponential count, order " + std::to_string(order), "epsilon",
                                      {"cost_single", "cost_extrap"}, "", true, true});
    }
    out[opt.format == OutputFormat::json ? "cost.json" : "cost_summary.json"] = summary.dump(2) + "\n";
    return out;
}

OutputSet cmd_window(const RunOptions& opt) {
    const auto& w = opt.config.at("window");
    const auto ms = w.at("m").get<std::vector<int>>();
    const int extra = w.at("extra_q").get<int>();
    const double T = w.at("T").get<double>();
    const auto rows = window_table(ms, extra, T, opt.threads);

    ojson echo;
    echo["m"] = ms;
    echo["extra_q"] = extra;
    echo["T"] = T;
    echo["sigma_over_T"] = "sqrt(2^m)";

    OutputSet out;
    const auto& d = w.at("dump");
    const auto dspec = default_window_spec(d.at("m").get<int>(), d.at("q").get<int>(), T);
    Matrix U = Matrix::Zero(2, 2);
    U(0, 0) = 1.0;
    U(1, 1) = std::polar(1.0, 2.0 * std::numbers::pi * d.at("theta").get<double>());
    Vector psi = Vector::Zero(2);
    psi(1) = 1.0;
    const auto dist = gqpe_distribution(U, psi, dspec);

    if (opt.format == OutputFormat::json) {
        ojson j;
        j["spec"] = echo;
        j["rows"] = ojson::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"m", r.spec.m}, {"q", r.spec.q}, {"sigma_over_T", r.spec.sigma_over_T()},
                                 {"measured", r.measured}, {"eps_trunc", r.budget.eps_trunc},
                                 {"eps_alias", r.budget.eps_alias}, {"eps_renorm", r.budget.eps_renorm},
                                 {"eps_total", r.budget.eps_total}});
        j["distribution"] = {{"spec", ojson::parse(dspec.to_json())}, {"probs", std::vector<double>(dist.probs.data(), dist.probs.data() + dist.probs.size())}};
        out["window.json"] = j.dump(2) + "\n";
        return out;
    }
    CsvTable table({"m", "q", "sigma_over_T", "measured", "eps_trunc", "eps_alias", "eps_renorm", "eps_total"});
    table.comment(echo.dump());
    for (const auto& r : rows)
        table.add_row({std::to_string(r.spec.m), std::to_string(r.spec.q), num(r.spec.sigma_over_T()), num(r.measured),
                       num(r.budget.eps_trunc), num(r.budget.eps_alias), num(r.budget.eps_renorm),
                       num(r.budget.eps_total)});
    out["window.csv"] = table.str();
    add_plot(out, "window.csv", {"upsampled window distance to analytic samples", "q", {"measured"}, "m", false, true});
    out["gqpe_distribution.csv"] = distribution_csv(dist, dspec);
    add_plot(out, "gqpe_distribution.csv", {"phase distribution", "phase_cycles", {"prob"}, "", false, false});
    return out;
}

OutputSet cmd_bounds(const RunOptions& opt, std::string& text) {
    const auto& cfg = opt.config;
    const auto model = model_from_config(cfg);
    const int order = order_of(cfg);
    const int k = order / 2;
    const int m = static_cast<int>(model.size());
    const double t = cfg.at("t").get<double>(), a = cfg.at("a").get<double>();
    const auto ns = n_values(cfg);
    const auto& b = cfg.at("bounds");
    const auto scheme = st_scheme(order, m);

    struct Entry {
        std::string name;
        BoundReport report;
    };
    std::vector<Entry> entries;
    auto plain = [](double v) { return BoundReport{v, std::log10(std::abs(v)), std::isfinite(v), {}}; };
    const double s = b.at("s").get<double>();
    entries.push_back({"heff_distance(crude)", heff_distance_bound(model, scheme, t, s, order, CommutatorMode::crude_norm)});
    entries.push_back({"alpha_comm(crude)", plain(alpha_comm(model, scheme, order, CommutatorMode::crude_norm).alpha_comm)});
    const double c_param = k * std::pow(5.0 / 3.0, k) * m * model.hmax() * t;
    for (int n : ns) {
        const auto sn = std::to_string(n);
        entries.push_back({"heff_derivative(n=" + sn + ")", heff_derivative_bound(n, k, m, model.hmax(), t)});
        entries.push_back({"total_steps(n=" + sn + ")", plain(total_steps_bound(n, a))});
        const auto tb = energy_truncation_bound(model, scheme, t, a, n);
        BoundReport tr = plain(tb.available ? tb.bound : NAN);
        tr.domain_ok = tb.available;
        tr.assumptions = tb.assumptions;
        entries.push_back({"energy_truncation(n=" + sn + ")", tr});
        const auto ev = expval_deriv_bound(n, c_param, a);
        entries.push_back({"expval_interp_min(n=" + sn + ")", plain(ev.interp_min)});
        entries.push_back({"iqae_oracles(n=" + sn + ")",
                           plain(iqae_oracle_count(b.at("eps_data").get<double>(), b.at("gamma_ratio").get<double>(), n,
                                                   b.at("delta").get<double>()))});
    }
    const auto pe = pe_interp_params(m, k, model.hmax(), b.at("Gamma").get<double>(), b.at("eps").get<double>());
    entries.push_back({"pe_interp_n_star", plain(pe.n_star)});
    entries.push_back({"pe_interp_a", plain(pe.a)});
    entries.push_back({"expval_n_star", plain(expval_n_star(c_param, b.at("eps").get<double>()))});
    const auto [cheb, markov] = tail_bounds(0.0, 0.0, b.at("kk").get<double>(), model.num_qubits());
    entries.push_back({"tail_chebyshev", plain(cheb)});
    entries.push_back({"tail_markov", plain(markov)});

    ojson j = ojson::array();
    CsvTable table({"name", "value", "log10_value", "domain_ok"});
    std::string txt;
    char line[256];
    std::snprintf(line, sizeof line, "%-32s %-24s %-12s %s\n", "bound", "value", "log10", "domain_ok");
    txt += line;
    for (const auto& e : entries) {
        ojson ej{{"name", e.name}, {"value", std::isfinite(e.report.value) ? ojson(e.report.value) : ojson(nullptr)},
                 {"log10_value", std::isfinite(e.report.log10_value) ? ojson(e.report.log10_value) : ojson(nullptr)},
                 {"domain_ok", e.report.domain_ok}};
        ej["assumptions"] = ojson::array();
        for (const auto& as : e.report.assumptions)
            ej["assumptions"].push_back({{"name", as.name}, {"satisfied", as.satisfied}, {"margin", as.margin}});
        j.push_back(ej);
        table.add_row({e.name, num(e.report.value), num(e.report.log10_value), e.report.domain_ok ? "true" : "false"});
        std::snprintf(line, sizeof line, "%-32s %-24s %-12.4f %s\n", e.name.c_str(), num(e.report.value).c_str(),
                      e.report.log10_value, e.report.domain_ok ? "yes" : "no");
        txt += line;
    }
    text = opt.format == OutputFormat::json ? j.dump(2) + "\n" : txt;
    OutputSet out;
    if (opt.format == OutputFormat::json)
        out["bounds.json"] = j.dump(2) + "\n";
    else
        out["bounds.csv"] = table.str();
    return out;
}

void write_outputs(const std::filesystem::path& dir, const OutputSet& files) {
    if (!std::filesystem::is_directory(dir)) throw std::runtime_error("output directory does not exist: " + dir.string());
    for (const auto& [name, content] : files) write_file_atomic(dir / name, content);
}

}  // namespace chebtrot::cli
