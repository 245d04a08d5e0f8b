// bellforge: batch front end over the shared-library C API. Builds games,
// evaluates strategies, sweeps the completeness curve, runs the exchange
// simulator and the see-saw search, and emits deterministic CSV/JSON/SVG.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bellforge.h"
#include "cli_support.hpp"

namespace fs = std::filesystem;
using bfcli::Manifest;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail_status(bf_status st) {
    throw CliError{st == BF_ERR_CAP_EXCEEDED ? kExitCap : kExitValidation, bf_last_error()};
}

void check(bf_status st) {
    if (st != BF_OK) fail_status(st);
}

using GamePtr = std::unique_ptr<bf_game, decltype(&bf_game_free)>;
using StrategyPtr = std::unique_ptr<bf_strategy, decltype(&bf_strategy_free)>;
using CorrelationPtr = std::unique_ptr<bf_correlation, decltype(&bf_correlation_free)>;
using ReportPtr = std::unique_ptr<bf_seesaw_report, decltype(&bf_seesaw_report_free)>;

struct Ref {
    std::string text;
    bool builtin = false;
    std::string kind;                 // tchsh | 3chsh | emb
    double alpha = 1.0;
    bool flipped = false;
    std::optional<int> d;
    std::string file_bytes;           // for path refs
};

Ref parse_ref(const std::string& text) {
    Ref ref;
    ref.text = text;
    if (text.rfind("builtin:", 0) != 0) {
        ref.file_bytes = bfcli::read_file(text);
        return ref;
    }
    ref.builtin = true;
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() < 2) throw CliError{kExitValidation, "bad builtin ref: " + text};
    ref.kind = parts[1];
    for (size_t i = 2; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (p == "flipped")
            ref.flipped = true;
        else if (p.rfind("alpha=", 0) == 0)
            ref.alpha = std::stod(p.substr(6));
        else if (p.rfind("d=", 0) == 0)
            ref.d = std::stoi(p.substr(2));
        else
            throw CliError{kExitValidation, "bad builtin ref component: " + p};
    }
    if (ref.kind != "tchsh" && ref.kind != "3chsh" && ref.kind != "emb")
        throw CliError{kExitValidation, "unknown builtin ref kind: " + ref.kind};
    return ref;
}

GamePtr resolve_game(const Ref& ref) {
    bf_game* g = nullptr;
    if (!ref.builtin) {
        check(bf_game_from_json(ref.file_bytes.c_str(), &g));
    } else if (ref.kind == "tchsh") {
        check(bf_game_tchsh(ref.alpha, ref.flipped ? 1 : 0, &g));
    } else if (ref.kind == "3chsh") {
        check(bf_game_three_chsh_builtin(&g));
    } else {
        check(bf_game_emb(nullptr, &g));
    }
    return GamePtr(g, &bf_game_free);
}

StrategyPtr resolve_strategy(const Ref& ref) {
    bf_strategy* s = nullptr;
    if (!ref.builtin) {
        check(bf_strategy_from_json(ref.file_bytes.c_str(), &s));
    } else if (ref.kind == "tchsh") {
        check(bf_strategy_ideal_tchsh(ref.alpha, ref.flipped ? 1 : 0, &s));
    } else if (ref.kind == "3chsh") {
        check(bf_strategy_ideal_three_chsh(&s));
    } else {
        check(bf_strategy_ideal_emb(ref.d.value_or(1), &s));
    }
    return StrategyPtr(s, &bf_strategy_free);
}

void add_input_digest(Manifest& m, const Ref& ref) {
    if (!ref.builtin)
        m.input_digests[ref.text] = bfcli::hex64(bfcli::fnv1a64(ref.file_bytes));
}

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

json manifest_echo(const Manifest& m) {
    return json{{"digest", m.digest()}, {"subcommand", m.subcommand}};
}

/* ------------------------------------------------------------------ value */

int cmd_value(const std::string& game_ref, const std::string& strategy_ref,
              const std::string& out_dir, const std::string& format,
              const std::string& dump_strategy) {
    const Ref gref = parse_ref(game_ref);
    const Ref sref = parse_ref(strategy_ref);
    const GamePtr game = resolve_game(gref);
    const StrategyPtr strategy = resolve_strategy(sref);

    double value = 0.0;
    check(bf_value(game.get(), strategy.get(), &value));

    Manifest m;
    m.subcommand = "value";
    m.version = bf_version();
    m.parameters["game"] = game_ref;
    m.parameters["strategy"] = strategy_ref;
    add_input_digest(m, gref);
    add_input_digest(m, sref);

    json report;
    report["game"] = bf_game_name(game.get());
    report["value"] = value;
    std::printf("value=%s\n", bfcli::format17(value).c_str());

    if (bf_game_has_parts(game.get())) {
        double parts[3] = {0, 0, 0};
        check(bf_value_parts(game.get(), strategy.get(), parts));
        std::printf("part_a=%s part_b=%s part_c=%s\n", bfcli::format17(parts[0]).c_str(),
                    bfcli::format17(parts[1]).c_str(), bfcli::format17(parts[2]).c_str());
        report["parts"] = {parts[0], parts[1], parts[2]};
        if (sref.builtin && sref.kind == "emb") {
            double structured = 0.0;
            check(bf_emb_value(sref.d.value_or(1), &structured));
            std::printf("dense=%s structured=%s\n", bfcli::format17(value).c_str(),
                        bfcli::format17(structured).c_str());
            report["structured"] = structured;
        }
    }
    if (!dump_strategy.empty()) {
        m.outputs.push_back(dump_strategy);
        char* text = nullptr;
        check(bf_strategy_to_json(strategy.get(), &text));
        json exported = json::parse(text);
        bf_string_free(text);
        exported["manifest"] = manifest_echo(m);
        bfcli::write_file(dump_strategy, exported.dump() + "\n");
    }
    if (!out_dir.empty() && format == "json") {
        const std::string path = out_path(out_dir, "value.json");
        m.outputs.push_back(path);
        report["manifest"] = manifest_echo(m);
        bfcli::write_file(path, report.dump(2) + "\n");
    }
    return 0;
}

/* -------------------------------------------------------------- classical */

int cmd_classical(const std::string& game_ref, const std::string& out_dir,
                  const std::string& format) {
    const Ref gref = parse_ref(game_ref);
    const GamePtr game = resolve_game(gref);
    double value = 0.0;
    check(bf_classical_value(game.get(), &value));
    std::printf("classical_value=%s\n", bfcli::format17(value).c_str());
    if (!out_dir.empty() && format == "json") {
        Manifest m;
        m.subcommand = "classical";
        m.version = bf_version();
        m.parameters["game"] = game_ref;
        add_input_digest(m, gref);
        const std::string path = out_path(out_dir, "classical.json");
        m.outputs.push_back(path);
        json report{{"game", bf_game_name(game.get())},
                    {"classical_value", value},
                    {"manifest", manifest_echo(m)}};
        bfcli::write_file(path, report.dump(2) + "\n");
    }
    return 0;
}

/* ------------------------------------------------------------------ curve */

int cmd_curve(const std::string& d_list, const std::string& d_range, const std::string& out_dir,
              const std::string& format, bool plot) {
    std::vector<std::int64_t> ds;
    if (!d_list.empty())
        ds = bfcli::parse_d_list(d_list);
    else if (!d_range.empty())
        ds = bfcli::parse_d_range(d_range);
    else
        throw CliError{kExitValidation, "curve needs --d or --d-range"};
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

    Manifest m;
    m.subcommand = "curve";
    m.version = bf_version();
    m.parameters["d"] = d_list.empty() ? d_range : d_list;
    m.parameters["format"] = format;

    double limit = 0.0;
    check(bf_emb_limit_value(&limit));

    bfcli::Column n_col{"n_d", {}}, x_col{"x_d", {}}, dev_col{"deviation", {}},
        pb_col{"part_b", {}}, ev_col{"emb_value", {}}, eps_col{"epsilon", {}};
    for (std::int64_t d : ds) {
        double n = 0, x = 0, dev = 0, pb = 0, ev = 0;
        check(bf_emb_gram(d, &n, &x, &dev));
        check(bf_emb_part_b(d, &pb));
        check(bf_emb_value(d, &ev));
        n_col.values.push_back(n);
        x_col.values.push_back(x);
        dev_col.values.push_back(dev);
        pb_col.values.push_back(pb);
        ev_col.values.push_back(ev);
        eps_col.values.push_back(limit - ev);
    }

    const std::string csv_path = out_path(out_dir, "curve.csv");
    m.outputs.push_back(csv_path);
    std::string svg_path;
    if (plot) {
        svg_path = out_path(out_dir, "curve.svg");
        m.outputs.push_back(svg_path);
    }
    std::string json_path;
    if (format == "json") {
        json_path = out_path(out_dir, "curve.json");
        m.outputs.push_back(json_path);
    }

    bfcli::write_file(csv_path, bfcli::csv_table(m, "d", ds,
                                                 {n_col, x_col, dev_col, pb_col, ev_col, eps_col}));

    std::vector<double> dxs(ds.begin(), ds.end());
    const double slope = bfcli::loglog_slope(dxs, eps_col.values);
    std::printf("rows=%zu omega_star=%s loglog_slope=%.6f\n", ds.size(),
                bfcli::format17(limit).c_str(), slope);

    if (plot)
        bfcli::write_file(svg_path, bfcli::svg_loglog_plot(m, "epsilon(d) = omega* - omega(S_d)",
                                                           "d", "epsilon", dxs, eps_col.values));
    if (!json_path.empty()) {
        json rows = json::array();
        for (size_t i = 0; i < ds.size(); ++i)
            rows.push_back({{"d", ds[i]},
                            {"n_d", n_col.values[i]},
                            {"x_d", x_col.values[i]},
                            {"deviation", dev_col.values[i]},
                            {"part_b", pb_col.values[i]},
                            {"emb_value", ev_col.values[i]},
                            {"epsilon", eps_col.values[i]}});
        json report{{"manifest", manifest_echo(m)},
                    {"omega_star", limit},
                    {"loglog_slope", slope},
                    {"rows", rows}};
        bfcli::write_file(json_path, report.dump(2) + "\n");
    }
    return 0;
}

/* ------------------------------------------------------------- nonclosure */

int cmd_nonclosure(int d_max, const std::string& out_dir, const std::string& format) {
    if (d_max < 1) throw CliError{kExitValidation, "--d-max must be >= 1"};

    GamePtr emb(nullptr, &bf_game_free);
    {
        bf_game* g = nullptr;
        check(bf_game_emb(nullptr, &g));
        emb = GamePtr(g, &bf_game_free);
    }
    bf_correlation* raw_limit = nullptr;
    check(bf_correlation_limit_emb(&raw_limit));
    const CorrelationPtr limit(raw_limit, &bf_correlation_free);
    double limit_value = 0.0;
    check(bf_correlation_value(emb.get(), limit.get(), &limit_value));

    Manifest m;
    m.subcommand = "nonclosure";
    m.version = bf_version();
    m.parameters["d_max"] = std::to_string(d_max);
    m.parameters["format"] = format;

    std::vector<std::int64_t> ds;
    bfcli::Column dist_col{"linf_dist", {}}, val_col{"value", {}}, lim_col{"limit_value", {}};
    for (int d = 1; d <= d_max; ++d) {
        bf_strategy* s = nullptr;
        check(bf_strategy_ideal_emb(d, &s));
        const StrategyPtr strat(s, &bf_strategy_free);
        bf_correlation* c = nullptr;
        check(bf_correlation_of_strategy(strat.get(), 5, 6, &c));
        const CorrelationPtr corr(c, &bf_correlation_free);
        double dist = 0.0, value = 0.0;
        check(bf_correlation_linf(corr.get(), limit.get(), &dist));
        check(bf_correlation_value(emb.get(), corr.get(), &value));
        ds.push_back(d);
        dist_col.values.push_back(dist);
        val_col.values.push_back(value);
        lim_col.values.push_back(limit_value);
        std::printf("d=%d linf=%s value=%s\n", d, bfcli::format17(dist).c_str(),
                    bfcli::format17(value).c_str());
    }
    std::printf("limit_value=%s\n", bfcli::format17(limit_value).c_str());

    const std::string csv_path = out_path(out_dir, "nonclosure.csv");
    m.outputs.push_back(csv_path);
    bfcli::write_file(csv_path, bfcli::csv_table(m, "d", ds, {dist_col, val_col, lim_col}));
    if (format == "json") {
        const std::string json_path = out_path(out_dir, "nonclosure.json");
        m.outputs.push_back(json_path);
        json rows = json::array();
        for (size_t i = 0; i < ds.size(); ++i)
            rows.push_back({{"d", ds[i]},
                            {"linf_dist", dist_col.values[i]},
                            {"value", val_col.values[i]},
                            {"limit_value", lim_col.values[i]}});
        json report{{"manifest", manifest_echo(m)}, {"limit_value", limit_value}, {"rows", rows}};
        bfcli::write_file(json_path, report.dump(2) + "\n");
    }
    return 0;
}

/* --------------------------------------------------------------- exchange */

int cmd_exchange(const std::string& d_list, const std::string& levels_spec,
                 const std::string& out_dir, const std::string& format) {
    std::vector<std::int64_t> ds = bfcli::parse_d_list(d_list.empty() ? "1,2,3,4,5,6" : d_list);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    const std::vector<std::int64_t> levels = bfcli::parse_d_list(levels_spec);
    if (levels.size() != 2) throw CliError{kExitValidation, "--phi-levels needs two levels"};

    Manifest m;
    m.subcommand = "exchange";
    m.version = bf_version();
    m.parameters["d"] = d_list.empty() ? "1,2,3,4,5,6" : d_list;
    m.parameters["phi_levels"] = levels_spec;
    m.parameters["format"] = format;

    bfcli::Column dim_col{"local_dim", {}}, p_col{"success_prob", {}}, b_col{"ltw_bound", {}};
    for (std::int64_t d : ds) {
        double success = 0.0, bound = 0.0;
        std::int64_t local_dim = 0;
        check(bf_exchange_run(int(d), int(levels[0]), int(levels[1]), &success, &local_dim,
                              &bound));
        dim_col.values.push_back(double(local_dim));
        p_col.values.push_back(success);
        b_col.values.push_back(bound);
        std::printf("d=%lld local_dim=%lld success=%s bound=%s\n",
                    static_cast<long long>(d), static_cast<long long>(local_dim),
                    bfcli::format17(success).c_str(), bfcli::format17(bound).c_str());
    }

    const std::string csv_path = out_path(out_dir, "exchange.csv");
    m.outputs.push_back(csv_path);
    bfcli::write_file(csv_path, bfcli::csv_table(m, "d", ds, {dim_col, p_col, b_col}));
    if (format == "json") {
        const std::string json_path = out_path(out_dir, "exchange.json");
        m.outputs.push_back(json_path);
        json rows = json::array();
        for (size_t i = 0; i < ds.size(); ++i)
            rows.push_back({{"d", ds[i]},
                            {"local_dim", std::int64_t(dim_col.values[i])},
                            {"success_prob", p_col.values[i]},
                            {"ltw_bound", b_col.values[i]}});
        json report{{"manifest", manifest_echo(m)},
                    {"register_layout",
                     {{"referee", "R(2) x S(3) x T(3)"},
                      {"prover_side", "qutrit x embezzler_half x output_flag_qubit"},
                      {"phi_plus_levels", {levels[0], levels[1]}}}},
                    {"rows", rows}};
        bfcli::write_file(json_path, report.dump(2) + "\n");
    }
    return 0;
}

/* ----------------------------------------------------------------- seesaw */

int cmd_seesaw(const std::string& game_ref, const std::string& dims_spec, int restarts,
               int max_iters, double tol, std::uint64_t seed, const std::string& out_dir) {
    const Ref gref = parse_ref(game_ref);
    const GamePtr game = resolve_game(gref);
    const std::vector<std::int64_t> dims = bfcli::parse_d_list(dims_spec);
    if (dims.size() != 2) throw CliError{kExitValidation, "--dims needs two dimensions"};

    bf_seesaw_config cfg;
    cfg.dim_a = int(dims[0]);
    cfg.dim_b = int(dims[1]);
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.tol = tol;
    cfg.seed = seed;
    cfg.threads = 0;

    bf_seesaw_report* raw = nullptr;
    check(bf_seesaw_run(game.get(), &cfg, &raw));
    const ReportPtr report(raw, &bf_seesaw_report_free);

    Manifest m;
    m.subcommand = "seesaw";
    m.version = bf_version();
    m.seed = seed;
    m.parameters["game"] = game_ref;
    m.parameters["dims"] = dims_spec;
    m.parameters["restarts"] = std::to_string(restarts);
    m.parameters["max_iters"] = std::to_string(max_iters);
    m.parameters["tol"] = bfcli::format17(tol);
    add_input_digest(m, gref);

    const double best = bf_seesaw_best_value(report.get());
    std::printf("best_value=%s best_restart=%d\n", bfcli::format17(best).c_str(),
                bf_seesaw_best_restart(report.get()));

    const std::string json_path = out_path(out_dir, "seesaw.json");
    m.outputs.push_back(json_path);
    json restarts_json = json::array();
    const int n = bf_seesaw_restart_count(report.get());
    for (int i = 0; i < n; ++i) {
        const int len = bf_seesaw_trajectory_len(report.get(), i);
        const int stride = len > 1000 ? (len + 999) / 1000 : 1;
        json traj = json::array();
        for (int j = 0; j < len; j += stride) {
            int sweep = 0;
            double value = 0.0;
            check(bf_seesaw_trajectory_point(report.get(), i, j, &sweep, &value));
            traj.push_back({sweep, value});
        }
        restarts_json.push_back({{"restart", i},
                                 {"best", bf_seesaw_restart_best(report.get(), i)},
                                 {"converged", bf_seesaw_restart_converged(report.get(), i) != 0},
                                 {"trajectory", traj}});
    }
    json doc{{"manifest", manifest_echo(m)},
             {"config",
              {{"game", game_ref},
               {"dim_a", cfg.dim_a},
               {"dim_b", cfg.dim_b},
               {"restarts", cfg.restarts},
               {"max_iters", cfg.max_iters},
               {"tol", cfg.tol},
               {"seed", cfg.seed}}},
             {"best_value", best},
             {"best_restart", bf_seesaw_best_restart(report.get())},
             {"restarts", restarts_json}};
    bfcli::write_file(json_path, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bellforge: embezzlement-based non-local game toolkit"};
    app.set_version_flag("--version", std::string(bf_version()));
    app.require_subcommand(1);

    std::string game_ref, strategy_ref, out_dir = ".", format = "csv", dump_strategy;
    std::string d_list, d_range, dims = "2,2", phi_levels = "1,2";
    int d_max = 6, restarts = 20, max_iters = 500;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    bool plot = false;

    auto* value = app.add_subcommand("value", "evaluate a strategy on a game");
    value->add_option("--game", game_ref, "game ref (builtin:... or path)")->required();
    value->add_option("--strategy", strategy_ref, "strategy ref")->required();
    value->add_option("--out", out_dir, "output directory");
    value->add_option("--format", format, "csv|json");
    value->add_option("--dump-strategy", dump_strategy, "export the resolved strategy as JSON");

    auto* classical = app.add_subcommand("classical", "exact deterministic baseline");
    classical->add_option("--game", game_ref, "game ref")->required();
    classical->add_option("--out", out_dir, "output directory");
    classical->add_option("--format", format, "csv|json");

    auto* curve = app.add_subcommand("curve", "completeness curve sweep");
    curve->add_option("--d", d_list, "comma-separated d values");
    curve->add_option("--d-range", d_range, "geometric range lo:hi[:factor]");
    curve->add_option("--out", out_dir, "output directory");
    curve->add_option("--format", format, "csv|json");
    curve->add_flag("--plot", plot, "write curve.svg");

    auto* nonclosure = app.add_subcommand("nonclosure", "distance to the limit correlation");
    nonclosure->add_option("--d-max", d_max, "largest dense d");
    nonclosure->add_option("--out", out_dir, "output directory");
    nonclosure->add_option("--format", format, "csv|json");

    auto* exchange = app.add_subcommand("exchange", "coherent state-exchange simulation");
    exchange->add_option("--d", d_list, "comma-separated d values");
    exchange->add_option("--phi-levels", phi_levels, "qutrit levels of the phi+ branch");
    exchange->add_option("--out", out_dir, "output directory");
    exchange->add_option("--format", format, "csv|json");

    auto* seesaw = app.add_subcommand("seesaw", "block-coordinate strategy search");
    seesaw->add_option("--game", game_ref, "game ref")->required();
    seesaw->add_option("--dims", dims, "local dimensions dA,dB");
    seesaw->add_option("--restarts", restarts, "independent restarts");
    seesaw->add_option("--max-iters", max_iters, "sweep cap per restart");
    seesaw->add_option("--tol", tol, "convergence threshold");
    seesaw->add_option("--seed", seed, "RNG seed");
    seesaw->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (format != "csv" && format != "json")
            throw CliError{kExitValidation, "unknown --format: " + format};
        if (*value) return cmd_value(game_ref, strategy_ref, out_dir, format, dump_strategy);
        if (*classical) return cmd_classical(game_ref, out_dir, format);
        if (*curve) return cmd_curve(d_list, d_range, out_dir, format, plot);
        if (*nonclosure) return cmd_nonclosure(d_max, out_dir, format);
        if (*exchange) return cmd_exchange(d_list, phi_levels, out_dir, format);
        if (*seesaw) return cmd_seesaw(game_ref, dims, restarts, max_iters, tol, seed, out_dir);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitValidation;
}
