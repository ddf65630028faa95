#include "scfsim/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

// accepts "1..6" or a comma list like "1,2,4"
std::vector<int> parse_scs_list(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) {
            throw scfsim::ConfigError("invalid scs range '" + text + "'");
        }
        for (int s = lo; s <= hi; ++s) {
            out.push_back(s);
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) {
        throw scfsim::ConfigError("empty scs list '" + text + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "scfsim - deterministic cell-free massive MIMO downlink simulator with an\n"
        "rApp/xApp serving-cluster formation control loop"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;

    auto* cmd_validate = app.add_subcommand("validate", "schema-check a scenario config");
    cmd_validate->add_option("--config", config_path, "scenario config file")->required();

    auto* cmd_run = app.add_subcommand("run", "execute a single drop");
    cmd_run->add_option("--config", config_path, "scenario config file")->required();
    cmd_run->add_option("--out", out_dir, "output directory")->required();
    std::uint64_t seed_opt = 0;
    bool seed_set = false;
    int scs_opt = 0;
    cmd_run->add_option("--seed", seed_opt, "drop seed (default: first config seed)")
        ->each([&](const std::string&) { seed_set = true; });
    cmd_run->add_option("--scs", scs_opt, "serving cluster size (default: control.scs)");

    auto* cmd_sweep = app.add_subcommand("sweep", "sweep serving cluster sizes over seeds");
    cmd_sweep->add_option("--config", config_path, "scenario config file")->required();
    cmd_sweep->add_option("--out", out_dir, "output directory")->required();
    std::string scs_list_opt;
    int n_seeds_opt = 0;
    std::string rapp_opt;
    int threads_opt = -1;
    cmd_sweep->add_option("--scs-list", scs_list_opt, "e.g. 1..6 or 1,2,4");
    cmd_sweep->add_option("--seeds", n_seeds_opt, "use seeds 1..N instead of the config list");
    cmd_sweep->add_option("--rapp", rapp_opt, "fixed | sweep_select");
    cmd_sweep->add_option("--threads", threads_opt, "parallel drop workers (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_validate->parsed()) {
            scfsim::load_config(config_path);
            std::cout << "config OK: " << config_path << "\n";
            return 0;
        }

        if (cmd_run->parsed()) {
            const scfsim::ScenarioConfig cfg = scfsim::load_config(config_path);
            const std::uint64_t seed = seed_set ? seed_opt : cfg.run.seeds.front();
            const int scs = scs_opt > 0 ? scs_opt : cfg.control.scs;
            const scfsim::DropResult drop = scfsim::run_drop(cfg, scs, seed, cfg.run.n_tti);
            scfsim::write_drop_outputs(drop, cfg, cfg.run.n_tti, out_dir);
            std::printf("drop scs=%d seed=%llu: %.6g bits over %.6g J -> RAN EE %.6g bit/J\n",
                        drop.scs, static_cast<unsigned long long>(drop.seed),
                        drop.kpi.total_bits, drop.kpi.total_energy_j,
                        drop.kpi.ran_ee_bit_per_j);
            return 0;
        }

        const scfsim::ScenarioConfig cfg = scfsim::load_config(config_path);
        scfsim::RunConfig rc = scfsim::run_config_from_scenario(cfg);
        if (!scs_list_opt.empty()) {
            rc.scs_list = parse_scs_list(scs_list_opt);
        }
        if (n_seeds_opt > 0) {
            rc.seeds.clear();
            for (int i = 1; i <= n_seeds_opt; ++i) {
                rc.seeds.push_back(static_cast<std::uint64_t>(i));
            }
        }
        if (!rapp_opt.empty()) {
            if (rapp_opt == "fixed") {
                rc.rapp_mode = scfsim::RappMode::fixed;
            } else if (rapp_opt == "sweep_select") {
                rc.rapp_mode = scfsim::RappMode::sweep_select;
            } else {
                throw scfsim::ConfigError("unknown --rapp mode '" + rapp_opt + "'");
            }
        }
        if (threads_opt >= 0) {
            rc.threads = threads_opt;
        }

        const scfsim::SweepResult sweep = scfsim::run_sweep(rc);
        scfsim::write_sweep_outputs(sweep, rc, out_dir);
        for (int scs : sweep.scs_list) {
            std::printf("scs %d: mean RAN EE %.6g bit/J\n", scs, sweep.mean_ran_ee.at(scs));
        }
        std::printf("best scs: %d\n", sweep.best_scs);
        if (sweep.selected_policy) {
            std::printf("rApp selected policy: scs=%d (top_n_rsrp)\n",
                        sweep.selected_policy->scs);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
