#include "scfsim/harness.hpp"

#include "scfsim/phy.hpp"
#include "scfsim/power_metrics.hpp"
#include "scfsim/scheduler.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <span>
#include <stdexcept>
#include <thread>

namespace scfsim {

namespace {

// shortest round-trip representation, locale independent
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct EngineState {
    Deployment dep;
    LargeScaleTable large_scale;
    std::vector<RsrpReport> rsrp;
    ClusterMap clusters;
};

}  // namespace

DropResult run_drop(const ScenarioConfig& config, int scs, std::uint64_t seed, int n_tti,
                    DropTrace* trace) {
    try {
        if (n_tti < 1) {
            throw std::invalid_argument("n_tti must be >= 1");
        }

        EngineState st;
        st.dep = build_deployment(config, seed);
        const int n_ru = st.dep.n_ru();
        const int n_ue = st.dep.n_ue();
        const int n_rb = st.dep.carrier.n_rb;
        const Carrier& carrier = st.dep.carrier;

        st.large_scale = build_large_scale_table(st.dep, config.channel, seed);
        st.rsrp = measure_rsrp(st.dep, st.large_scale, 0);
        const A1Policy policy = rapp_fixed_policy(scs);
        st.clusters = xapp_form_clusters(st.rsrp, policy, n_ru);

        // per-(ue, ru) amplitude of the large-scale gain
        Eigen::MatrixXd amplitude(n_ue, n_ru);
        for (int u = 0; u < n_ue; ++u) {
            for (int a = 0; a < n_ru; ++a) {
                amplitude(u, a) = std::sqrt(std::pow(10.0, st.large_scale.gain_db(u, a) / 10.0));
            }
        }

        std::vector<double> budget_w(n_ru);
        for (int a = 0; a < n_ru; ++a) {
            budget_w[a] = per_rb_budget_w(st.dep.radio_units[a].tx_power_dbm, n_rb);
        }
        const double noise_w =
            noise_power_w(carrier.rb_bandwidth_hz, carrier.noise_figure_db);

        // reusable per-RU buffers
        std::vector<ChannelMatrix> h_all(n_ru);
        std::vector<Eigen::MatrixXcd> gains(n_ru);
        const int l_max_cfg = config.scheduler.l_max;
        for (int a = 0; a < n_ru; ++a) {
            const int m = st.dep.radio_units[a].n_antennas;
            h_all[a].resize(n_ue, m);
            gains[a].resize(n_ue, std::min(m, l_max_cfg));
        }
        ChannelMatrix h_served;

        EnergyLedger ledger(n_ru, n_ue);
        std::vector<TtiKpiSample> samples;
        samples.reserve(static_cast<std::size_t>(n_tti));
        DropDiagnostics diag;

        using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        using RowMatrixXu8 =
            Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
        RowMatrixXd sinr_tti(n_ue, n_rb);
        RowMatrixXu8 served_tti(n_ue, n_rb);
        std::vector<RbRuStreams> streams;
        std::vector<std::vector<int>> kept_users(n_ru);
        std::vector<double> sinr_col(n_ue);

        if (trace) {
            trace->deployment = st.dep;
            trace->large_scale = st.large_scale;
        }

        for (int tti = 0; tti < n_tti; ++tti) {
            try {
                const TtiSchedule sched =
                    schedule_tti(st.clusters, st.dep, tti, config.scheduler.l_max);
                sinr_tti.setZero();
                served_tti.setZero();
                std::vector<int> active_rbs(n_ru, 0);

                for (int rb = 0; rb < n_rb; ++rb) {
                    streams.clear();
                    for (int a = 0; a < n_ru; ++a) {
                        const std::vector<int>& served = sched.served[a][rb];
                        if (served.empty()) {
                            continue;
                        }
                        const int m = st.dep.radio_units[a].n_antennas;
                        for (int u = 0; u < n_ue; ++u) {
                            rng::Stream s = fading_stream(seed, tti, rb, a, u);
                            std::span<std::complex<double>> row(h_all[a].row(u).data(),
                                                                static_cast<std::size_t>(m));
                            draw_small_scale(s, row);
                            h_all[a].row(u) *= amplitude(u, a);
                        }

                        const int k_sched = static_cast<int>(served.size());
                        h_served.resize(k_sched, m);
                        for (int i = 0; i < k_sched; ++i) {
                            h_served.row(i) = h_all[a].row(served[i]);
                        }
                        const ZfPrecode zf = zf_precode(h_served);
                        diag.zf_rows_dropped += zf.n_dropped;
                        const int k = static_cast<int>(zf.kept.size());
                        if (k == 0) {
                            continue;  // nothing decodable, RB stays silent
                        }
                        auto& kept = kept_users[a];
                        kept.resize(static_cast<std::size_t>(k));
                        for (int i = 0; i < k; ++i) {
                            kept[i] = served[zf.kept[i]];
                        }

                        const double p = power_split(budget_w[a], k);
                        const double sum_rel =
                            std::abs(p * k - budget_w[a]) / budget_w[a];
                        diag.max_power_sum_rel_err = std::max(diag.max_power_sum_rel_err, sum_rel);

                        gains[a].leftCols(k).noalias() = h_all[a] * zf.w;
                        streams.push_back(RbRuStreams{a, &gains[a], kept, p});
                        ++active_rbs[a];

                        if (trace) {
                            trace->transmissions.push_back(
                                DropTrace::Transmission{tti, rb, a, kept, p, h_all[a], zf.w});
                        }
                    }

                    if (!streams.empty()) {
                        accumulate_rb_sinr(streams, noise_w, sinr_col);
                        for (const RbRuStreams& s : streams) {
                            for (int u : s.users) {
                                served_tti(u, rb) = 1;
                            }
                        }
                        for (int u = 0; u < n_ue; ++u) {
                            sinr_tti(u, rb) = served_tti(u, rb) ? sinr_col[u] : 0.0;
                        }
                    }
                }

                TtiKpiSample sample;
                sample.ue_bits.resize(static_cast<std::size_t>(n_ue));
                sample.ru_consumed_w.resize(static_cast<std::size_t>(n_ru));
                for (int u = 0; u < n_ue; ++u) {
                    std::span<const double> row(sinr_tti.row(u).data(),
                                                static_cast<std::size_t>(n_rb));
                    std::span<const std::uint8_t> mask(served_tti.row(u).data(),
                                                       static_cast<std::size_t>(n_rb));
                    sample.ue_bits[u] =
                        ue_tti_bits(row, mask, carrier, config.scheduler.se_cap_bps_hz);
                    ledger.ue_bits[u] += sample.ue_bits[u];
                }
                for (int a = 0; a < n_ru; ++a) {
                    const double radiated_w = active_rbs[a] * budget_w[a];
                    const double max_w =
                        std::pow(10.0, (st.dep.radio_units[a].tx_power_dbm - 30.0) / 10.0);
                    diag.max_radiated_excess_w =
                        std::max(diag.max_radiated_excess_w, radiated_w - max_w);
                    const double consumed_w = ru_consumed_power_w(
                        radiated_w, st.dep.radio_units[a],
                        params_for(config.power_model, st.dep.radio_units[a].kind));
                    ledger.add_ru_tti(a, radiated_w, consumed_w, carrier.tti_duration_s);
                    sample.ru_consumed_w[a] = consumed_w;
                }
                if (trace) {
                    trace->sinr_per_tti.push_back(sinr_tti);
                    trace->served_per_tti.push_back(served_tti);
                    std::vector<double> rad(n_ru);
                    for (int a = 0; a < n_ru; ++a) {
                        rad[a] = active_rbs[a] * budget_w[a];
                    }
                    trace->radiated_w_per_tti.push_back(std::move(rad));
                    trace->consumed_w_per_tti.push_back(sample.ru_consumed_w);
                }
                samples.push_back(std::move(sample));
            } catch (const std::exception& e) {
                throw std::runtime_error("tti " + std::to_string(tti) + ": " + e.what());
            }
        }

        DropResult result;
        result.seed = seed;
        result.scs = scs;
        result.ue_bits = ledger.ue_bits;
        result.ru_radiated_j = ledger.ru_radiated_j;
        result.ru_consumed_j = ledger.ru_consumed_j;
        result.rsrp = std::move(st.rsrp);
        result.clusters = std::move(st.clusters);
        result.kpi = aggregate_o1_kpis(samples, 0, n_tti, carrier.tti_duration_s);
        result.diag = diag;
        return result;
    } catch (const std::exception& e) {
        throw std::runtime_error("drop(scs=" + std::to_string(scs) +
                                 ", seed=" + std::to_string(seed) + ") failed: " + e.what());
    }
}

RunConfig run_config_from_scenario(const ScenarioConfig& scenario) {
    RunConfig rc;
    rc.scenario = scenario;
    rc.scs_list = scenario.control.scs_list;
    rc.seeds = scenario.run.seeds;
    rc.n_tti = scenario.run.n_tti;
    rc.rapp_mode = scenario.control.rapp_mode;
    rc.threads = scenario.run.threads;
    return rc;
}

SweepResult run_sweep(const RunConfig& config) {
    validate(config.scenario);
    if (config.scs_list.empty()) {
        throw std::invalid_argument("run_sweep: scs_list must be non-empty");
    }
    if (config.seeds.empty()) {
        throw std::invalid_argument("run_sweep: seeds must be non-empty");
    }
    if (config.n_tti < 1) {
        throw std::invalid_argument("run_sweep: n_tti must be >= 1");
    }

    SweepResult sweep;
    sweep.scs_list = config.scs_list;
    sweep.seeds = config.seeds;

    struct Job {
        int scs;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    jobs.reserve(config.scs_list.size() * config.seeds.size());
    for (int scs : config.scs_list) {
        for (std::uint64_t seed : config.seeds) {
            jobs.push_back(Job{scs, seed});
        }
    }

    sweep.drops.resize(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    const std::size_t n_threads = std::min<std::size_t>(
        config.threads > 0 ? static_cast<std::size_t>(config.threads) : hw, jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) {
                return;
            }
            try {
                sweep.drops[i] = run_drop(config.scenario, jobs[i].scs, jobs[i].seed, config.n_tti);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);  // first failure in job order
        }
    }

    // deterministic ordered reduction
    for (std::size_t si = 0; si < sweep.scs_list.size(); ++si) {
        double sum = 0.0;
        for (std::size_t di = 0; di < sweep.seeds.size(); ++di) {
            sum += sweep.drop(si, di).kpi.ran_ee_bit_per_j;
        }
        sweep.mean_ran_ee[sweep.scs_list[si]] = sum / static_cast<double>(sweep.seeds.size());
    }
    sweep.best_scs = rapp_sweep_select(sweep.mean_ran_ee).scs;
    if (config.rapp_mode == RappMode::sweep_select) {
        sweep.selected_policy = rapp_sweep_select(sweep.mean_ran_ee);
    }
    return sweep;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
    write_file(path, j.dump(2) + "\n");
}

nlohmann::ordered_json snapshot_json(const ScenarioConfig& config) {
    return config_to_json(config);
}

}  // namespace

void write_sweep_outputs(const SweepResult& sweep, const RunConfig& config,
                         const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_json(out_dir / "config.json", snapshot_json(config.scenario));

    std::string ran;
    ran += "scs,seed,total_bits,total_energy_j,ran_ee\n";
    for (std::size_t si = 0; si < sweep.scs_list.size(); ++si) {
        for (std::size_t di = 0; di < sweep.seeds.size(); ++di) {
            const DropResult& d = sweep.drop(si, di);
            ran += std::to_string(d.scs) + "," + std::to_string(d.seed) + "," +
                   format_double(d.kpi.total_bits) + "," + format_double(d.kpi.total_energy_j) +
                   "," + format_double(d.kpi.ran_ee_bit_per_j) + "\n";
        }
    }
    write_file(out_dir / "ran_ee.csv", ran);

    std::string per_user;
    per_user += "scs,seed,ue_id,throughput_bps,per_user_ee\n";
    for (std::size_t si = 0; si < sweep.scs_list.size(); ++si) {
        for (std::size_t di = 0; di < sweep.seeds.size(); ++di) {
            const DropResult& d = sweep.drop(si, di);
            for (std::size_t u = 0; u < d.kpi.ue_throughput_bps.size(); ++u) {
                per_user += std::to_string(d.scs) + "," + std::to_string(d.seed) + "," +
                            std::to_string(u) + "," + format_double(d.kpi.ue_throughput_bps[u]) +
                            "," + format_double(d.kpi.per_user_ee_bit_per_j[u]) + "\n";
            }
        }
    }
    write_file(out_dir / "per_user_ee.csv", per_user);

    std::string cdf;
    cdf += "scs,value,prob\n";
    for (std::size_t si = 0; si < sweep.scs_list.size(); ++si) {
        std::vector<double> pooled;
        for (std::size_t di = 0; di < sweep.seeds.size(); ++di) {
            const auto& ee = sweep.drop(si, di).kpi.per_user_ee_bit_per_j;
            pooled.insert(pooled.end(), ee.begin(), ee.end());
        }
        for (const auto& [value, prob] : ecdf(std::move(pooled))) {
            cdf += std::to_string(sweep.scs_list[si]) + "," + format_double(value) + "," +
                   format_double(prob) + "\n";
        }
    }
    write_file(out_dir / "cdf.csv", cdf);

    nlohmann::ordered_json summary;
    summary["scs_list"] = sweep.scs_list;
    summary["seeds"] = sweep.seeds;
    summary["n_tti"] = config.n_tti;
    summary["mean_ran_ee"] = nlohmann::ordered_json::array();
    for (int scs : sweep.scs_list) {
        summary["mean_ran_ee"].push_back(
            {{"scs", scs}, {"ran_ee_bit_per_j", sweep.mean_ran_ee.at(scs)}});
    }
    summary["best_scs"] = sweep.best_scs;
    const auto it_nc = sweep.mean_ran_ee.find(1);
    if (it_nc != sweep.mean_ran_ee.end() && it_nc->second > 0.0) {
        summary["gain_over_scs1"] = sweep.mean_ran_ee.at(sweep.best_scs) / it_nc->second;
        // paired per-user comparison of the best cluster size vs scs = 1
        const auto nc_idx = std::find(sweep.scs_list.begin(), sweep.scs_list.end(), 1) -
                            sweep.scs_list.begin();
        const auto best_idx = std::find(sweep.scs_list.begin(), sweep.scs_list.end(),
                                        sweep.best_scs) -
                              sweep.scs_list.begin();
        long improved = 0;
        long total = 0;
        for (std::size_t di = 0; di < sweep.seeds.size(); ++di) {
            const auto& nc = sweep.drop(static_cast<std::size_t>(nc_idx), di).kpi;
            const auto& best = sweep.drop(static_cast<std::size_t>(best_idx), di).kpi;
            for (std::size_t u = 0; u < nc.per_user_ee_bit_per_j.size(); ++u) {
                improved += best.per_user_ee_bit_per_j[u] > nc.per_user_ee_bit_per_j[u] ? 1 : 0;
                ++total;
            }
        }
        summary["per_user_ee_improved_vs_scs1"] =
            static_cast<double>(improved) / static_cast<double>(total);
    }
    if (sweep.selected_policy) {
        summary["selected_policy"] = {{"scs", sweep.selected_policy->scs},
                                      {"algorithm", "top_n_rsrp"},
                                      {"policy_id", sweep.selected_policy->policy_id}};
    }
    write_json(out_dir / "summary.json", summary);
}

void write_drop_outputs(const DropResult& drop, const ScenarioConfig& config, int n_tti,
                        const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_json(out_dir / "config.json", snapshot_json(config));
    write_json(out_dir / "kpi_report.json", to_json(drop.kpi));
    write_json(out_dir / "cluster_config.json", to_json(E2ClusterConfig{drop.clusters, 0}));

    nlohmann::ordered_json meta;
    meta["scs"] = drop.scs;
    meta["seed"] = drop.seed;
    meta["n_tti"] = n_tti;
    meta["total_bits"] = drop.kpi.total_bits;
    meta["total_energy_j"] = drop.kpi.total_energy_j;
    meta["ran_ee_bit_per_j"] = drop.kpi.ran_ee_bit_per_j;
    write_json(out_dir / "run.json", meta);
}

}  // namespace scfsim
