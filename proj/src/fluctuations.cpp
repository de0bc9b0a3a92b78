#include "polymerlab/fluctuations.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

#include "polymerlab/polymer.hpp"
#include "polymerlab/spectra.hpp"

namespace polymerlab::fluctuations {

void ExperimentConfig::validate() const {
    model.validate();
    if (replicas < 1) throw std::invalid_argument("need at least one replica");
    if (sizes.empty()) throw std::invalid_argument("need at least one size");
    for (int n : sizes)
        if (n < 2) throw std::invalid_argument("sizes must be >= 2");
    if (k_max < 1 || k_max > 3) throw std::invalid_argument("k_max must be in [1,3]");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

std::string ExperimentConfig::to_json() const {
    nlohmann::json j = nlohmann::json::parse(model.to_json());
    j["sizes"] = sizes;
    j["replicas"] = replicas;
    j["k_max"] = k_max;
    j["threads"] = threads;
    if (!out_dir.empty()) j["out"] = out_dir;
    return j.dump();
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig cfg;
    cfg.model = weights::WeightModel::from_json(text);
    cfg.sizes = j.at("sizes").get<std::vector<int>>();
    cfg.replicas = j.value("replicas", 1);
    cfg.k_max = j.value("k_max", 2);
    cfg.threads = j.value("threads", 1);
    cfg.out_dir = j.value("out", std::string());
    cfg.validate();
    return cfg;
}

std::string ExperimentConfig::config_hash() const {
    // FNV-1a over the canonical serialization
    uint64_t h = 1469598103934665603ull;
    for (char c : to_json()) {
        h ^= uint8_t(c);
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

ExperimentRecord run_replica(const ExperimentConfig& cfg, int n, int replica) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.n = n;
    rec.replica = replica;

    int k_max = std::min(cfg.k_max, n);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 8) throw std::runtime_error("replica kept hitting degenerate instances");
        weights::WeightModel m = cfg.model;
        m.seed = rng::derive_key(cfg.model.seed, uint64_t(n), uint64_t(replica),
                                 uint64_t(attempt));
        try {
            weights::WeightedInstance inst = weights::assign_weights(m, n);
            std::vector<double> logs = spectra::bottom_log_singular_values(
                inst.square, k_max, rng::derive_key(m.seed, 0x17e2));
            rec.neg_log_lambda = logs[0];
            rec.bottom_k_neg_logs.clear();
            double acc = 0;
            for (int k = 1; k <= k_max; ++k) {
                acc += logs[k - 1];
                rec.bottom_k_neg_logs.push_back(acc);
            }
            rec.log_Zk.clear();
            rec.zk_signs.clear();
            std::vector<polymer::PartitionTable> tables;
            for (int i = 1; i <= k_max; ++i) tables.push_back(polymer::f_table(inst.square, {1, i}));
            for (int k = 1; k <= k_max; ++k) {
                std::vector<polymer::PartitionTable> sub(tables.begin(), tables.begin() + k);
                SignedLog z = polymer::lgv_determinant(sub, polymer::corner_spec(n, k));
                if (z.sign == 0) throw spectra::DegenerateInstanceError("vanishing partition sum");
                rec.log_Zk.push_back(z.logmag);
                rec.zk_signs.push_back(z.sign);
            }
            rec.resample_count = attempt;
            if (cfg.model.kind == weights::WeightModel::Kind::mixed) {
                weights::ScalingConstants c = weights::scaling_constants(cfg.model.gamma);
                rec.y = (rec.neg_log_lambda - c.f_bar * n) / std::cbrt(n * c.g_bar / 2.0);
            }
            break;
        } catch (const spectra::DegenerateInstanceError&) {
            continue;  // resample with a derived sub-seed
        }
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rec;
}

}  // namespace

std::vector<ExperimentRecord> run_ensemble(const ExperimentConfig& cfg) {
    cfg.validate();
    struct Job {
        int n, replica;
    };
    std::vector<Job> jobs;
    for (int n : cfg.sizes)
        for (int r = 0; r < cfg.replicas; ++r) jobs.push_back({n, r});
    std::vector<ExperimentRecord> records(jobs.size());

    int workers = std::max(1, cfg.threads);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[i] = run_replica(cfg, jobs[i].n, jobs[i].replica);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    // jobs vector is already in deterministic (n, replica) order
    return records;
}

std::vector<double> rescale_lambda(const std::vector<ExperimentRecord>& records, double gamma) {
    weights::ScalingConstants c = weights::scaling_constants(gamma);
    std::vector<double> out;
    out.reserve(records.size());
    int n0 = records.empty() ? 0 : records.front().n;
    for (const auto& r : records) {
        if (r.n != n0) throw std::invalid_argument("records mix lattice sizes");
        double scale = std::cbrt(r.n * c.g_bar / 2.0);
        out.push_back((r.neg_log_lambda - c.f_bar * r.n) / scale);
    }
    return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < 20) throw std::invalid_argument("need at least 20 samples");
    std::sort(samples.begin(), samples.end());
    double n = double(samples.size());
    double d = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, std::fabs((i + 1) / n - f));
        d = std::max(d, std::fabs(i / n - f));
    }
    return d;
}

std::vector<CdfReportRow> cdf_report(std::vector<double> samples,
                                     const std::function<double(double)>& cdf, int grid_points) {
    if (samples.size() < 20) throw std::invalid_argument("need at least 20 samples");
    std::sort(samples.begin(), samples.end());
    std::vector<CdfReportRow> rows;
    double lo = samples.front() - 0.5, hi = samples.back() + 0.5;
    for (int i = 0; i < grid_points; ++i) {
        double x = lo + (hi - lo) * i / (grid_points - 1);
        double emp = double(std::upper_bound(samples.begin(), samples.end(), x) - samples.begin()) /
                     double(samples.size());
        rows.push_back({x, emp, cdf(x)});
    }
    return rows;
}

std::vector<TopkDiagnosticRow> topk_convergence(const std::vector<ExperimentRecord>& records,
                                                int k) {
    std::map<int, std::vector<double>> deltas;
    for (const auto& r : records) {
        if (int(r.bottom_k_neg_logs.size()) < k || int(r.log_Zk.size()) < k)
            throw std::out_of_range("records lack order-" + std::to_string(k) + " data");
        double d = std::fabs(r.bottom_k_neg_logs[k - 1] - r.log_Zk[k - 1]) / std::cbrt(double(r.n));
        deltas[r.n].push_back(d);
    }
    std::vector<TopkDiagnosticRow> rows;
    for (auto& [n, v] : deltas) {
        std::sort(v.begin(), v.end());
        auto q = [&](double p) { return v[size_t(p * (v.size() - 1))]; };
        rows.push_back({n, int(v.size()), q(0.5), q(0.25), q(0.75)});
    }
    return rows;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records, int k_max) {
    std::string out = "n,replica,neg_log_lambda";
    for (int k = 1; k <= k_max; ++k) out += ",neg_log_bottom_" + std::to_string(k);
    for (int k = 1; k <= k_max; ++k) out += ",log_Z_" + std::to_string(k);
    out += ",y,resamples\n";
    char buf[64];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g", r.n, r.replica, r.neg_log_lambda);
        out += buf;
        for (int k = 1; k <= k_max; ++k) {
            double v = k <= int(r.bottom_k_neg_logs.size()) ? r.bottom_k_neg_logs[k - 1] : 0;
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out += buf;
        }
        for (int k = 1; k <= k_max; ++k) {
            double v = k <= int(r.log_Zk.size()) ? r.log_Zk[k - 1] : 0;
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g,%d\n", r.y, r.resample_count);
        out += buf;
    }
    return out;
}

std::string timings_to_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "n,replica,wall_ms\n";
    char buf[64];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.3f\n", r.n, r.replica, r.wall_ms);
        out += buf;
    }
    return out;
}

std::string report_to_json(const ExperimentConfig& cfg,
                           const std::vector<ExperimentRecord>& records) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["config"] = nlohmann::json::parse(cfg.to_json());
    j["config_hash"] = cfg.config_hash();

    nlohmann::json ks = nlohmann::json::array();
    if (cfg.model.kind == weights::WeightModel::Kind::mixed) {
        for (int n : cfg.sizes) {
            std::vector<ExperimentRecord> sub;
            for (const auto& r : records)
                if (r.n == n) sub.push_back(r);
            if (int(sub.size()) < 20) continue;
            std::vector<double> y = rescale_lambda(sub, cfg.model.gamma);
            double d = ks_distance(y, [](double x) { return tw_gue_cdf(x); });
            double mean = 0;
            for (double v : y) mean += v;
            mean /= double(y.size());
            ks.push_back({{"n", n}, {"ks", d}, {"mean_y", mean}, {"samples", y.size()}});
        }
    }
    j["ks_table"] = ks;

    nlohmann::json topk = nlohmann::json::array();
    int km = records.empty() ? 0 : int(records.front().log_Zk.size());
    for (int k = 1; k <= km; ++k) {
        nlohmann::json series = nlohmann::json::array();
        for (const auto& row : topk_convergence(records, k))
            series.push_back({{"n", row.n},
                              {"count", row.count},
                              {"median", row.median},
                              {"q25", row.q25},
                              {"q75", row.q75}});
        topk.push_back({{"k", k}, {"series", series}});
    }
    j["delta_series"] = topk;
    return j.dump(2);
}

std::string plot_data_csv(const std::vector<ExperimentRecord>& records, double gamma) {
    std::map<int, std::vector<ExperimentRecord>> by_n;
    for (const auto& r : records) by_n[r.n].push_back(r);
    std::string out = "n,x,F_empirical,F_reference\n";
    char buf[96];
    for (auto& [n, sub] : by_n) {
        if (int(sub.size()) < 20) continue;
        std::vector<double> y = rescale_lambda(sub, gamma);
        for (const auto& row : cdf_report(y, [](double x) { return tw_gue_cdf(x); })) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", n, row.x, row.f_empirical,
                          row.f_reference);
            out += buf;
        }
    }
    return out;
}

}  // namespace polymerlab::fluctuations
