#ifndef POLYMERLAB_FLUCTUATIONS_HPP
#define POLYMERLAB_FLUCTUATIONS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polymerlab/tw_cdf.hpp"
#include "polymerlab/weights.hpp"

namespace polymerlab::fluctuations {

struct ExperimentConfig {
    weights::WeightModel model;
    std::vector<int> sizes;
    int replicas = 1;
    int k_max = 2;
    int threads = 1;
    std::string out_dir;

    void validate() const;
    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
    // stable hash of the canonical config serialization, for provenance
    std::string config_hash() const;
};

// One Monte Carlo replica. Partition values are kept in the log domain;
// Z_n is positive in the mixed model by the even-path-length parity.
struct ExperimentRecord {
    int n = 0;
    int replica = 0;
    double neg_log_lambda = 0;                 // -log lambda_min = log sigma_1(A^{-1})
    std::vector<double> bottom_k_neg_logs;     // sum_{i<=k} log sigma_i(A^{-1}), k = 1..k_max
    std::vector<double> log_Zk;                // log |Z^(k)|, k = 1..k_max
    std::vector<int> zk_signs;
    double y = 0;                              // rescaled fluctuation variable
    int resample_count = 0;
    double wall_ms = 0;
};

std::vector<ExperimentRecord> run_ensemble(const ExperimentConfig& cfg);

// y = (-log lambda - f_bar n) / (n g_bar / 2)^{1/3}, one scale per record
std::vector<double> rescale_lambda(const std::vector<ExperimentRecord>& records, double gamma);

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

struct CdfReportRow {
    double x;
    double f_empirical;
    double f_reference;
};
std::vector<CdfReportRow> cdf_report(std::vector<double> samples,
                                     const std::function<double(double)>& cdf, int grid_points = 81);

// per-size quantiles of Delta_{n,k} = n^{-1/3} |sum_{i<=k} log sigma_i(A^{-1}) - log|Z^(k)||
struct TopkDiagnosticRow {
    int n = 0;
    int count = 0;
    double median = 0;
    double q25 = 0, q75 = 0;
};
std::vector<TopkDiagnosticRow> topk_convergence(const std::vector<ExperimentRecord>& records,
                                                int k);

std::string records_to_csv(const std::vector<ExperimentRecord>& records, int k_max);
std::string timings_to_csv(const std::vector<ExperimentRecord>& records);
std::string report_to_json(const ExperimentConfig& cfg,
                           const std::vector<ExperimentRecord>& records);
std::string plot_data_csv(const std::vector<ExperimentRecord>& records, double gamma);

}  // namespace polymerlab::fluctuations

#endif
