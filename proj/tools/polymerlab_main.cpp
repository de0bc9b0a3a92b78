// polymerlab command-line driver: lattice construction, spectra, partition
// functions, path surgery traces, invariant verification suites, and the
// Monte Carlo fluctuation experiments.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "polymerlab/fluctuations.hpp"
#include "polymerlab/path_surgery.hpp"
#include "polymerlab/polymer.hpp"
#include "polymerlab/spectra.hpp"
#include "polymerlab/version.hpp"
#include "polymerlab/weights.hpp"

namespace fs = std::filesystem;
using namespace polymerlab;

namespace {

struct CommonOpts {
    uint64_t seed = 1;
    std::string out = ".";
    std::string config;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--config", o.config, "JSON config file");
    cmd->add_option("--threads", o.threads, "worker thread count");
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

weights::WeightModel model_from(const CommonOpts& o, double gamma) {
    if (!o.config.empty()) {
        auto m = weights::WeightModel::from_json(read_file(o.config));
        if (m.seed == 0) m.seed = o.seed;
        return m;
    }
    return weights::WeightModel::mixed(gamma, o.seed);
}

nlohmann::json provenance(const std::string& extra_hash = "") {
    nlohmann::json j;
    j["version"] = kVersion;
    if (!extra_hash.empty()) j["config_hash"] = extra_hash;
    return j;
}

// ----------------------------------------------------------- verify suites

struct SuiteResult {
    std::string name;
    bool pass = true;
    nlohmann::json details;
};

SuiteResult verify_duality(int n_max, uint64_t seed, int cases) {
    SuiteResult res{"duality", true, {}};
    double worst = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int c = 0; c < cases; ++c) {
            auto model = (c % 2 == 0)
                             ? weights::WeightModel::mixed(0.8, rng::derive_key(seed, n, c))
                             : weights::WeightModel::iid(weights::DistSpec::lognormal(0.1, 0.4),
                                                         rng::derive_key(seed, n, c));
            auto inst = weights::assign_weights(model, n);
            auto ev = spectra::eigenvalues_hex(lattice::hex_adjacency(inst.hex));
            auto sv = spectra::singular_values_square(lattice::square_adjacency(inst.square));
            std::vector<double> expect;
            for (double s : sv) expect.push_back(s);
            for (double s : sv) expect.push_back(-s);
            std::sort(expect.begin(), expect.end(), std::greater<double>());
            double smax = sv.front();
            for (size_t i = 0; i < ev.size(); ++i) {
                double err = std::fabs(ev[i] - expect[i]) /
                             std::max(std::fabs(expect[i]), 1e-4 * smax);
                worst = std::max(worst, err);
            }
        }
    res.pass = worst < 1e-8;
    res.details = {{"max_relative_error", worst}, {"n_max", n_max}, {"cases_per_n", cases}};
    return res;
}

SuiteResult verify_inverse(int n_max, uint64_t seed, int cases) {
    SuiteResult res{"inverse", true, {}};
    double worst = 0;
    for (int c = 0; c < cases; ++c) {
        int n = 2 + int(rng::derive_key(seed, 77, c) % uint64_t(std::max(1, n_max - 1)));
        rng::Stream s(rng::derive_key(seed, 17, c));
        std::vector<double> loops(n * n), right(n * (n - 1)), up(n * (n - 1));
        auto draw = [&]() {
            double v = 0.5 * std::exp(1.0986 * s.next_unit());  // magnitude in [0.5, 1.5e]
            return s.next_unit() < 0.5 ? -v : v;
        };
        for (auto& v : loops) v = draw();
        for (auto& v : right) v = draw();
        for (auto& v : up) v = draw();
        lattice::SquareLattice lat(n, loops, right, up);
        auto A = lattice::square_adjacency(lat, lattice::MatrixStorage::dense);
        Eigen::MatrixXd F(n * n, n * n);
        for (int col = 0; col < n * n; ++col) {
            auto table = polymer::f_table(lat, lat.order().vertex_at(col));
            for (int row = 0; row < n * n; ++row)
                F(row, col) = table.at(lat.order().vertex_at(row)).value();
        }
        double resid = (A.dense.transpose() * F - Eigen::MatrixXd::Identity(n * n, n * n))
                           .cwiseAbs()
                           .maxCoeff();
        worst = std::max(worst, resid);
    }
    res.pass = worst < 1e-8;
    res.details = {{"max_residual", worst}, {"cases", cases}};
    return res;
}

SuiteResult verify_lgv(int n_max, int k_max, uint64_t seed, int cases) {
    SuiteResult res{"lgv", true, {}};
    double worst = 0;
    int sign_mismatches = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= std::min(k_max, n); ++k)
            for (int c = 0; c < cases; ++c) {
                auto model =
                    (c % 2 == 0)
                        ? weights::WeightModel::mixed(0.7, rng::derive_key(seed, n * 10 + k, c))
                        : weights::WeightModel::iid(weights::DistSpec::two_point(1.5, 0.6),
                                                    rng::derive_key(seed, n * 10 + k, c));
                auto inst = weights::assign_weights(model, n);
                auto spec = polymer::corner_spec(n, k);
                SignedLog fast = polymer::lgv_determinant(inst.square, spec);
                SignedLog slow = polymer::brute_force_Zk(inst.square, spec);
                if (fast.sign != slow.sign) {
                    // both routes may lose the sign to cancellation at the
                    // same magnitude scale; only count solid disagreements
                    if (fast.sign * slow.sign == -1 &&
                        std::fabs(fast.logmag - slow.logmag) < 1)
                        ++sign_mismatches;
                } else if (fast.sign != 0) {
                    worst = std::max(worst, std::fabs(fast.logmag - slow.logmag) /
                                                std::max(1.0, std::fabs(slow.logmag)));
                }
            }
    res.pass = worst < 1e-8 && sign_mismatches == 0;
    res.details = {{"max_log_error", worst}, {"sign_mismatches", sign_mismatches}};
    return res;
}

SuiteResult verify_sandwich(int n_max, int k_max, uint64_t seed, int cases) {
    SuiteResult res{"sandwich", true, {}};
    double worst_low = 0, worst_high = 0;
    for (int c = 0; c < cases; ++c) {
        int n = 2 + int(rng::derive_key(seed, 5, c) % uint64_t(std::max(1, n_max - 1)));
        auto inst = weights::assign_weights(
            weights::WeightModel::mixed(0.9, rng::derive_key(seed, 3, c)), n);
        auto sv = spectra::singular_values_square(lattice::square_adjacency(inst.square));
        for (int k = 1; k <= std::min(k_max, n); ++k) {
            auto [best, spec] = polymer::max_ZST(inst.square, k);
            double log_prod = 0;
            for (int i = 0; i < k; ++i) log_prod += -std::log(sv[sv.size() - 1 - i]);
            double log_binom = 0;
            int nn = n * n;
            for (int i = 0; i < k; ++i)
                log_binom += std::log(double(nn - i)) - std::log(double(i + 1));
            // max |Z| <= prod sigma_i(A^{-1}) <= binom^2 max |Z|
            worst_low = std::max(worst_low, best.logmag - log_prod);
            worst_high = std::max(worst_high, log_prod - (2 * log_binom + best.logmag));
        }
    }
    res.pass = worst_low < 1e-9 && worst_high < 1e-9;
    res.details = {{"max_lower_violation", worst_low}, {"max_upper_violation", worst_high}};
    return res;
}

SuiteResult verify_surgery(int n, int k, uint64_t seed, int cases) {
    SuiteResult res{"surgery", true, {}};
    int max_removed = 0, max_rounds = 0;
    for (int c = 0; c < cases; ++c) {
        rng::Stream s(rng::derive_key(seed, 0x5u, c));
        PathTuple t = random_disjoint_tuple(n, k, s);
        auto [out, rep] = surgery::lift_to_corner(t, n);
        out.validate(n);
        if (!out.vertex_disjoint() || !surgery::at_corner_spec(out, n)) {
            res.pass = false;
            break;
        }
        max_removed = std::max(max_removed, rep.removed_edges);
        max_rounds = std::max(max_rounds, rep.rounds);
    }
    res.details = {{"cases", cases},
                   {"max_removed_edges", max_removed},
                   {"max_rounds", max_rounds},
                   {"n", n},
                   {"k", k}};
    return res;
}

int cmd_verify(const std::string& suite, int n, int k, int cases, const CommonOpts& o) {
    std::vector<SuiteResult> results;
    if (suite == "duality" || suite == "all")
        results.push_back(verify_duality(n > 0 ? n : 12, o.seed, cases > 0 ? cases : 10));
    if (suite == "inverse" || suite == "all")
        results.push_back(verify_inverse(n > 0 ? std::min(n, 8) : 8, o.seed, cases > 0 ? cases : 20));
    if (suite == "lgv" || suite == "all")
        results.push_back(verify_lgv(n > 0 ? std::min(n, 5) : 5, k > 0 ? k : 3, o.seed,
                                     cases > 0 ? cases : 10));
    if (suite == "sandwich" || suite == "all")
        results.push_back(verify_sandwich(n > 0 ? std::min(n, 4) : 4, k > 0 ? std::min(k, 2) : 2,
                                          o.seed, cases > 0 ? cases : 25));
    if (suite == "surgery" || suite == "all")
        results.push_back(verify_surgery(n > 0 ? n : 10, k > 0 ? k : 2, o.seed,
                                         cases > 0 ? cases : 100));
    if (results.empty()) {
        std::cerr << "unknown suite: " << suite
                  << " (expected duality|inverse|lgv|sandwich|surgery|all)\n";
        return 2;
    }
    nlohmann::json j = provenance();
    j["suites"] = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass &= r.pass;
        j["suites"].push_back({{"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " " << r.details.dump() << "\n";
    }
    write_file(fs::path(o.out) / "verify_report.json", j.dump(2));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed-polymer / random operator laboratory"};
    app.require_subcommand(1);

    CommonOpts o;
    int n = 0, k = 0, cases = 0;
    double gamma = 0.5;
    std::string suite = "all", records_path;

    auto* build = app.add_subcommand("build", "sample a weighted lattice and write it as JSON");
    add_common(build, o);
    build->add_option("--n", n, "lattice side")->required();
    build->add_option("--gamma", gamma, "mixed model parameter");

    auto* spectrum = app.add_subcommand("spectrum", "spectral summary of a sampled instance");
    add_common(spectrum, o);
    spectrum->add_option("--n", n, "lattice side")->required();
    spectrum->add_option("--k", k, "bottom-k depth");
    spectrum->add_option("--gamma", gamma, "mixed model parameter");

    auto* polymer_cmd = app.add_subcommand("polymer", "partition functions of a sampled instance");
    add_common(polymer_cmd, o);
    polymer_cmd->add_option("--n", n, "lattice side")->required();
    polymer_cmd->add_option("--k", k, "non-intersecting order");
    polymer_cmd->add_option("--gamma", gamma, "mixed model parameter");

    auto* surgery_cmd = app.add_subcommand("surgery", "trace the corner-rerooting pipeline");
    add_common(surgery_cmd, o);
    surgery_cmd->add_option("--n", n, "lattice side")->required();
    surgery_cmd->add_option("--k", k, "tuple order");
    surgery_cmd->add_option("--cases", cases, "number of random tuples");

    auto* verify = app.add_subcommand("verify", "run invariant suites; nonzero exit on failure");
    add_common(verify, o);
    verify->add_option("--suite", suite, "duality|inverse|lgv|sandwich|surgery|all");
    verify->add_option("--n", n, "size cap");
    verify->add_option("--k", k, "order cap");
    verify->add_option("--cases", cases, "cases per suite");

    auto* mc = app.add_subcommand("mc", "Monte Carlo ensemble from a JSON config");
    add_common(mc, o);

    auto* report = app.add_subcommand("report", "plot data from a records CSV");
    add_common(report, o);
    report->add_option("--records", records_path, "records CSV path")->required();
    report->add_option("--gamma", gamma, "mixed model parameter");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            auto inst = weights::assign_weights(model_from(o, gamma), n);
            write_file(fs::path(o.out) / "lattice.json", lattice::lattice_to_json(inst.square));
            std::cout << "wrote lattice.json (n=" << n << ")\n";
            return 0;
        }
        if (spectrum->parsed()) {
            auto inst = weights::assign_weights(model_from(o, gamma), n);
            auto summary = spectra::spectral_summary(inst.square, k > 0 ? k : 1);
            write_file(fs::path(o.out) / "spectrum.json", summary.to_json());
            write_file(fs::path(o.out) / "spectrum.csv", summary.spectrum_csv());
            std::cout << "lambda_min_pos log: " << -summary.bottom_k_log_products[0] << "\n";
            return 0;
        }
        if (polymer_cmd->parsed()) {
            auto inst = weights::assign_weights(model_from(o, gamma), n);
            int order = k > 0 ? k : 1;
            nlohmann::json j = provenance();
            for (int kk = 1; kk <= order; ++kk) {
                SignedLog z = polymer::nonintersecting_Z(inst.square, kk);
                j["log_Z"][std::to_string(kk)] = {{"sign", z.sign}, {"logmag", z.logmag}};
            }
            write_file(fs::path(o.out) / "polymer.json", j.dump(2));
            write_file(fs::path(o.out) / "f_table.csv",
                       polymer::f_table(inst.square, {1, 1}).to_csv());
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (surgery_cmd->parsed()) {
            int order = k > 0 ? k : 2;
            int m = cases > 0 ? cases : 1;
            nlohmann::json traces = nlohmann::json::array();
            for (int c = 0; c < m; ++c) {
                rng::Stream s(rng::derive_key(o.seed, 0xce, c));
                PathTuple t = random_disjoint_tuple(n, order, s);
                auto [out2, rep] = surgery::lift_to_corner(t, n);
                traces.push_back(nlohmann::json::parse(surgery::report_to_json(rep)));
            }
            write_file(fs::path(o.out) / "surgery_traces.json", traces.dump(2));
            std::cout << "wrote surgery_traces.json (" << m << " cases)\n";
            return 0;
        }
        if (verify->parsed()) return cmd_verify(suite, n, k, cases, o);
        if (mc->parsed()) {
            if (o.config.empty()) throw std::runtime_error("mc needs --config");
            auto cfg = fluctuations::ExperimentConfig::from_json(read_file(o.config));
            if (o.threads > 1) cfg.threads = o.threads;
            auto records = fluctuations::run_ensemble(cfg);
            fs::path dir = !cfg.out_dir.empty() ? cfg.out_dir : o.out;
            write_file(dir / "records.csv", fluctuations::records_to_csv(records, cfg.k_max));
            write_file(dir / "timings.csv", fluctuations::timings_to_csv(records));
            write_file(dir / "report.json", fluctuations::report_to_json(cfg, records));
            std::cout << "wrote records.csv, timings.csv, report.json (config hash "
                      << cfg.config_hash() << ")\n";
            return 0;
        }
        if (report->parsed()) {
            std::string csv = read_file(records_path);
            std::vector<fluctuations::ExperimentRecord> records;
            std::istringstream in(csv);
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) {
                fluctuations::ExperimentRecord r;
                if (std::sscanf(line.c_str(), "%d,%d,%lf", &r.n, &r.replica,
                                &r.neg_log_lambda) == 3)
                    records.push_back(r);
            }
            write_file(fs::path(o.out) / "plot_data.csv",
                       fluctuations::plot_data_csv(records, gamma));
            std::cout << "wrote plot_data.csv (" << records.size() << " records)\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
