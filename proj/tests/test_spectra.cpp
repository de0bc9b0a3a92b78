#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "polymerlab/lattice.hpp"
#include "polymerlab/polymer.hpp"
#include "polymerlab/spectra.hpp"
#include "polymerlab/weights.hpp"

using namespace polymerlab;

TEST_CASE("two-by-two bipartite block") {
    lattice::AdjacencyMatrix A;
    A.dim = 2;
    A.symmetric = true;
    A.dense = Eigen::MatrixXd::Zero(2, 2);
    A.dense(0, 1) = A.dense(1, 0) = 3.0;
    auto ev = spectra::eigenvalues_hex(A);
    CHECK(ev[0] == doctest::Approx(3.0));
    CHECK(ev[1] == doctest::Approx(-3.0));

    A.symmetric = false;
    CHECK_THROWS(spectra::eigenvalues_hex(A));
}

TEST_CASE("bipartite spectra are symmetric under negation") {
    for (uint64_t seed : {3ull, 4ull}) {
        auto inst = weights::assign_weights(weights::WeightModel::mixed(1.0, seed), 5);
        auto ev = spectra::eigenvalues_hex(lattice::hex_adjacency(inst.hex));
        size_t m = ev.size();
        for (size_t i = 0; i < m; ++i)
            CHECK(ev[i] == doctest::Approx(-ev[m - 1 - i]).epsilon(1e-8));
    }
}

TEST_CASE("singular values of tiny matrices") {
    lattice::AdjacencyMatrix A;
    A.dim = 1;
    A.dense = Eigen::MatrixXd::Constant(1, 1, -4.0);
    auto sv = spectra::singular_values_square(A);
    CHECK(sv == std::vector<double>{4.0});

    lattice::AdjacencyMatrix D;
    D.dim = 2;
    D.dense = Eigen::MatrixXd::Zero(2, 2);
    D.dense(0, 0) = 2.0;
    D.dense(1, 1) = 0.5;
    sv = spectra::singular_values_square(D);
    CHECK(sv[0] == doctest::Approx(2.0));
    CHECK(sv[1] == doctest::Approx(0.5));

    lattice::AdjacencyMatrix S;
    S.dim = 2;
    S.dense = Eigen::MatrixXd::Zero(2, 2);
    S.dense(0, 0) = 1.0;  // second row zero: singular
    CHECK_THROWS_AS((void)spectra::singular_values_square(S), spectra::DegenerateInstanceError);
}

TEST_CASE("n=2 unit mixed lattice: spectrum equals plus-minus singular values") {
    lattice::SquareLattice lat(2, {1, 1, 1, 1}, {-1, -1}, {-1, -1});
    auto ev = spectra::eigenvalues_hex(lattice::hex_adjacency(lattice::build_hex_from_square(lat)));
    auto sv = spectra::singular_values_square(lattice::square_adjacency(lat));
    REQUIRE(ev.size() == 8);
    REQUIRE(sv.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(ev[i] == doctest::Approx(sv[i]).epsilon(1e-10));
        CHECK(ev[7 - i] == doctest::Approx(-sv[i]).epsilon(1e-10));
    }
}

TEST_CASE("smallest positive entry honors the positivity cutoff") {
    CHECK(spectra::smallest_positive_eigenvalue({3, 1, -1, -3}) == doctest::Approx(1.0));
    CHECK(spectra::smallest_positive_eigenvalue({2, 0, -2}) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)spectra::smallest_positive_eigenvalue({-1.0, 0.0}),
                    spectra::DegenerateInstanceError);
    CHECK_THROWS(spectra::smallest_positive_eigenvalue({}));
}

TEST_CASE("bottom-k log products") {
    std::vector<double> spec{4, 2, 1, -1, -2, -4};
    CHECK(spectra::bottom_k_log_product(spec, 2) == doctest::Approx(std::log(2.0)));
    CHECK(spectra::bottom_k_log_product(spec, 1) ==
          doctest::Approx(std::log(spectra::smallest_positive_eigenvalue(spec))));
    CHECK_THROWS(spectra::bottom_k_log_product(spec, 4));
}

TEST_CASE("log-domain singular product equals the triangular determinant") {
    for (int n : {3, 5, 8}) {
        auto inst = weights::assign_weights(weights::WeightModel::mixed(0.9, 60 + n), n);
        auto sv = spectra::singular_values_square(lattice::square_adjacency(inst.square));
        double log_prod = 0;
        for (double s : sv) log_prod += std::log(s);
        double log_det = 0;
        for (int i = 0; i < n * n; ++i)
            log_det += std::log(std::fabs(inst.square.diag(site_vertex(i, n))));
        CHECK(log_prod == doctest::Approx(log_det).epsilon(1e-6));
    }
}

TEST_CASE("inverse singular values are the reciprocals in reverse order") {
    auto inst = weights::assign_weights(weights::WeightModel::mixed(1.2, 5), 3);
    auto A = lattice::square_adjacency(inst.square);
    auto sv = spectra::singular_values_square(A);
    Eigen::MatrixXd inv = A.dense.inverse();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(inv);
    for (int i = 0; i < int(sv.size()); ++i)
        CHECK(svd.singularValues()[i] ==
              doctest::Approx(1.0 / sv[sv.size() - 1 - i]).epsilon(1e-8));
}

TEST_CASE("iterative bottom values agree with dense SVD up to n^2 = 1024") {
    // dense SVD is the oracle only while sigma_min/sigma_max stays well above
    // double roundoff. Edge magnitudes near 1/4 cancel the path-count entropy
    // and keep the whole spectrum representable at every size; the mixed
    // model joins at small n only (its sigma_min decays like e^{-c n} and
    // leaves the dense algorithm's floor behind).
    auto balanced_lattice = [](int n, uint64_t seed) {
        rng::Stream s(seed);
        auto loop = [&]() { return (s.next_unit() < 0.5 ? -1 : 1) * (0.7 + 0.7 * s.next_unit()); };
        auto edge = [&]() { return (s.next_unit() < 0.5 ? -1 : 1) * 0.25 * (0.8 + 0.4 * s.next_unit()); };
        std::vector<double> loops(n * n), right(n * (n - 1)), up(n * (n - 1));
        for (auto& v : loops) v = loop();
        for (auto& v : right) v = edge();
        for (auto& v : up) v = edge();
        return lattice::SquareLattice(n, loops, right, up);
    };
    for (int n : {4, 8, 16, 32}) {
        for (int c = 0; c < 2; ++c) {
            if (c == 0 && n > 8) continue;
            lattice::SquareLattice lat =
                c == 0 ? weights::assign_weights(weights::WeightModel::mixed(0.8, 70 + n), n)
                             .square
                       : balanced_lattice(n, 70 + n);
            int k = 2;
            auto logs = spectra::bottom_log_singular_values(lat, k);
            auto sv = spectra::singular_values_square(lattice::square_adjacency(lat));
            REQUIRE(sv.back() / sv.front() > 1e-12);
            for (int j = 0; j < k; ++j) {
                double dense_log = -std::log(sv[sv.size() - 1 - j]);
                CHECK(std::fabs(logs[j] - dense_log) /
                          std::max(1.0, std::fabs(dense_log)) < 1e-7);
            }
        }
    }
}

TEST_CASE("spectral summary: dense and iterative routes tell one story") {
    auto inst = weights::assign_weights(weights::WeightModel::mixed(1.2, 11), 5);
    auto s = spectra::spectral_summary(inst.square, 2);
    CHECK(s.n == 5);
    CHECK(!s.eigenvalues.empty());
    CHECK(s.lambda_min_pos > 0);
    CHECK(s.bottom_k_log_products[0] == doctest::Approx(std::log(s.lambda_min_pos)).epsilon(1e-9));
    // log lambda_bottom = -log sigma_1(A^{-1})
    auto logs = spectra::bottom_log_singular_values(inst.square, 2);
    CHECK(s.bottom_k_log_products[0] == doctest::Approx(-logs[0]).epsilon(1e-7));
    CHECK(s.bottom_k_log_products[1] == doctest::Approx(-logs[0] - logs[1]).epsilon(1e-7));

    std::string json = s.to_json();
    CHECK(json.find("lambda_min_pos") != std::string::npos);
    std::string csv = s.spectrum_csv();
    CHECK(csv.rfind("index,value\n", 0) == 0);
}

TEST_CASE("iterative route survives magnitudes beyond double range") {
    // at this size the smallest singular value itself underflows doubles
    auto inst = weights::assign_weights(weights::WeightModel::mixed(0.5, 13), 96);
    auto logs = spectra::bottom_log_singular_values(inst.square, 1);
    double f_bar = weights::scaling_constants(0.5).f_bar;
    CHECK(logs[0] > 0.5 * f_bar * 96);  // way past log(1/DBL_MIN) ~ 708
    CHECK(logs[0] < 2.0 * f_bar * 96);
    CHECK(std::isfinite(logs[0]));
}
