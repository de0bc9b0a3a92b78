#include <doctest.h>

#include <cmath>

#include "polymerlab/special_functions.hpp"
#include "polymerlab/weights.hpp"

using namespace polymerlab;
using weights::polygamma;

namespace {
// closed-form constants used as independent oracles
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kZeta3 = 1.20205690315959428539973816151144999;
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("digamma closed forms at 1 and 1/2") {
    CHECK(polygamma(0, 1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-12));
    CHECK(polygamma(0, 0.5) == doctest::Approx(-kEulerGamma - 2 * kLn2).epsilon(1e-12));
    // spot value quoted to ten digits
    CHECK(polygamma(0, 0.5) == doctest::Approx(-1.9635100260).epsilon(1e-9));
}

TEST_CASE("trigamma closed forms") {
    CHECK(polygamma(1, 1.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-12));
    CHECK(polygamma(1, 0.5) == doctest::Approx(kPi * kPi / 2).epsilon(1e-12));
}

TEST_CASE("second derivative closed forms") {
    CHECK(polygamma(2, 1.0) == doctest::Approx(-2 * kZeta3).epsilon(1e-12));
    CHECK(polygamma(2, 0.5) == doctest::Approx(-14 * kZeta3).epsilon(1e-12));
    CHECK(polygamma(2, 0.5) == doctest::Approx(-16.8287966).epsilon(1e-8));
}

TEST_CASE("recurrence consistency across the shift threshold") {
    for (double x : {0.3, 1.7, 4.2, 9.9, 25.0}) {
        CHECK(polygamma(0, x + 1) - polygamma(0, x) == doctest::Approx(1 / x).epsilon(1e-11));
        CHECK(polygamma(1, x + 1) - polygamma(1, x) ==
              doctest::Approx(-1 / (x * x)).epsilon(1e-10));
        CHECK(polygamma(2, x + 1) - polygamma(2, x) ==
              doctest::Approx(2 / (x * x * x)).epsilon(1e-9));
    }
}

TEST_CASE("polygamma domain errors") {
    CHECK_THROWS(polygamma(0, 0.0));
    CHECK_THROWS(polygamma(0, -1.0));
    CHECK_THROWS(polygamma(3, 1.0));
}

TEST_CASE("digamma root") {
    double gs = weights::gamma_star();
    CHECK(std::fabs(polygamma(0, gs)) < 1e-12);
    CHECK(gs == doctest::Approx(1.461632).epsilon(1e-5));
    // bracket used by the solver is genuine
    CHECK(polygamma(0, 1.0) < 0);
    CHECK(polygamma(0, 2.0) > 0);
    // stable across recomputation
    CHECK(weights::gamma_star() == gs);
}

TEST_CASE("scaling constants from closed forms") {
    auto c1 = weights::scaling_constants(1.0);
    CHECK(c1.f_bar == doctest::Approx(2 * (kEulerGamma + 2 * kLn2)).epsilon(1e-12));
    CHECK(c1.g_bar == doctest::Approx(28 * kZeta3).epsilon(1e-12));
    CHECK(c1.g_bar == doctest::Approx(33.657593).epsilon(1e-7));
    CHECK(!c1.above_gamma_star);

    auto c2 = weights::scaling_constants(2.0);
    CHECK(c2.f_bar == doctest::Approx(2 * kEulerGamma).epsilon(1e-12));
    CHECK(c2.f_bar == doctest::Approx(1.1544313).epsilon(1e-7));
    CHECK(c2.above_gamma_star);

    auto cs = weights::scaling_constants(weights::gamma_star());
    CHECK(cs.f_bar > 0);  // digamma still negative at gamma*/2

    CHECK_THROWS(weights::scaling_constants(0.0));
    CHECK_THROWS(weights::scaling_constants(-1.0));
}

TEST_CASE("inverse gamma log moments match polygamma") {
    const int draws = 1000000;
    for (double gamma : {0.5, 1.0, 1.4}) {
        rng::Stream s(rng::derive_key(0x9e1, uint64_t(gamma * 10)));
        double sum = 0, sum2 = 0;
        for (int i = 0; i < draws; ++i) {
            double x = weights::sample_inverse_gamma(gamma, s);
            REQUIRE(x > 0);
            double lx = std::log(x);
            sum += lx;
            sum2 += lx * lx;
        }
        double mean = sum / draws;
        double var = sum2 / draws - mean * mean;
        double expect_mean = -polygamma(0, gamma);
        double expect_var = polygamma(1, gamma);
        // fourth moment of log X is finite; 4 standard errors
        double se_mean = std::sqrt(expect_var / draws);
        CHECK(std::fabs(mean - expect_mean) < 4 * se_mean);
        CHECK(std::fabs(var - expect_var) / expect_var < 0.02);
    }
}

TEST_CASE("mixed model: reproducible inverse-gamma loops, edges all -1") {
    auto model = weights::WeightModel::mixed(0.7, 42);
    auto a = weights::assign_weights(model, 2);
    auto b = weights::assign_weights(model, 2);
    CHECK(a.square.loops() == b.square.loops());
    for (double w : a.square.right_edges()) CHECK(w == -1.0);
    for (double w : a.square.up_edges()) CHECK(w == -1.0);
    for (double w : a.square.loops()) CHECK(w > 0);
    // different seed, different draw
    auto c = weights::assign_weights(weights::WeightModel::mixed(0.7, 43), 2);
    CHECK(c.square.loops() != a.square.loops());
}

TEST_CASE("iid model: dual weights are -X on edges, 1/X on loops") {
    auto dist = weights::DistSpec::two_point(2.0, 0.75);
    auto inst = weights::assign_weights(weights::WeightModel::iid(dist, 7), 12);
    int pos = 0, total = 0;
    for (double w : inst.square.right_edges()) {
        CHECK((w == -2.0 || w == 2.0));  // -X for X = +-2
        pos += w == -2.0;               // X positive gives edge weight -2
        ++total;
    }
    for (double w : inst.square.up_edges()) {
        CHECK((w == -2.0 || w == 2.0));
        pos += w == -2.0;
        ++total;
    }
    CHECK(std::fabs(double(pos) / total - 0.75) < 0.1);
    for (double w : inst.square.loops()) CHECK((w == 0.5 || w == -0.5));  // 1/X
    // hex edge weights are the raw draws
    for (double w : inst.hex.blues()) CHECK((w == 2.0 || w == -2.0));
}

TEST_CASE("declared log-moment expectations") {
    CHECK(weights::DistSpec::inverse_gamma(1.0).expected_log_abs() ==
          doctest::Approx(kEulerGamma).epsilon(1e-10));
    CHECK(weights::DistSpec::gamma(2.0).expected_log_abs() ==
          doctest::Approx(1 - kEulerGamma).epsilon(1e-10));
    CHECK(weights::DistSpec::lognormal(0.3, 1.0).expected_log_abs() == doctest::Approx(0.3));
    CHECK(weights::DistSpec::two_point(1.5, 0.5).expected_log_abs() ==
          doctest::Approx(std::log(1.5)));
    // E log(X) for Exp(1) is -EulerGamma; the boundary case is exposed, not rejected
    CHECK(weights::DistSpec::shifted_exponential(0.0).expected_log_abs() ==
          doctest::Approx(-kEulerGamma).epsilon(1e-5));
    CHECK(!weights::DistSpec::shifted_exponential(0.0).log_moment_condition_ok());
    CHECK(weights::DistSpec::inverse_gamma(1.0).log_moment_condition_ok());
}

TEST_CASE("model JSON round trip matches the documented shape") {
    auto m = weights::WeightModel::mixed(0.5, 99);
    auto m2 = weights::WeightModel::from_json(m.to_json());
    CHECK(m2.kind == weights::WeightModel::Kind::mixed);
    CHECK(m2.gamma == 0.5);
    CHECK(m2.seed == 99);

    auto i = weights::WeightModel::iid(weights::DistSpec::lognormal(0.1, 0.4), 5);
    auto i2 = weights::WeightModel::from_json(i.to_json());
    CHECK(i2.kind == weights::WeightModel::Kind::iid);
    CHECK(i2.dist.name == weights::DistSpec::Name::lognormal);
    CHECK(i2.dist.params == std::vector<double>{0.1, 0.4});

    CHECK(weights::WeightModel::from_json(R"({"model":"mixed","gamma":0.5,"seed":3})").gamma ==
          0.5);
    CHECK_THROWS(weights::WeightModel::from_json(R"({"model":"nope"})"));
}

TEST_CASE("invalid distributions are rejected") {
    CHECK_THROWS(weights::DistSpec::two_point(0.0, 0.5).validate());
    CHECK_THROWS(weights::DistSpec::gamma(-1.0).validate());
    CHECK_THROWS(weights::DistSpec::lognormal(0.0, 0.0).validate());
    CHECK_THROWS(weights::assign_weights(weights::WeightModel::mixed(-0.5, 1), 3));
}
