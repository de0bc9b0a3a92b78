#ifndef POLYMERLAB_WEIGHTS_HPP
#define POLYMERLAB_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polymerlab/lattice.hpp"
#include "polymerlab/rng.hpp"
#include "polymerlab/special_functions.hpp"

namespace polymerlab::weights {

// Edge weight distribution for the i.i.d. model. Sampled values must be
// nonzero almost surely; exp_log_weight flags whether E log|X| >= 0 holds,
// the regime the fluctuation results need.
struct DistSpec {
    enum class Name { inverse_gamma, gamma, lognormal, shifted_exponential, two_point };

    Name name = Name::lognormal;
    std::vector<double> params;

    static DistSpec inverse_gamma(double shape) { return {Name::inverse_gamma, {shape}}; }
    static DistSpec gamma(double shape) { return {Name::gamma, {shape}}; }
    static DistSpec lognormal(double mu, double sigma) { return {Name::lognormal, {mu, sigma}}; }
    static DistSpec shifted_exponential(double shift) {
        return {Name::shifted_exponential, {shift}};
    }
    // +a with probability p, -a otherwise
    static DistSpec two_point(double a, double p) { return {Name::two_point, {a, p}}; }

    void validate() const;
    double expected_log_abs() const;
    bool log_moment_condition_ok() const { return expected_log_abs() >= 0.0; }
    double sample(rng::Stream& stream) const;
    std::string name_string() const;
};

struct WeightModel {
    enum class Kind { mixed, iid };

    Kind kind = Kind::mixed;
    double gamma = 1.0;  // mixed model parameter
    DistSpec dist;       // iid model distribution
    uint64_t seed = 0;

    static WeightModel mixed(double gamma, uint64_t seed) {
        WeightModel m;
        m.kind = Kind::mixed;
        m.gamma = gamma;
        m.seed = seed;
        return m;
    }
    static WeightModel iid(DistSpec dist, uint64_t seed) {
        WeightModel m;
        m.kind = Kind::iid;
        m.dist = std::move(dist);
        m.seed = seed;
        return m;
    }

    void validate() const;
    std::string to_json() const;
    static WeightModel from_json(const std::string& text);
};

// A sampled disorder realization, kept in both dual forms.
struct WeightedInstance {
    lattice::SquareLattice square;
    lattice::HexLattice hex;
};

// Mixed model: matching weights drawn from Gamma(gamma,1), every other hex
// edge weight 1; the dual square lattice then has inverse-Gamma loops and all
// edge weights -1. Iid model: every hex edge weight drawn from dist.
// Sampling is a pure function of (seed, site), independent of thread order.
WeightedInstance assign_weights(const WeightModel& model, int n);

double sample_inverse_gamma(double gamma, rng::Stream& stream);

}  // namespace polymerlab::weights

#endif
