#include "polymerlab/weights.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace polymerlab::weights {

namespace {

// stream salts: one namespace per role so adding roles never shifts draws
enum class Salt : uint64_t { site = 1, red_right = 2, red_up = 3 };

rng::Stream site_stream(uint64_t seed, Salt salt, int index) {
    return rng::Stream(rng::derive_key(seed, uint64_t(salt), uint64_t(index)));
}

double expected_log_shifted_exponential(double shift) {
    // E log(shift + X), X ~ Exp(1); at shift 0 this is psi(1)
    if (shift == 0.0) return polygamma(0, 1.0);
    const int steps = 4000;
    const double hi = 60.0;
    double h = hi / steps;
    auto f = [&](double x) { return std::log(shift + x) * std::exp(-x); };
    double sum = f(0) + f(hi);
    for (int i = 1; i < steps; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

void DistSpec::validate() const {
    switch (name) {
        case Name::inverse_gamma:
        case Name::gamma:
            if (params.size() != 1 || params[0] <= 0)
                throw std::invalid_argument("gamma-family distribution needs shape > 0");
            return;
        case Name::lognormal:
            if (params.size() != 2 || params[1] <= 0)
                throw std::invalid_argument("lognormal needs (mu, sigma > 0)");
            return;
        case Name::shifted_exponential:
            if (params.size() != 1 || params[0] < 0)
                throw std::invalid_argument("shifted exponential needs shift >= 0");
            return;
        case Name::two_point:
            if (params.size() != 2 || params[0] == 0 || params[1] < 0 || params[1] > 1)
                throw std::invalid_argument("two-point needs (a != 0, p in [0,1])");
            return;
    }
    throw std::invalid_argument("unknown distribution");
}

double DistSpec::expected_log_abs() const {
    switch (name) {
        case Name::inverse_gamma: return -polygamma(0, params[0]);
        case Name::gamma: return polygamma(0, params[0]);
        case Name::lognormal: return params[0];
        case Name::shifted_exponential: return expected_log_shifted_exponential(params[0]);
        case Name::two_point: return std::log(std::fabs(params[0]));
    }
    return 0;
}

double DistSpec::sample(rng::Stream& s) const {
    switch (name) {
        case Name::inverse_gamma: return 1.0 / s.next_gamma(params[0]);
        case Name::gamma: return s.next_gamma(params[0]);
        case Name::lognormal: return std::exp(params[0] + params[1] * s.next_normal());
        case Name::shifted_exponential: return params[0] - std::log(s.next_unit());
        case Name::two_point: return s.next_unit() < params[1] ? params[0] : -params[0];
    }
    return 0;
}

std::string DistSpec::name_string() const {
    switch (name) {
        case Name::inverse_gamma: return "inverse_gamma";
        case Name::gamma: return "gamma";
        case Name::lognormal: return "lognormal";
        case Name::shifted_exponential: return "shifted_exponential";
        case Name::two_point: return "two_point";
    }
    return "?";
}

void WeightModel::validate() const {
    if (kind == Kind::mixed) {
        if (gamma <= 0) throw std::invalid_argument("mixed model needs gamma > 0");
    } else {
        dist.validate();
    }
}

std::string WeightModel::to_json() const {
    nlohmann::json j;
    if (kind == Kind::mixed) {
        j["model"] = "mixed";
        j["gamma"] = gamma;
    } else {
        j["model"] = "iid";
        j["dist"] = {{"name", dist.name_string()}, {"params", dist.params}};
    }
    j["seed"] = seed;
    return j.dump();
}

WeightModel WeightModel::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    WeightModel m;
    std::string kind = j.at("model").get<std::string>();
    m.seed = j.value("seed", uint64_t(0));
    if (kind == "mixed") {
        m.kind = Kind::mixed;
        m.gamma = j.at("gamma").get<double>();
    } else if (kind == "iid") {
        m.kind = Kind::iid;
        auto d = j.at("dist");
        std::string name = d.at("name").get<std::string>();
        m.dist.params = d.at("params").get<std::vector<double>>();
        if (name == "inverse_gamma") m.dist.name = DistSpec::Name::inverse_gamma;
        else if (name == "gamma") m.dist.name = DistSpec::Name::gamma;
        else if (name == "lognormal") m.dist.name = DistSpec::Name::lognormal;
        else if (name == "shifted_exponential") m.dist.name = DistSpec::Name::shifted_exponential;
        else if (name == "two_point") m.dist.name = DistSpec::Name::two_point;
        else throw std::invalid_argument("unknown distribution name: " + name);
    } else {
        throw std::invalid_argument("model must be \"mixed\" or \"iid\"");
    }
    m.validate();
    return m;
}

double sample_inverse_gamma(double gamma, rng::Stream& stream) {
    if (gamma <= 0) throw std::domain_error("inverse gamma needs shape > 0");
    return stream.next_inverse_gamma(gamma);
}

WeightedInstance assign_weights(const WeightModel& model, int n) {
    model.validate();
    if (n < 1) throw std::invalid_argument("lattice side must be >= 1");
    size_t sites = size_t(n) * n;
    size_t hedges = size_t(n) * (n - 1);

    if (model.kind == WeightModel::Kind::mixed) {
        // matching edges ~ Gamma(gamma,1); dual loops are their reciprocals
        std::vector<double> diag(sites);
        for (size_t i = 0; i < sites; ++i) {
            auto s = site_stream(model.seed, Salt::site, int(i));
            diag[i] = s.next_gamma(model.gamma);
        }
        std::vector<double> right(hedges, -1.0), up(hedges, -1.0);
        lattice::SquareLattice sq =
            lattice::square_from_diag(n, std::move(diag), std::move(right), std::move(up));
        lattice::HexLattice hex = lattice::build_hex_from_square(sq);
        return {std::move(sq), std::move(hex)};
    }

    std::vector<double> blue(sites), rr(hedges), ru(hedges);
    for (size_t i = 0; i < sites; ++i) {
        auto s = site_stream(model.seed, Salt::site, int(i));
        blue[i] = model.dist.sample(s);
    }
    for (size_t i = 0; i < hedges; ++i) {
        auto s = site_stream(model.seed, Salt::red_right, int(i));
        rr[i] = model.dist.sample(s);
    }
    for (size_t i = 0; i < hedges; ++i) {
        auto s = site_stream(model.seed, Salt::red_up, int(i));
        ru[i] = model.dist.sample(s);
    }
    lattice::HexLattice hex(n, std::move(blue), std::move(rr), std::move(ru));
    lattice::SquareLattice sq = lattice::build_square_from_hex(hex);
    return {std::move(sq), std::move(hex)};
}

}  // namespace polymerlab::weights
