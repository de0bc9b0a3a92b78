#include "polymerlab/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace polymerlab::weights {

namespace {

// B_2, B_4, ..., B_16
constexpr double kBernoulli[] = {1.0 / 6,  -1.0 / 30,  1.0 / 42,      -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

double digamma_asymptotic(double x) {
    // psi(x) ~ ln x - 1/(2x) - sum B_2j / (2j x^2j)
    double inv2 = 1.0 / (x * x);
    double term = inv2;
    double sum = 0;
    for (int j = 0; j < 8; ++j) {
        sum += kBernoulli[j] * term / (2 * (j + 1));
        term *= inv2;
    }
    return std::log(x) - 0.5 / x - sum;
}

double trigamma_asymptotic(double x) {
    // psi'(x) ~ 1/x + 1/(2x^2) + sum B_2j / x^(2j+1)
    double inv2 = 1.0 / (x * x);
    double term = inv2 / x;
    double sum = 0;
    for (int j = 0; j < 8; ++j) {
        sum += kBernoulli[j] * term;
        term *= inv2;
    }
    return 1.0 / x + 0.5 * inv2 + sum;
}

double tetragamma_asymptotic(double x) {
    // psi''(x) ~ -1/x^2 - 1/x^3 - sum B_2j (2j+1) / x^(2j+2)
    double inv2 = 1.0 / (x * x);
    double term = inv2 * inv2;
    double sum = 0;
    for (int j = 0; j < 8; ++j) {
        sum += kBernoulli[j] * (2 * j + 3) * term;
        term *= inv2;
    }
    return -inv2 - inv2 / x - sum;
}

}  // namespace

double polygamma(int order, double x) {
    if (x <= 0) throw std::domain_error("polygamma requires x > 0");
    if (order < 0 || order > 2) throw std::domain_error("polygamma order must be 0, 1 or 2");
    double shift = 0;
    double y = x;
    while (y < 10.0) {
        switch (order) {
            case 0: shift -= 1.0 / y; break;
            case 1: shift += 1.0 / (y * y); break;
            case 2: shift -= 2.0 / (y * y * y); break;
        }
        y += 1.0;
    }
    switch (order) {
        case 0: return digamma_asymptotic(y) + shift;
        case 1: return trigamma_asymptotic(y) + shift;
        default: return tetragamma_asymptotic(y) + shift;
    }
}

double gamma_star() {
    // psi(1) < 0 < psi(2); bisect then polish with Newton
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        (polygamma(0, mid) < 0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 6; ++i) x -= polygamma(0, x) / polygamma(1, x);
    return x;
}

ScalingConstants scaling_constants(double gamma) {
    if (gamma <= 0) throw std::domain_error("gamma must be positive");
    ScalingConstants c;
    c.gamma = gamma;
    c.f_bar = -2.0 * polygamma(0, gamma / 2);
    c.g_bar = -2.0 * polygamma(2, gamma / 2);
    c.gamma_star = gamma_star();
    c.above_gamma_star = gamma >= c.gamma_star;
    return c;
}

}  // namespace polymerlab::weights
