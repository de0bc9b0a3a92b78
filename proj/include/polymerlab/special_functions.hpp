#ifndef POLYMERLAB_SPECIAL_FUNCTIONS_HPP
#define POLYMERLAB_SPECIAL_FUNCTIONS_HPP

namespace polymerlab::weights {

// Digamma and its first two derivatives, >= 10 significant digits on x > 0.
// Recurrence shifts the argument above 10, then the asymptotic expansion in
// Bernoulli numbers takes over.
double polygamma(int order, double x);

// Unique positive root of the digamma function, 1.4616321449...
double gamma_star();

struct ScalingConstants {
    double gamma = 0;
    double f_bar = 0;    // -2 psi(gamma/2); free-energy rate
    double g_bar = 0;    // -2 psi''(gamma/2); fluctuation scale
    double gamma_star = 0;
    bool above_gamma_star = false;  // hypothesis gamma < gamma* violated
};

ScalingConstants scaling_constants(double gamma);

}  // namespace polymerlab::weights

#endif
