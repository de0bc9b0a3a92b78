#ifndef POLYMERLAB_TW_ORACLE_HPP
#define POLYMERLAB_TW_ORACLE_HPP

#include <utility>
#include <vector>

// Offline oracle for the GUE Tracy-Widom distribution: Airy kernel Fredholm
// determinant evaluated by Nystrom quadrature. Used to generate and audit the
// frozen reference table; never on the acceptance path.
namespace tw_oracle {

// Ai and Ai' to ~1e-11 relative accuracy on [-7, inf); series near zero,
// a saddle-point contour integral in the awkward middle range, asymptotic
// expansion beyond.
double airy_ai(double x);
double airy_ai_prime(double x);

struct Quadrature {
    std::vector<double> nodes;    // on (0,1)
    std::vector<double> weights;
};

Quadrature gauss_legendre_unit(int m);

// F_2(s) with an m-point rule
double tw_gue_cdf_fredholm(double s, int m = 80);

struct Table {
    std::vector<double> x;
    std::vector<double> f;
};

Table generate_table(double lo, double hi, double step, int m = 80);

}  // namespace tw_oracle

#endif
