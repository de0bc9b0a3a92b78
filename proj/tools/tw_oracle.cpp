#include "tw_oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace tw_oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAi0 = 0.355028053887817239260;    // Ai(0)
constexpr double kAip0 = -0.258819403792806798405;  // Ai'(0)

// Maclaurin series; safe up to |x| ~ 7 where the worst term magnification
// costs about three digits
void airy_series(double x, double& ai, double& aip) {
    double f = 1, fp = 0;     // sum of a_k x^{3k} and its derivative
    double g = x, gp = 1;     // sum of b_k x^{3k+1} and its derivative
    double a = 1, b = 1;
    double x3 = x * x * x;
    double xpow_f = 1;   // x^{3k}
    double xpow_g = x;   // x^{3k+1}
    for (int k = 1; k < 120; ++k) {
        a /= double(3 * k - 1) * (3 * k);
        b /= double(3 * k) * (3 * k + 1);
        xpow_f *= x3;
        xpow_g *= x3;
        double tf = a * xpow_f, tg = b * xpow_g;
        f += tf;
        g += tg;
        fp += a * (3 * k) * xpow_f / x;
        gp += b * (3 * k + 1) * xpow_g / x;
        if (std::fabs(tf) < 1e-20 * std::fabs(f) && std::fabs(tg) < 1e-20 * (std::fabs(g) + 1))
            break;
    }
    ai = kAi0 * f + kAip0 * g;
    aip = kAi0 * fp + kAip0 * gp;
    if (x == 0) {
        ai = kAi0;
        aip = kAip0;
    }
}

double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double fa,
                        double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = fn(lm), frm = fn(rm);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) < 15 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(fn, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(fn, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& fn, double a, double b, double tol) {
    double fa = fn(a), fb = fn(b), fm = fn(0.5 * (a + b));
    return adaptive_simpson(fn, a, b, fa, fm, fb, tol, 40);
}

// steepest-descent contour through the saddle: for x > 0,
//   Ai(x)  =  e^{-z}/pi * I0,   I0 = int_0^inf exp(-sqrt(x) t^2) cos(t^3/3) dt
//   Ai'(x) = -e^{-z}/pi * (I1 + sqrt(x) I0),  I1 = int t exp(-sqrt(x) t^2) sin(t^3/3) dt
// with z = (2/3) x^{3/2}
void airy_contour(double x, double& ai, double& aip) {
    double sx = std::sqrt(x);
    double zeta = 2.0 / 3.0 * x * sx;
    double tmax = std::sqrt(46.0 / sx);
    double i0 = integrate(
        [&](double t) { return std::exp(-sx * t * t) * std::cos(t * t * t / 3.0); }, 0, tmax,
        1e-14);
    double i1 = integrate(
        [&](double t) { return t * std::exp(-sx * t * t) * std::sin(t * t * t / 3.0); }, 0, tmax,
        1e-14);
    double damp = std::exp(-zeta);
    ai = damp / kPi * i0;
    aip = -damp / kPi * (i1 + sx * i0);
}

void airy_asymptotic(double x, double& ai, double& aip) {
    double sx = std::sqrt(x);
    double zeta = 2.0 / 3.0 * x * sx;
    double su = 1, sv = 1, u = 1;
    double sign = -1;
    for (int k = 1; k < 60; ++k) {
        u *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
        double v = -u * (6.0 * k + 1) / (6.0 * k - 1);
        double tu = sign * u / std::pow(zeta, k);
        double tv = sign * v / std::pow(zeta, k);
        if (std::fabs(tu) < 1e-19 && std::fabs(tv) < 1e-19) break;
        su += tu;
        sv += tv;
        sign = -sign;
    }
    double damp = std::exp(-zeta);
    double root = std::sqrt(kPi);
    ai = damp * su / (2 * root * std::pow(x, 0.25));
    aip = -damp * sv * std::pow(x, 0.25) / (2 * root);
}

}  // namespace

double airy_ai(double x) {
    double ai, aip;
    if (x <= 1.0) airy_series(x, ai, aip);
    else if (x < 9.0) airy_contour(x, ai, aip);
    else airy_asymptotic(x, ai, aip);
    return ai;
}

double airy_ai_prime(double x) {
    double ai, aip;
    if (x <= 1.0) airy_series(x, ai, aip);
    else if (x < 9.0) airy_contour(x, ai, aip);
    else airy_asymptotic(x, ai, aip);
    return aip;
}

Quadrature gauss_legendre_unit(int m) {
    Quadrature q;
    q.nodes.resize(m);
    q.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev initial guess on [-1,1]
        double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = t;
            for (int j = 2; j <= m; ++j) {
                double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (t * p1 - p0) / (t * t - 1);
            double step = p1 / dp;
            t -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        double p0 = 1, p1 = t;
        for (int j = 2; j <= m; ++j) {
            double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = m * (t * p1 - p0) / (t * t - 1);
        q.nodes[i] = 0.5 * (1 - t);  // descending t maps to ascending u
        q.weights[i] = 1.0 / ((1 - t * t) * dp * dp);
    }
    return q;
}

double tw_gue_cdf_fredholm(double s, int m) {
    static int cached_m = 0;
    static Quadrature q;
    if (cached_m != m) {
        q = gauss_legendre_unit(m);
        cached_m = m;
    }
    const double L = 8.0;  // rational map (s, inf) <- (0,1)

    std::vector<double> x(m), w(m), ai(m), aip(m);
    for (int i = 0; i < m; ++i) {
        double u = q.nodes[i];
        x[i] = s + L * u / (1 - u);
        w[i] = q.weights[i] * L / ((1 - u) * (1 - u));
        ai[i] = airy_ai(x[i]);
        aip[i] = airy_ai_prime(x[i]);
    }
    Eigen::MatrixXd K(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double kij;
            if (i == j) {
                kij = aip[i] * aip[i] - x[i] * ai[i] * ai[i];
            } else {
                kij = (ai[i] * aip[j] - aip[i] * ai[j]) / (x[i] - x[j]);
            }
            double v = std::sqrt(w[i] * w[j]) * kij;
            K(i, j) = v;
            K(j, i) = v;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    double det = 1;
    for (int i = 0; i < m; ++i) det *= 1.0 - es.eigenvalues()[i];
    return det;
}

Table generate_table(double lo, double hi, double step, int m) {
    Table t;
    int count = int(std::lround((hi - lo) / step)) + 1;
    for (int i = 0; i < count; ++i) {
        double s = lo + i * step;
        t.x.push_back(s);
        t.f.push_back(tw_gue_cdf_fredholm(s, m));
    }
    return t;
}

}  // namespace tw_oracle
