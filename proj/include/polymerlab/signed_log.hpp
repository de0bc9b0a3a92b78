#ifndef POLYMERLAB_SIGNED_LOG_HPP
#define POLYMERLAB_SIGNED_LOG_HPP

#include <cmath>
#include <limits>

namespace polymerlab {

// Real number stored as sign plus log of magnitude. Partition functions grow
// like exp(c*n), far past double range, and carry signs from odd permutations
// and negative weights, so both pieces are needed.
struct SignedLog {
    int sign = 0;  // -1, 0, +1
    double logmag = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
    }
    static SignedLog from_log(int sign, double logmag) {
        if (sign == 0 || (std::isinf(logmag) && logmag < 0)) return zero();
        return {sign, logmag};
    }

    bool is_zero() const { return sign == 0; }
    // overflows/underflows outside double range; use for small magnitudes only
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(logmag); }

    SignedLog negated() const { return {-sign, logmag}; }
};

inline SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return SignedLog::zero();
    return {a.sign * b.sign, a.logmag + b.logmag};
}

inline SignedLog operator*(const SignedLog& a, double v) { return a * SignedLog::from_value(v); }

// Signed log-sum-exp of two terms. Exactly opposite terms cancel to zero.
inline SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLog& hi = a.logmag >= b.logmag ? a : b;
    const SignedLog& lo = a.logmag >= b.logmag ? b : a;
    double d = lo.logmag - hi.logmag;  // <= 0
    if (a.sign == b.sign) return {a.sign, hi.logmag + std::log1p(std::exp(d))};
    if (d == 0.0) return SignedLog::zero();
    return {hi.sign, hi.logmag + std::log1p(-std::exp(d))};
}

inline SignedLog operator-(const SignedLog& a, const SignedLog& b) { return a + b.negated(); }

inline SignedLog& operator+=(SignedLog& a, const SignedLog& b) { return a = a + b; }
inline SignedLog& operator*=(SignedLog& a, const SignedLog& b) { return a = a * b; }

// Sum accumulator that remembers the largest term seen. A result much smaller
// than the largest term means the digits left are unreliable; callers get a
// warning flag instead of a silent zero.
class SignedLogSum {
  public:
    void add(const SignedLog& t) {
        if (t.sign != 0 && t.logmag > max_term_) max_term_ = t.logmag;
        total_ += t;
    }
    const SignedLog& total() const { return total_; }
    double max_term_logmag() const { return max_term_; }
    bool precision_warning() const {
        if (std::isinf(max_term_)) return false;
        // 1e-13 of the running max
        return total_.sign == 0 || total_.logmag < max_term_ - 29.9336;
    }

  private:
    SignedLog total_;
    double max_term_ = -std::numeric_limits<double>::infinity();
};

}  // namespace polymerlab

#endif
