#include "polymerlab/tw_cdf.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polymerlab/tw_table_data.hpp"

namespace polymerlab::fluctuations {

TWReference::TWReference(std::vector<double> x, std::vector<double> f)
    : x_(std::move(x)), f_(std::move(f)), version_(detail::kTWTableVersion) {
    if (x_.size() != f_.size() || x_.size() < 4)
        throw std::invalid_argument("reference table too small");
    for (size_t i = 1; i < x_.size(); ++i) {
        if (x_[i] <= x_[i - 1]) throw std::invalid_argument("table abscissae not increasing");
        if (f_[i] <= f_[i - 1]) throw std::invalid_argument("table values not increasing");
    }
    if (f_.front() < 0 || f_.back() > 1)
        throw std::invalid_argument("table values outside [0,1]");
    build_slopes();
}

TWReference::TWReference()
    : TWReference(std::vector<double>(detail::kTWTableX,
                                      detail::kTWTableX + detail::kTWTableSize),
                  std::vector<double>(detail::kTWTableF,
                                      detail::kTWTableF + detail::kTWTableSize)) {}

// Fritsch-Carlson monotone cubic slopes
void TWReference::build_slopes() {
    size_t n = x_.size();
    std::vector<double> h(n - 1), delta(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (f_[i + 1] - f_[i]) / h[i];
    }
    d_.assign(n, 0.0);
    d_[0] = delta[0];
    d_[n - 1] = delta[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0) {
            d_[i] = 0;
        } else {
            double w1 = 2 * h[i] + h[i - 1], w2 = h[i] + 2 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
}

double TWReference::cdf(double x) const {
    if (x <= x_.front()) return f_.front();
    if (x >= x_.back()) return f_.back();
    size_t hi = size_t(std::lower_bound(x_.begin(), x_.end(), x) - x_.begin());
    size_t lo = hi - 1;
    double h = x_[hi] - x_[lo];
    double t = (x - x_[lo]) / h;
    double t2 = t * t, t3 = t2 * t;
    double v = f_[lo] * (2 * t3 - 3 * t2 + 1) + h * d_[lo] * (t3 - 2 * t2 + t) +
               f_[hi] * (-2 * t3 + 3 * t2) + h * d_[hi] * (t3 - t2);
    return std::min(1.0, std::max(0.0, v));
}

TWReference TWReference::from_csv(const std::string& text) {
    std::vector<double> x, f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad table row: " + line);
        x.push_back(std::stod(line.substr(0, comma)));
        f.push_back(std::stod(line.substr(comma + 1)));
    }
    return TWReference(std::move(x), std::move(f));
}

const TWReference& TWReference::bundled() {
    static const TWReference* ref = [] {
        if (const char* path = std::getenv(kTWTableEnvVar)) {
            std::ifstream in(path);
            if (in) {
                std::ostringstream ss;
                ss << in.rdbuf();
                return new TWReference(TWReference::from_csv(ss.str()));
            }
        }
        return new TWReference();
    }();
    return *ref;
}

double tw_gue_cdf(double x) { return TWReference::bundled().cdf(x); }

}  // namespace polymerlab::fluctuations
