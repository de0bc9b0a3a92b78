#ifndef POLYMERLAB_TW_CDF_HPP
#define POLYMERLAB_TW_CDF_HPP

#include <string>
#include <vector>

namespace polymerlab::fluctuations {

// Frozen reference grid of the GUE Tracy-Widom distribution function on
// [-6, 4], evaluated offline by the Fredholm-determinant generator in
// tools/ and checked against published anchor values before being embedded.
// Lookup interpolates with a monotone cubic; the tails are clamped.
class TWReference {
  public:
    // embedded table
    TWReference();
    // external table: CSV rows "x,F" (header allowed)
    static TWReference from_csv(const std::string& text);
    // bundled table unless the environment override names a CSV file
    static const TWReference& bundled();

    double cdf(double x) const;
    const std::vector<double>& grid_x() const { return x_; }
    const std::vector<double>& grid_f() const { return f_; }
    int schema_version() const { return version_; }

  private:
    TWReference(std::vector<double> x, std::vector<double> f);
    void build_slopes();
    std::vector<double> x_, f_, d_;  // nodes, values, node derivatives
    int version_ = 0;
};

double tw_gue_cdf(double x);

inline constexpr const char* kTWTableEnvVar = "POLYMERLAB_DATA";

}  // namespace polymerlab::fluctuations

#endif
