#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pld {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Compensated (Kahan) accumulator.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Halton low-discrepancy sequence, index starts at 1.
double halton(std::uint64_t index, std::uint32_t base);

// Point i (0-based) of an m-point Halton set in [0,1)^dim.
Vec halton_point(std::uint64_t index, int dim);

// Deterministic unit vectors on S^{d-1}; seed fixes the whole set.
std::vector<Vec> sample_unit_sphere(int dim, int count, std::uint64_t seed);

// Median-of-pairwise-slopes estimator; x strictly increasing.
double theil_sen_slope(std::span<const double> x, std::span<const double> y);

// FNV-1a 64-bit content hash, rendered as 16 hex chars.
std::uint64_t fnv1a64(std::span<const char> data);
std::string fnv1a64_hex(const std::string& data);

// Shortest-format round-trippable double, stable across runs.
std::string format_double(double v);

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace pld
