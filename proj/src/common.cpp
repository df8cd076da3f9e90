#include "pld/common.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace pld {

double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

namespace {
constexpr std::array<std::uint32_t, 10> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
}

Vec halton_point(std::uint64_t index, int dim) {
  require(dim >= 1 && dim <= static_cast<int>(kPrimes.size()), "halton_point: dim out of range");
  Vec p(dim);
  for (int d = 0; d < dim; ++d) p[d] = halton(index + 1, kPrimes[static_cast<std::size_t>(d)]);
  return p;
}

std::vector<Vec> sample_unit_sphere(int dim, int count, std::uint64_t seed) {
  require(dim >= 1, "sample_unit_sphere: dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    Vec v(dim);
    for (int d = 0; d < dim; ++d) v[d] = gauss(rng);
    double nrm = v.norm();
    if (nrm < 1e-12) continue;
    out.push_back(v / nrm);
  }
  return out;
}

double theil_sen_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "theil_sen_slope: need >= 2 points");
  std::vector<double> slopes;
  slopes.reserve(x.size() * (x.size() - 1) / 2);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double dx = x[j] - x[i];
      if (std::abs(dx) < 1e-300) continue;
      slopes.push_back((y[j] - y[i]) / dx);
    }
  require(!slopes.empty(), "theil_sen_slope: degenerate abscissae");
  std::size_t mid = slopes.size() / 2;
  std::nth_element(slopes.begin(), slopes.begin() + static_cast<std::ptrdiff_t>(mid), slopes.end());
  double hi = slopes[mid];
  if (slopes.size() % 2 == 1) return hi;
  std::nth_element(slopes.begin(), slopes.begin() + static_cast<std::ptrdiff_t>(mid) - 1,
                   slopes.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (slopes[mid - 1] + hi);
}

std::uint64_t fnv1a64(std::span<const char> data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = fnv1a64(std::span<const char>(data.data(), data.size()));
  char buf[17];
  static const char* hexd = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hexd[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace pld
