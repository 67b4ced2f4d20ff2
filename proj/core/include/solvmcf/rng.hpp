#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace solvmcf {

/// splitmix64-based generator. Rolled by hand because the std:: distributions
/// are implementation-defined and reports must be byte-identical per seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0,1)
  double uniform01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// uniform magnitude in [lo,hi], random sign
  double signed_uniform(double lo, double hi) {
    double m = uniform(lo, hi);
    return (u64() & 1) ? m : -m;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = (static_cast<double>(u64() >> 11) + 0.5) * 0x1.0p-53;
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd normal_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  Eigen::VectorXd unit_vector(int n) {
    Eigen::VectorXd v = normal_vector(n);
    double nn = v.norm();
    while (nn < 1e-12) {
      v = normal_vector(n);
      nn = v.norm();
    }
    return v / nn;
  }

  Eigen::VectorXd uniform_vector(int n, double a, double b) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform(a, b);
    return v;
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace solvmcf
