#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace hyperlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Binomial coefficient as a double; exact for the small n used here.
inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return std::round(result);
}

inline int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Neumaier compensated accumulator. Summation order is fixed by the caller,
// which keeps batch results bit-stable across thread counts.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Deterministic uniform doubles from raw mt19937_64 bits. Avoids
// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  std::uint64_t bits() { return gen_(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

// Geometric sum 1 + q + ... + q^{n-1}, stable through q = 1.
inline double geometric_sum(double q, int n) {
  double s = 0.0, p = 1.0;
  for (int i = 0; i < n; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

}  // namespace hyperlab
