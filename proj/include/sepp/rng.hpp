#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace sepp {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// mt19937_64 engine with self-contained samplers. The standard pins the
/// engine's bit stream, and all variate transforms live here, so a fixed
/// seed reproduces identical draws on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    key_ = splitmix64(s);
    eng_.seed(key_);
  }

  /// Independent stream derived from this generator's seed and an id.
  /// Does not advance this generator.
  Rng substream(std::uint64_t id) const {
    return Rng(key_ ^ (0x632be59bd9b4e019ULL * (id + 1)));
  }

  std::uint64_t bits() { return eng_(); }

  /// Uniform on [0, 1).
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  /// Standard normal (Marsaglia polar, cached spare).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Exponential with the given mean.
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  /// Poisson count. Knuth's product method in chunks so the uniform budget
  /// stays O(mean) at any scale.
  std::uint64_t poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson: negative mean");
    if (mean == 0.0) return 0;
    std::uint64_t total = 0;
    double remaining = mean;
    while (remaining > 0.0) {
      double chunk = remaining > 30.0 ? 30.0 : remaining;
      remaining -= chunk;
      double limit = std::exp(-chunk);
      double prod = 1.0;
      std::uint64_t k = 0;
      for (;;) {
        prod *= uniform();
        if (prod <= limit) break;
        ++k;
      }
      total += k;
    }
    return total;
  }

  /// Gamma(shape, scale), Marsaglia–Tsang; shape < 1 boosted via U^{1/shape}.
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
      throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
      double u = uniform();
      while (u == 0.0) u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v * scale;
    }
  }

  double chi_squared(double dof) { return gamma(0.5 * dof, 2.0); }

 private:
  std::mt19937_64 eng_;
  std::uint64_t key_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sepp
