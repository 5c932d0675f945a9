//
// Project     : mint
// Module      : rng
// Description : self-contained splitmix64 generator; avoids the
//               implementation-defined std:: distributions so that seeded
//               runs reproduce bit-for-bit
//
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace mint {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() noexcept { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) noexcept { return a + (b - a) * uniform(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + std::int64_t(next_u64() % std::uint64_t(hi - lo + 1));
  }

  // Complex standard normal via Box-Muller.
  std::complex<double> gaussian() noexcept {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  std::complex<double> unit_disk() noexcept {
    for (;;) {
      const double x = uniform(-1.0, 1.0);
      const double y = uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {x, y};
    }
  }

  // Derives an independent stream, e.g. one per search restart.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
    Rng r(a ^ (0x632be59bd9b4e019ULL + (b << 1)));
    r.next_u64();
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace mint
