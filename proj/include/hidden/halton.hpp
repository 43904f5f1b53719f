#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/special_functions/erf.hpp>

#include "hidden/point.hpp"

namespace hidden {

inline double radical_inverse(std::uint64_t base, std::uint64_t i) {
  double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

/**
 * Reproducible unit directions: a Halton sequence with a Cranley-Patterson
 * rotation drawn from the seed. In the plane the first coordinate is used as
 * an angle; in higher dimensions each coordinate goes through the normal
 * quantile and the result is normalized, which is uniform on the sphere.
 */
class DirectionStream {
 public:
  DirectionStream(std::size_t d, std::uint64_t seed) : d_(d) {
    check_dimension(d);
    if (d > kPrimes.size()) throw Error("direction stream supports at most 64 dimensions");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    shift_.resize(d);
    for (auto& s : shift_) s = u(rng);
  }

  std::size_t dim() const { return d_; }

  double coordinate(std::size_t k, std::uint64_t index) const {
    double v = radical_inverse(kPrimes[k], index + 1) + shift_[k];
    return v - std::floor(v);
  }

  Point<double> operator()(std::uint64_t index) const {
    if (d_ == 1) return Point<double>{coordinate(0, index) < 0.5 ? -1.0 : 1.0};
    if (d_ == 2) {
      double theta = 2.0 * std::numbers::pi * coordinate(0, index);
      return Point<double>{std::cos(theta), std::sin(theta)};
    }
    std::vector<double> z(d_);
    for (std::size_t k = 0; k < d_; ++k) {
      double u = std::clamp(coordinate(k, index), 1e-12, 1.0 - 1e-12);
      z[k] = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
    }
    Point<double> p(std::move(z));
    double n = norm(p);
    if (n == 0.0) return Point<double>::unit(d_, 0);
    return p / n;
  }

 private:
  static constexpr std::array<std::uint64_t, 64> kPrimes = {
      2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,  67,  71,  73,  79,
      83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
      197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

  std::size_t d_;
  std::vector<double> shift_;
};

}  // namespace hidden
