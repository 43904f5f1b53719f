#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hidden/hidden.hpp"

namespace testing_support {

using hidden::Point;
using hidden::Rational;

// Hand-rolled generators for property tests; every test seeds its own engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  Point<double> point(std::size_t d, double lo, double hi) {
    std::vector<double> c(d);
    for (auto& x : c) x = uniform(lo, hi);
    return Point<double>(std::move(c));
  }

  Point<double> unit(std::size_t d) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> c(d);
    for (auto& x : c) x = n(rng_);
    return hidden::normalized(Point<double>(std::move(c)));
  }

  // p / den with |p| <= span * den.
  Rational rational(long span, long den) { return Rational(integer(-span * den, span * den), den); }

  Point<Rational> rational_point(std::size_t d, long span, long den) {
    std::vector<Rational> c(d);
    for (auto& x : c) x = rational(span, den);
    return Point<Rational>(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline hidden::HPolytope<double> square() { return hidden::HPolytope<double>::box(2, 1.0); }
inline hidden::HPolytope<Rational> exact_square() { return hidden::HPolytope<Rational>::box(2, Rational(1)); }


}  // namespace testing_support
