#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>

#include "hidden/error.hpp"

namespace hidden {

/// Exact rational number (GMP-backed).
using Rational = boost::multiprecision::mpq_rational;

/// Default float-mode tolerance for membership and hit decisions.
inline constexpr double kDefaultTol = 1e-9;

/// Pivot tolerance for floating-point rank decisions.
inline constexpr double kPivotTol = 1e-9;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static double default_tol() { return kDefaultTol; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_double(double x) { return Rational(x); }
  static double default_tol() { return 0.0; }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <Scalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
T from_double(double x) {
  return ScalarTraits<T>::from_double(x);
}

template <Scalar T>
double default_tol() {
  return ScalarTraits<T>::default_tol();
}

/// Sign of x, treating |x| <= tol as zero. Exact scalars ignore tol.
template <Scalar T>
int sign(const T& x, double tol) {
  if constexpr (is_exact_v<T>) {
    (void)tol;
    return x.sign();
  } else {
    if (x > tol) return 1;
    if (x < -tol) return -1;
    return 0;
  }
}

template <Scalar T>
bool is_zero(const T& x, double tol) {
  return sign(x, tol) == 0;
}

template <Scalar T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Exact mode accepts only tol == 0; float mode needs a finite tol >= 0.
template <Scalar T>
void check_tolerance(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw Error("tolerance must be finite and >= 0");
  if constexpr (is_exact_v<T>) {
    if (tol != 0.0) throw Error("exact mode requires tol = 0");
  }
}

namespace detail {

inline Rational parse_decimal(std::string_view s) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa.push_back(s[i]);
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa.push_back(s[i]);
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) throw Error("malformed number: '" + std::string(s) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    long e = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), e);
    if (ec != std::errc() || ptr == s.data() + i) throw Error("malformed exponent: '" + std::string(s) + "'");
    i = static_cast<std::size_t>(ptr - s.data());
    exponent += e;
  }
  if (i != s.size()) throw Error("malformed number: '" + std::string(s) + "'");
  if (exponent > 4000 || exponent < -4000) throw Error("exponent out of range: '" + std::string(s) + "'");
  // mpz reads a leading zero as an octal prefix.
  const auto first = mantissa.find_first_not_of('0');
  mantissa = first == std::string::npos ? "0" : mantissa.substr(first);
  boost::multiprecision::mpz_int num(mantissa);
  boost::multiprecision::mpz_int scale = boost::multiprecision::pow(boost::multiprecision::mpz_int(10),
                                                                    static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  return negative ? Rational(-r) : r;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal into an exact rational.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("empty number");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return detail::parse_decimal(text);
  Rational p = detail::parse_decimal(text.substr(0, slash));
  Rational q = detail::parse_decimal(text.substr(slash + 1));
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return p / q;
}

/// Rational with the value of the shortest decimal that round-trips to x.
/// 0.1 becomes 1/10 rather than the binary expansion of the double.
inline Rational rational_from_decimal_double(double x) {
  if (!std::isfinite(x)) throw Error("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error("cannot format number");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

/// "p/q" text, or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hidden
