#pragma once

#include <random>
#include <string>
#include <vector>

#include "hidden/capacity.hpp"
#include "hidden/simplex_body.hpp"

namespace hidden {

/// Position of sum(x) relative to 1.
enum class SigmaClass { sigma_less, sigma_one, sigma_greater };

inline std::string_view to_string(SigmaClass c) {
  switch (c) {
    case SigmaClass::sigma_less: return "SigmaLess";
    case SigmaClass::sigma_one: return "SigmaOne";
    case SigmaClass::sigma_greater: return "SigmaGreater";
  }
  return "?";
}

/// Decimal reading of floating-point input, so (0.7, 0.3) sums to exactly 1.
inline Point<Rational> decimal_point(const Point<double>& p) {
  std::vector<Rational> c;
  for (double v : p.coords()) c.push_back(rational_from_decimal_double(v));
  return Point<Rational>(std::move(c));
}

inline SigmaClass sigma_classify(const Point<Rational>& p) {
  int s = sign(Rational(detail::coordinate_sum(p) - Rational(1)), 0.0);
  return s < 0 ? SigmaClass::sigma_less : (s == 0 ? SigmaClass::sigma_one : SigmaClass::sigma_greater);
}
inline SigmaClass sigma_classify(const Point<double>& p) { return sigma_classify(decimal_point(p)); }

/// Indices of the positive and of the negative coordinates.
struct SupportPair {
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};

inline SupportPair supports(const Point<Rational>& p) {
  SupportPair out;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] > 0) out.positive.push_back(i);
    else if (p[i] < 0) out.negative.push_back(i);
  }
  return out;
}
inline SupportPair supports(const Point<double>& p) { return supports(decimal_point(p)); }

inline bool in_simplex(const Point<Rational>& p) {
  return sigma_classify(p) == SigmaClass::sigma_one && supports(p).negative.empty();
}

inline bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Whether [p, q] meets the simplex, for p and q both with coordinate sum below 1 (never true).
inline bool check_sigma_less_exclusion(const Point<Rational>& p, const Point<Rational>& q) {
  require_same_dim(p.dim(), q.dim());
  if (sigma_classify(p) != SigmaClass::sigma_less || sigma_classify(q) != SigmaClass::sigma_less)
    throw Error("both points must have coordinate sum below 1");
  return segment_hits(SimplexBody(p.dim()), p, q, SegmentMode::closed, 0.0);
}

/// For a != b on the hyperplane sum = 1 but outside the simplex: [a, b] meets the simplex
/// only if the negative support of a lies in the positive support of b (always true).
inline bool check_support_necessity(const Point<Rational>& a, const Point<Rational>& b) {
  require_same_dim(a.dim(), b.dim());
  if (a == b) throw Error("points must be distinct");
  for (const auto* p : {&a, &b})
    if (sigma_classify(*p) != SigmaClass::sigma_one || in_simplex(*p))
      throw Error("points must have coordinate sum 1 and lie outside the simplex");
  const bool meets = segment_hits(SimplexBody(a.dim()), a, b, SegmentMode::closed, 0.0);
  return !meets || is_subset(supports(a).negative, supports(b).positive);
}

namespace detail {

// Small-denominator rationals for the lab's random clouds.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational uniform(int lo, int hi) {
    const int q = std::uniform_int_distribution<int>(1, 12)(rng_);
    const int k = std::uniform_int_distribution<int>(lo * q, hi * q)(rng_);
    return Rational(k, q);
  }
  Rational positive_small() { return Rational(std::uniform_int_distribution<int>(1, 12)(rng_), 12); }

  Point<Rational> box(std::size_t d, int lo, int hi) {
    std::vector<Rational> c(d);
    for (auto& v : c) v = uniform(lo, hi);
    return Point<Rational>(std::move(c));
  }

  Point<Rational> sigma_less(std::size_t d) {
    std::vector<Rational> c = box(d, -1, 1).vec();
    Rational s = coordinate_sum(Point<Rational>(c));
    if (s >= 1) c[0] -= s - 1 + positive_small();
    return Point<Rational>(std::move(c));
  }
  Point<Rational> sigma_greater(std::size_t d) {
    std::vector<Rational> c = box(d, 0, 2).vec();
    Rational s = coordinate_sum(Point<Rational>(c));
    if (s <= 1) c[0] += 1 - s + positive_small();
    return Point<Rational>(std::move(c));
  }
  // On the hyperplane sum = 1 but outside the simplex (needs d >= 2).
  Point<Rational> sigma_one_outside(std::size_t d) {
    std::vector<Rational> c = box(d, -1, 2).vec();
    auto fix_last = [&] {
      Rational s(0);
      for (std::size_t i = 0; i + 1 < d; ++i) s += c[i];
      c[d - 1] = 1 - s;
    };
    fix_last();
    if (in_simplex(Point<Rational>(c))) {
      c[0] = -positive_small();
      fix_last();
    }
    return Point<Rational>(std::move(c));
  }

  // A point b on the ray from a through a random simplex point c, far enough
  // out to leave the simplex; [a, b] then meets the simplex at c.
  Point<Rational> through_simplex(const Point<Rational>& a) {
    const std::size_t d = a.dim();
    std::vector<Rational> w(d);
    Rational s(0);
    for (auto& v : w) {
      v = Rational(std::uniform_int_distribution<int>(0, 6)(rng_));
      s += v;
    }
    if (s == 0) {
      w[0] = 1;
      s = 1;
    }
    for (auto& v : w) v /= s;
    const Point<Rational> c(std::move(w));
    Rational lambda = positive_small();
    Point<Rational> b = c + lambda * (c - a);
    while (in_simplex(b)) {
      lambda *= 2;
      b = c + lambda * (c - a);
    }
    return b;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

struct FalsifierReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::size_t exclusion_pairs = 0;
  std::size_t exclusion_violations = 0;
  std::size_t necessity_pairs = 0;
  std::size_t necessity_meeting = 0;  // pairs whose segment met the simplex
  std::size_t necessity_violations = 0;
  std::size_t negative_support_points = 0;
  std::size_t negative_support_violations = 0;
  std::vector<std::string> violations;  // replay data: trial index and points

  std::size_t total_violations() const {
    return exclusion_violations + necessity_violations + negative_support_violations;
  }
};

/// Runs the three proof-step falsifiers on random rational data; trial i uses seed + i.
inline FalsifierReport simplex_falsifiers(std::size_t d, std::size_t trials, std::uint64_t seed,
                                          unsigned threads = 1) {
  if (d < 2 || d > kMaxDimension) throw Error("falsifiers need 2 <= d <= 64");
  struct Trial {
    bool exclusion_hit = false, meets = false, necessity_ok = true, negative_ok = true;
    std::string log;
  };
  std::vector<Trial> results(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    detail::RationalSampler rs(seed + i);
    Trial& t = results[i];
    auto p = rs.sigma_less(d), q = rs.sigma_less(d);
    t.exclusion_hit = check_sigma_less_exclusion(p, q);
    auto a = rs.sigma_one_outside(d), b = rs.sigma_one_outside(d);
    if (i % 2 == 1) b = rs.through_simplex(a);
    if (a == b) b = rs.sigma_one_outside(d);
    t.negative_ok = !supports(a).negative.empty() && !supports(b).negative.empty();
    if (!(a == b)) {
      t.meets = segment_hits(SimplexBody(d), a, b, SegmentMode::closed, 0.0);
      t.necessity_ok = check_support_necessity(a, b);
    }
    if (t.exclusion_hit || !t.necessity_ok || !t.negative_ok) {
      auto show = [](const Point<Rational>& x) {
        std::string s = "(";
        for (std::size_t k = 0; k < x.dim(); ++k) s += (k ? ", " : "") + to_string(x[k]);
        return s + ")";
      };
      t.log = "trial " + std::to_string(i) + ": p=" + show(p) + " q=" + show(q) + " a=" + show(a) + " b=" + show(b);
    }
  });
  FalsifierReport r;
  r.dim = d;
  r.trials = trials;
  for (const auto& t : results) {
    ++r.exclusion_pairs;
    r.exclusion_violations += t.exclusion_hit;
    ++r.necessity_pairs;
    r.necessity_meeting += t.meets;
    r.necessity_violations += !t.necessity_ok;
    r.negative_support_points += 2;
    r.negative_support_violations += !t.negative_ok;
    if (!t.log.empty()) r.violations.push_back(t.log);
  }
  return r;
}

struct SimplexCapacityReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  CapacityBound bound;
  HiddenSetCertificate<Rational> best_found;
  std::size_t max_outside_aff = 0;  // largest count of off-hyperplane points in any certificate
  std::size_t max_in_aff = 0;
  std::size_t candidates_less = 0, candidates_one = 0, candidates_greater = 0;
  std::vector<std::size_t> size_histogram;  // size_histogram[k] = trials whose best set had k points
  std::size_t violations = 0;
  std::vector<std::string> violation_log;
};

/**
 * Random clouds stratified over sum < 1, sum = 1 (outside the simplex) and
 * sum > 1, searched exactly for a largest hidden subset. Every certificate is
 * checked against the invariants of the simplex: at most one point on each
 * side of the hyperplane, at most d on it, pairwise distinct negative
 * supports with supp-(a) inside supp+(b), and the pigeonhole bound.
 */
inline SimplexCapacityReport simplex_hidden_capacity(std::size_t d, std::size_t trials, std::uint64_t seed,
                                                     std::size_t per_class = 4, unsigned threads = 1) {
  if (d < 2 || d > 4) throw Error("simplex capacity lab needs 2 <= d <= 4");
  SimplexCapacityReport rep;
  rep.dim = d;
  rep.trials = trials;
  rep.bound = capacity_upper_bound(SimplexBody(d));
  rep.size_histogram.assign(rep.bound.total + 2, 0);
  const SimplexBody body(d);
  struct Trial {
    HiddenSetCertificate<Rational> cert;
    std::size_t outside_aff = 0, in_aff = 0;
    std::vector<std::string> problems;
  };
  std::vector<Trial> results(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    detail::RationalSampler rs(seed + i);
    std::vector<Point<Rational>> cloud;
    for (std::size_t k = 0; k < per_class; ++k) {
      cloud.push_back(rs.sigma_less(d));
      cloud.push_back(rs.sigma_one_outside(d));
      cloud.push_back(rs.sigma_greater(d));
    }
    std::sort(cloud.begin(), cloud.end());
    cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());
    Trial& t = results[i];
    SearchOptions opt;
    opt.exact_limit = 256;
    t.cert = max_hidden_subset(body, cloud, opt);
    std::size_t less = 0, greater = 0;
    std::vector<Point<Rational>> on;
    for (const auto& p : t.cert.points) {
      switch (sigma_classify(p)) {
        case SigmaClass::sigma_less: ++less; break;
        case SigmaClass::sigma_greater: ++greater; break;
        case SigmaClass::sigma_one: on.push_back(p); break;
      }
    }
    t.outside_aff = less + greater;
    t.in_aff = on.size();
    auto fail = [&](const std::string& what) { t.problems.push_back("trial " + std::to_string(i) + ": " + what); };
    if (less > 1) fail("two hidden points with sum < 1");
    if (greater > 1) fail("two hidden points with sum > 1");
    if (t.in_aff > rep.bound.in_aff) fail("more hidden points on the hyperplane than facets");
    if (t.cert.size() > rep.bound.total) fail("pigeonhole bound exceeded");
    for (std::size_t a = 0; a < on.size(); ++a)
      for (std::size_t b = 0; b < on.size(); ++b) {
        if (a == b) continue;
        auto sa = supports(on[a]), sb = supports(on[b]);
        if (sa.negative == sb.negative) fail("two hidden points share a negative support");
        if (!is_subset(sa.negative, sb.positive)) fail("negative support not covered by positive support");
      }
    if (!verify_certificate(body, t.cert, 0.0)) fail("certificate failed re-verification");
  });
  for (std::size_t i = 0; i < trials; ++i) {
    auto& t = results[i];
    rep.candidates_less += per_class;
    rep.candidates_one += per_class;
    rep.candidates_greater += per_class;
    rep.max_outside_aff = std::max(rep.max_outside_aff, t.outside_aff);
    rep.max_in_aff = std::max(rep.max_in_aff, t.in_aff);
    rep.size_histogram[std::min(t.cert.size(), rep.size_histogram.size() - 1)]++;
    rep.violations += t.problems.size();
    for (auto& s : t.problems) rep.violation_log.push_back(std::move(s));
    if (t.cert.size() > rep.best_found.size()) rep.best_found = std::move(t.cert);
  }
  return rep;
}

}  // namespace hidden
