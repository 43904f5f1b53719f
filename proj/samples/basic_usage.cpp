// Hidden sets behind a disk and a square, exact and floating point.
#include <iostream>

#include "hidden/hidden.hpp"

using namespace hidden;

int main() {
  // Seven points around the unit disk, far enough out to be outside but
  // close enough that every chord crosses the disk.
  const auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  const auto pts = disk_hidden_points(7, 0.5 * (1.0 + 1.0 / std::cos(std::numbers::pi / 7.0)));
  auto verdict = is_hidden(disk, pts);
  if (auto* cert = std::get_if<HiddenSetCertificate<double>>(&verdict))
    std::cout << "disk hides " << cert->size() << " points\n";

  // The square hides at most one point per facet.
  using Q = Rational;
  const auto square = HPolytope<Q>::box(2, Q(1));
  std::vector<Point<Q>> cands = {{Q(6, 5), Q(0)}, {Q(-6, 5), Q(0)}, {Q(0), Q(6, 5)},
                                 {Q(0), Q(-6, 5)}, {Q(6, 5), Q(1, 2)}};
  SearchOptions opt;
  opt.tol = 0.0;
  auto best = max_hidden_subset(square, cands, opt);
  std::cout << "square: " << best.size() << " of " << cands.size() << " candidates hidden, bound "
            << capacity_upper_bound(square).total << "\n";

  // Two points beyond the same facet: the engine names the pair and a separator.
  auto miss = is_hidden(square, std::vector<Point<Q>>{{Q(3, 2), Q(-1, 2)}, {Q(3, 2), Q(1, 2)}}, SegmentMode::closed, 0.0);
  if (auto* f = std::get_if<FailingPair<Q>>(&miss)) std::cout << "pair (" << f->i << ", " << f->j << ") not hidden\n";
}
