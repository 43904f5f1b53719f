// Command-line front end: hidden-set checks, capacity probes, constructions,
// quotients and the simplex lab. Exit codes: 0 success / hidden, 1 not hidden
// (or lab violations), 2 input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "hidden/hidden.hpp"

namespace {

using hidden::Json;

struct Config {
  std::string body_path;
  std::string points_path;
  std::string out_path;
  std::string csv_path;
  std::string trace_path;
  std::string pieces_path;
  std::string mode = "closed";
  std::string method;
  double tol = hidden::kDefaultTol;
  double radius = 0.0;
  std::uint64_t seed = 0;
  bool exact = false;
  std::size_t budget = 0;
  std::size_t count = 8;
  std::size_t dim = 3;
  std::size_t trials = 1000;
  std::size_t exact_limit = 64;
  unsigned threads = 1;
};

Json read_json(const std::string& path, const char* what) {
  if (path.empty()) throw hidden::Error(std::string("missing --") + what);
  std::ifstream in(path);
  if (!in) throw hidden::Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw hidden::Error(path + ": malformed JSON (" + e.what() + ")");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hidden::Error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

double effective_tol(const Config& c) { return c.exact ? 0.0 : c.tol; }

template <class Body, hidden::Scalar T>
int hides_check_with(const Body& body, const Json& points_json, const Config& c) {
  auto points = hidden::points_from_json<T>(points_json);
  auto verdict = hidden::is_hidden(body, points, hidden::parse_segment_mode(c.mode), effective_tol(c));
  if (auto* cert = std::get_if<hidden::HiddenSetCertificate<T>>(&verdict)) {
    write_json(c.out_path, hidden::certificate_to_json(*cert));
    return 0;
  }
  write_json(c.out_path, hidden::failing_pair_to_json(std::get<hidden::FailingPair<T>>(verdict)));
  return 1;
}

int cmd_hides_check(const Config& c) {
  const Json body = read_json(c.body_path, "body");
  const Json points = read_json(c.points_path, "points");
  if (c.exact) return hides_check_with<hidden::ExactBody, hidden::Rational>(hidden::exact_body_from_json(body), points, c);
  return hides_check_with<hidden::ConvexBody, double>(hidden::body_from_json(body), points, c);
}

int cmd_probe(const Config& c) {
  if (c.budget < 2) throw hidden::Error("budget too small");
  auto body = hidden::body_from_json(read_json(c.body_path, "body"));
  hidden::ProbeOptions opt;
  opt.threads = c.threads;
  opt.tol = c.tol;
  auto report = hidden::polyhedrality_probe(body, c.budget, c.seed, opt);
  write_json(c.out_path, hidden::report_to_json(report));
  if (!c.csv_path.empty()) write_text(c.csv_path, hidden::curve_csv(report));
  return 0;
}

std::vector<hidden::FlatPiece> read_pieces(const std::string& path) {
  std::vector<hidden::FlatPiece> out;
  for (const auto& p : read_json(path, "pieces"))
    out.push_back({hidden::point_from_json<double>(p.at("center")), hidden::point_from_json<double>(p.at("normal")),
                   hidden::scalar_from_json<double>(p.at("eps"))});
  return out;
}

int cmd_construct(const Config& c) {
  std::string method = c.method;
  hidden::Construction built;
  if (method == "disk") {
    const double n = static_cast<double>(c.count);
    const double r = c.radius > 0.0 ? c.radius : 0.5 * (1.0 + 1.0 / std::cos(std::numbers::pi / n));
    auto pts = hidden::disk_hidden_points(c.count, r);
    hidden::ConvexBody disk = hidden::SmoothBody::ball(hidden::Point<double>{0.0, 0.0}, 1.0);
    built.trace.kind = "disk";
    for (const auto& p : pts) {
      auto y = p / r;
      built.trace.steps.push_back({y, y, r - 1.0, 0});
    }
    built.certificate = std::get<hidden::HiddenSetCertificate<double>>(hidden::is_hidden(disk, pts));
  } else {
    auto body = hidden::body_from_json(read_json(c.body_path, "body"));
    if (method.empty()) method = std::holds_alternative<hidden::RoundedPolygon>(body) ? "flat" : "smooth";
    if (method == "flat") {
      const auto* rp = std::get_if<hidden::RoundedPolygon>(&body);
      if (!rp) throw hidden::Error("flat-piece construction needs a rounded_polygon body");
      auto pieces = c.pieces_path.empty() ? hidden::flat_pieces(*rp) : read_pieces(c.pieces_path);
      built = hidden::flat_piece_hidden_sequence(*rp, pieces, c.seed, c.tol);
    } else if (method == "smooth") {
      hidden::SmoothOptions opt;
      opt.tol = c.tol;
      built = hidden::smooth_hidden_sequence(body, c.count, c.seed, opt);
    } else {
      throw hidden::Error("unknown construction method '" + method + "'");
    }
  }
  write_json(c.out_path, hidden::certificate_to_json(built.certificate));
  if (!c.trace_path.empty()) write_json(c.trace_path, hidden::trace_to_json(built.trace));
  return 0;
}

template <class Body, hidden::Scalar T>
Json capacity_with(const Body& body, const Config& c) {
  Json out = Json::object();
  hidden::SearchOptions opt;
  opt.exact_limit = c.exact_limit;
  opt.threads = c.threads;
  opt.mode = hidden::parse_segment_mode(c.mode);
  opt.tol = effective_tol(c);
  if (!c.points_path.empty()) {
    auto cands = hidden::points_from_json<T>(read_json(c.points_path, "points"));
    out["best_found"] = hidden::certificate_to_json(hidden::max_hidden_subset(body, cands, opt));
  }
  return out;
}

int cmd_capacity(const Config& c) {
  const Json bj = read_json(c.body_path, "body");
  Json out;
  std::optional<hidden::CapacityBound> bound;
  if (c.exact) {
    auto body = hidden::exact_body_from_json(bj);
    out = capacity_with<hidden::ExactBody, hidden::Rational>(body, c);
    if (auto* h = std::get_if<hidden::HPolytope<hidden::Rational>>(&body)) {
      if (hidden::lineality_space(*h).dim() == 0) bound = hidden::capacity_upper_bound(*h);
      else bound = hidden::capacity_upper_bound(hidden::quotient_body(*h).body);
    } else if (auto* s = std::get_if<hidden::SimplexBody>(&body)) {
      bound = hidden::capacity_upper_bound(*s);
    }
  } else {
    auto body = hidden::body_from_json(bj);
    out = capacity_with<hidden::ConvexBody, double>(body, c);
    if (auto* h = std::get_if<hidden::HPolytope<double>>(&body)) {
      if (hidden::lineality_space(*h).dim() == 0) bound = hidden::capacity_upper_bound(*h);
      else bound = hidden::capacity_upper_bound(hidden::quotient_body(*h).body);
    } else if (auto* s = std::get_if<hidden::SimplexBody>(&body)) {
      bound = hidden::capacity_upper_bound(*s);
    }
  }
  out["upper_bound"] = bound ? hidden::bound_to_json(*bound) : Json(nullptr);
  write_json(c.out_path, out);
  return 0;
}

template <hidden::Scalar T>
Json quotient_json(const hidden::HPolytope<T>& p) {
  auto q = hidden::quotient_body(p);
  Json kernel = Json::array();
  for (const auto& v : q.kernel.basis()) kernel.push_back(hidden::point_to_json(v));
  return Json{{"body", hidden::hpolytope_to_json(q.body)}, {"map", hidden::affine_map_to_json(q.map)}, {"lineality", kernel}};
}

int cmd_quotient(const Config& c) {
  const Json bj = read_json(c.body_path, "body");
  if (bj.value("type", "") != "hpolytope") throw hidden::Error("quotient needs an hpolytope body");
  if (c.exact) {
    write_json(c.out_path, quotient_json(std::get<hidden::HPolytope<hidden::Rational>>(hidden::exact_body_from_json(bj))));
  } else {
    write_json(c.out_path, quotient_json(std::get<hidden::HPolytope<double>>(hidden::body_from_json(bj))));
  }
  return 0;
}

int cmd_simplex_lab(const Config& c) {
  if (c.dim < 2 || c.dim > 6) throw hidden::Error("simplex lab dimension must be between 2 and 6");
  auto f = hidden::simplex_falsifiers(c.dim, c.trials, c.seed, c.threads);
  Json out{{"falsifiers", hidden::falsifier_report_to_json(f)}};
  std::size_t violations = f.total_violations();
  if (c.dim <= 4) {
    auto cap = hidden::simplex_hidden_capacity(c.dim, c.trials, c.seed, 4, c.threads);
    out["capacity"] = hidden::simplex_capacity_to_json(cap);
    violations += cap.violations;
  } else {
    out["capacity"] = nullptr;
  }
  out["total_violations"] = violations;
  write_json(c.out_path, out);
  return violations == 0 ? 0 : 1;
}

void add_common(CLI::App* app, Config& c, bool body = true) {
  if (body) app->add_option("--body", c.body_path, "body JSON file");
  app->add_option("--tol", c.tol, "floating-point tolerance")->check(CLI::NonNegativeNumber);
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--out", c.out_path, "output file (default: stdout)");
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden sets behind convex bodies"};
  app.require_subcommand(1);
  Config c;

  auto* check = app.add_subcommand("hides-check", "verify that a point set is hidden behind a body");
  add_common(check, c);
  check->add_option("--points", c.points_path, "points JSON (array, or a certificate)");
  check->add_flag("--exact", c.exact, "exact rational arithmetic (polytopes and simplices)");
  check->add_option("--mode", c.mode, "closed or open-interior");

  auto* probe = app.add_subcommand("probe", "probe hidden capacity growth up to a budget");
  add_common(probe, c);
  probe->add_option("--budget", c.budget, "largest set size to attempt")->required();
  probe->add_option("--csv", c.csv_path, "capacity curve CSV (size,found,wall_ms)");

  auto* construct = app.add_subcommand("construct", "build a hidden set");
  add_common(construct, c);
  construct->add_option("--method", c.method, "disk, smooth or flat (default by body type)");
  construct->add_option("--count", c.count, "number of points (disk, smooth)");
  construct->add_option("--radius", c.radius, "disk construction radius");
  construct->add_option("--pieces", c.pieces_path, "flat pieces JSON [{center, normal, eps}]");
  construct->add_option("--trace", c.trace_path, "construction trace output");

  auto* capacity = app.add_subcommand("capacity", "pigeonhole bound and largest hidden subset of candidates");
  add_common(capacity, c);
  capacity->add_option("--points", c.points_path, "candidate points JSON");
  capacity->add_flag("--exact", c.exact, "exact rational arithmetic");
  capacity->add_option("--mode", c.mode, "closed or open-interior");
  capacity->add_option("--exact-limit", c.exact_limit, "largest candidate count for exact clique search");

  auto* quotient = app.add_subcommand("quotient", "quotient an H-polytope by its lineality space");
  add_common(quotient, c);
  quotient->add_flag("--exact", c.exact, "exact rational arithmetic");

  auto* lab = app.add_subcommand("simplex-lab", "proof-step falsifiers and capacity search for the simplex");
  add_common(lab, c, false);
  lab->add_option("--dim", c.dim, "dimension d (2..6; capacity search for d <= 4)");
  lab->add_option("--trials", c.trials, "number of random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_hides_check(c);
    if (*probe) return cmd_probe(c);
    if (*construct) return cmd_construct(c);
    if (*capacity) return cmd_capacity(c);
    if (*quotient) return cmd_quotient(c);
    if (*lab) return cmd_simplex_lab(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
