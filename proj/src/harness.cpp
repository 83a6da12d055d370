#include "polya/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "polya/bounds.hpp"
#include "polya/closed_forms.hpp"
#include "polya/error.hpp"

namespace polya::harness {
namespace {

constexpr double kPi = geometry::kPi;
constexpr double kZeta5 = 1.0369277551433699263;
constexpr double kC1 = 2.338107;
constexpr double kK = 2.3;
constexpr double kSlack = geometry::kRegionSlack;

[[noreturn]] void out_of_region(std::string_view name, double a, double b) {
  std::ostringstream os;
  os << name << " at (" << a << ", " << b << ")";
  throw Error(ErrorCode::OutOfRegion, os.str());
}

void require(bool inside, std::string_view name, double a, double b) {
  if (!inside) out_of_region(name, a, b);
}

double sector_product(double x) {
  // (tan x - x - 124 zeta(5) x^4 / pi^5) x (pi/x + c1 2^(-1/3) (pi/x)^(1/3))^2
  const double nu = kPi / x;
  const double j = nu + kC1 * std::cbrt(nu) / std::cbrt(2.0);
  return (std::tan(x) - x - 124.0 * kZeta5 * std::pow(x, 4) / std::pow(kPi, 5)) * x * j * j;
}

double kappa_k() { return kK * std::cbrt(2.0) / std::cbrt(kPi * kPi); }
double kappa_c1() { return kC1 / (std::cbrt(2.0) * std::cbrt(kPi * kPi)); }

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ExactRational: return "exact-rational";
    case Method::Certificate: return "certificate";
    case Method::GridModulus: return "grid+modulus";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::VerifiedNumerically: return "VerifiedNumerically";
    case Verdict::Failed: return "Failed";
  }
  return "unknown";
}

Verdict derive_verdict(const std::vector<Evidence>& evidence) {
  if (evidence.empty()) return Verdict::Failed;
  bool numeric = false;
  for (const auto& e : evidence) {
    if (!e.passed) return Verdict::Failed;
    if (e.method == Method::GridModulus || e.method == Method::Oracle) numeric = true;
  }
  return numeric ? Verdict::VerifiedNumerically : Verdict::Verified;
}

void finalize(CaseReport& report) {
  report.verdict = derive_verdict(report.evidence);
  report.witness.reset();
  for (const auto& e : report.evidence) {
    if (!e.passed) {
      report.witness = e.check + (e.detail.empty() ? "" : ": " + e.detail);
      break;
    }
  }
}

CaseContext make_context(geometry::Chart chart, double a, double b) {
  CaseContext c;
  c.chart = chart;
  c.a = a;
  c.b = b;
  if (chart == geometry::Chart::ShortestUnit) {
    if (b > 0) c.gamma_b = std::atan(1.0 / b);
  } else if (b >= 0.0 && b <= 0.5) {
    const double ab = 0.5 - std::sqrt(0.25 - b * b);
    c.a_b = ab;
    if (b > 0) {
      c.x_b = (1.0 - ab) / b;
      c.beta_b = std::atan(b / (1.0 - ab));
    }
  }
  return c;
}

const std::vector<std::string_view>& case_function_names() {
  static const std::vector<std::string_view> names = {"g",       "f_acute_1b", "f_acute_high",       "f_mgeq3",   "h_mgeq3",
                                                      "g_mgeq3", "f_obtuse_1", "f_obtuse_2", "prefactor_obtuse_3"};
  return names;
}

double case_function(std::string_view name, double a, double b) {
  using geometry::RegionId;
  if (name == "g") {
    require(a >= -kSlack && a <= 0.5 + kSlack && b >= std::sqrt(3.0) / 2 - kSlack && b <= 2.9 + kSlack, name, a, b);
    const double s = (a - 1) * (a - 1) + b * b;
    return 0.6 * (s + b) * (s + b) / (s * (s + a));
  }
  if (name == "f_acute_1b") {
    const double x = a;
    require(x >= std::atan(0.125) - kSlack && x <= std::atan(0.5) + kSlack, name, a, b);
    const double tl = x + x * x * x / 3 + 2 * std::pow(x, 5) / 15;
    const double tu = x + x * x * x / 3 + 2 * std::pow(x, 5) / 5;
    const double t = 1.0 / x + kappa_k() / std::cbrt(x);
    return 0.6 * x * tl / (1 + 4 * tu * tu) * t * t;
  }
  if (name == "f_acute_high") {
    require(a > 0.0 && a <= 0.7 + kSlack, name, a, b);
    return sector_product(a);
  }
  if (name == "f_mgeq3") {
    const double bb = a;
    require(bb >= 3.0 - kSlack, name, a, b);
    const double g = std::atan(1.0 / bb);
    const double r = 1 + bb / std::sqrt(bb * bb + 1);
    const double s = 1 + kappa_c1() * std::cbrt(g * g);
    return 0.75 * bb * bb / g * r * r * s * s * (1.0 / bb - g - 124.0 * kZeta5 * std::pow(g, 4) / std::pow(kPi, 5));
  }
  if (name == "h_mgeq3") {
    const double x = a;
    require(x > 0.0 && x <= std::atan(1.0 / 3.0) + kSlack, name, a, b);
    const double c = std::cos(x / 2);
    const double s = 1 + kappa_c1() * std::cbrt(x * x);
    const double t = std::tan(x);
    return 3 * std::pow(c, 4) / (x * t * t) * s * s * (t - x - 124.0 * kZeta5 * std::pow(x, 4) / std::pow(kPi, 5));
  }
  if (name == "g_mgeq3") {
    const double x = a;
    require(x >= -kSlack && x <= std::atan(1.0 / 3.0) + kSlack, name, a, b);
    const double num = std::pow(1 - x * x / 8, 4);
    const double den = 1 + x * x / 3 + 2 * std::pow(x, 4) / 5;
    const double s = 1 + kappa_c1() * std::cbrt(x * x);
    return num / (den * den) * s * s * (1 - 372.0 * kZeta5 * x / std::pow(kPi, 5));
  }
  if (name == "f_obtuse_1") {
    require(geometry::in_region(a, b, RegionId::ObtuseCase1), name, a, b);
    return 0.6 * (1 + b) * (1 + b) / (1 - a + a * a + b * b);
  }
  if (name == "f_obtuse_2") {
    require(geometry::in_region(a, b, RegionId::ObtuseCase2), name, a, b);
    const double den = a - a * a + b * b;
    if (!(den > 0)) throw Error(ErrorCode::DomainError, "f_obtuse_2 undefined at a = b = 0");
    return (1 - a) * a * (1 + b) * (1 + b) / den;
  }
  if (name == "prefactor_obtuse_3") {
    const double bb = a;
    require(bb >= -kSlack && bb <= 0.5 + kSlack, name, a, b);
    const double s = std::sqrt(std::max(0.0, 1 - 4 * bb * bb));
    const double d = std::sqrt(2.0) + std::sqrt(2.0) * s + 2 * std::sqrt(1 + s);
    return 16 * (1 + s) / (d * d);
  }
  throw Error(ErrorCode::UnknownName, std::string(name));
}

Rational case_function_exact(std::string_view name, const Rational& a, const Rational& b) {
  if (name != "g" && name != "f_obtuse_1" && name != "f_obtuse_2") {
    throw Error(ErrorCode::UnknownName, std::string(name) + " has no exact form");
  }
  // Region membership is decided in floating point with the usual slack.
  (void)case_function(name, to_double(a), to_double(b));
  Rational r;
  if (name == "g") {
    const Rational s = (a - 1) * (a - 1) + b * b;
    r = Rational(3, 5) * (s + b) * (s + b) / (s * (s + a));
  } else if (name == "f_obtuse_1") {
    r = Rational(3, 5) * (1 + b) * (1 + b) / (1 - a + a * a + b * b);
  } else {
    r = (1 - a) * a * (1 + b) * (1 + b) / (a - a * a + b * b);
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<std::pair<double, double>> sweep_points(const SweepConfig& cfg) {
  if (cfg.na < 2 || cfg.nb < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 x 2 points");
  if (!(cfg.b_min >= 1e-3) || !(cfg.b_max >= cfg.b_min)) throw Error(ErrorCode::InvalidArgument, "need 1e-3 <= b_min <= b_max");
  const auto region = cfg.chart == geometry::Chart::LongestUnit ? geometry::RegionId::T : geometry::RegionId::TPrimeAcute;
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < cfg.na; ++i) {
    const double a = 0.5 * i / (cfg.na - 1);
    for (int j = 0; j < cfg.nb; ++j) {
      const double b = cfg.b_min + (cfg.b_max - cfg.b_min) * j / (cfg.nb - 1);
      if (geometry::in_region(a, b, region)) pts.emplace_back(a, b);
    }
  }
  return pts;
}

SweepRow sweep_row(double a, double b, int max_level) {
  SweepRow row;
  row.a = a;
  row.b = b;
  const geometry::Triangle tri{a, b};
  try {
    row.cls = std::string(geometry::to_string(geometry::classify(tri)));
    const fem::SpectralResult r = fem::spectral(tri, max_level);
    row.lambda1 = r.lambda1;
    row.T = r.T;
    row.torsion_max = r.torsion_max;
    row.F = r.F;
    row.error_gauge = r.error_gauge;
    row.margin_low = r.F - kPi * kPi / 24;
    row.margin_high = kPi * kPi / 12 - r.F;

    const geometry::TriangleData d = geometry::derive(tri);
    const double area = d.area;
    auto add = [&](std::string name, double lam_lb, double t_lb) {
      const double v = lam_lb * t_lb / area;
      row.lower_bounds.push_back({std::move(name), v, v - r.F});
    };
    const double t_eq = bounds::torsion_lb_equilateral_test(a, b).value;
    const double fs = bounds::eig_lb_diameter_height(d.diameter, d.height).value;
    add("diameter-height x equilateral-test", fs, t_eq);
    if (a > 0.0 && a < 1.0) add("diameter-height x obtuse-test", fs, bounds::torsion_lb_obtuse_test(a, b).value);

    // Smallest angle and the vertex it sits at.
    const double angles[3] = {d.alpha, d.beta, d.gamma};
    const int k = static_cast<int>(std::min_element(angles, angles + 3) - angles);
    const double theta = angles[k];
    add("sector eigenvalue x equilateral-test", bounds::eig_lb_sector(theta, 2 * area).value, t_eq);

    // Radius of a sector at that vertex known to sit inside the triangle.
    const double sides[3] = {1.0, d.M, d.N};  // opposite the apex, origin, (1,0)
    double adj_short = 0.0;
    switch (k) {
      case 0: adj_short = std::min(1.0, d.M); break;
      case 1: adj_short = std::min(1.0, d.N); break;
      default: adj_short = std::min(d.M, d.N); break;
    }
    const double opposite = k == 0 ? d.N : (k == 1 ? d.M : sides[0]);
    double radius = std::max(2 * area / opposite, adj_short * std::cos(theta / 2));
    if (d.gamma >= kPi / 2 - geometry::kAngleTol && k == 1) radius = std::max(radius, d.N);
    if (theta <= kPi / 4) {
      const double t_sec = bounds::torsion_lb_sector_closed(radius, theta, 0.0).value;
      add("minorized sector eigenvalue x sector torsion", bounds::eig_lb_sector_minorized(theta, 2 * area).value, t_sec);
    }

    const bounds::UpperChain up = bounds::upper_chain({r.lambda1, r.T, area, d.perimeter}, bounds::DomainKind::Triangle);
    row.upper_chain = {up.bound.name, up.bound.value, up.bound.value - r.F};
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = fem::thread_budget();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<SweepRow> sweep_triangles(const SweepConfig& cfg) {
  const auto pts = sweep_points(cfg);
  std::vector<SweepRow> rows(pts.size());
  parallel_for(pts.size(), cfg.threads, [&](std::size_t i) { rows[i] = sweep_row(pts[i].first, pts[i].second, cfg.max_level); });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "a,b,class,lambda1,T,torsion_max,F,margin_low,margin_high\n";
  char buf[512];
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%s,nan,nan,nan,nan,nan,nan\n", r.a, r.b, r.cls.c_str());
    } else {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.a, r.b, r.cls.c_str(), r.lambda1,
                    r.T, r.torsion_max, r.F, r.margin_low, r.margin_high);
    }
    out += buf;
  }
  return out;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = rows.size();
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      ++s.solver_failures;
      ++s.enclosure_violations;
      continue;
    }
    if (!r.ok()) ++s.enclosure_violations;
    s.min_margin_low = std::min(s.min_margin_low, r.margin_low);
    s.min_margin_high = std::min(s.min_margin_high, r.margin_high);
    for (const auto& g : r.lower_bounds) {
      if (g.gap > s.worst_lower_gap) {
        s.worst_lower_gap = g.gap;
        s.worst_lower_name = g.name;
      }
    }
    s.worst_upper_gap = std::min(s.worst_upper_gap, r.upper_chain.gap);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Rectangles

RectScan rect_monotonicity_scan(const std::vector<double>& a_values, int n_terms) {
  RectScan scan;
  scan.a_values = a_values;
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    if (!(a_values[i] >= 1.0) || (i > 0 && a_values[i] < a_values[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "a values must be sorted and >= 1");
    const auto v = closed_forms::rect_F(geometry::Rectangle{a_values[i], 1.0}, n_terms);
    scan.F.push_back(v.value);
    scan.tail.push_back(v.tail_bound);
  }
  const double floor = 64.0 / std::pow(kPi, 4);
  scan.nondecreasing = true;
  scan.first_is_min = true;
  scan.above_floor = true;
  for (std::size_t i = 0; i < scan.F.size(); ++i) {
    if (scan.F[i] + scan.tail[i] < floor) scan.above_floor = false;
    if (i > 0) {
      const double slack = 2.0 * std::max(scan.tail[i], scan.tail[i - 1]);
      if (scan.F[i] < scan.F[i - 1] - slack && scan.nondecreasing) {
        scan.nondecreasing = false;
        scan.first_drop = i;
      }
      if (scan.F[i] < scan.F[0] - 2.0 * std::max(scan.tail[i], scan.tail[0])) scan.first_is_min = false;
    }
  }
  if (!scan.F.empty()) scan.last_gap = kPi * kPi / 12 - scan.F.back();
  return scan;
}

GRemark g_remark_check() {
  GRemark g;
  const double pi2 = kPi * kPi;
  g.a_threshold = std::sqrt(5 * pi2 / (58 - 5 * pi2));
  g.bound_at_238 = pi2 / 8 * (1 + 1 / (2.38 * 2.38));
  for (int i = 0; i <= 36; ++i) {
    const double a = 1.0 + 0.25 * i;
    const geometry::Rectangle r{a, 1.0};
    g.a_values.push_back(a);
    g.G.push_back(closed_forms::rect_lambda1(r) * closed_forms::rect_center_torsion(r).value);
  }
  g.G_square = g.G.front();
  g.square_above_145 = g.G_square >= 1.45;
  g.tail_holds = true;
  g.square_is_max = true;
  for (std::size_t i = 0; i < g.a_values.size(); ++i) {
    const double a = g.a_values[i];
    if (a >= g.a_threshold && pi2 / 8 * (1 + 1 / (a * a)) > 1.45) g.tail_holds = false;
    if (g.G[i] > g.G_square * (1 + 1e-12)) g.square_is_max = false;
  }
  return g;
}

}  // namespace polya::harness
