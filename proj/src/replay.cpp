#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "polya/bounds.hpp"
#include "polya/certify.hpp"
#include "polya/closed_forms.hpp"
#include "polya/constants.hpp"
#include "polya/error.hpp"
#include "polya/harness.hpp"
#include "polya/lemma_polys.hpp"

namespace polya::harness {
namespace {

using constants::ConstantId;
constexpr double kPi = geometry::kPi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

Evidence exact(std::string check, bool ok, std::string detail = {}) {
  return {std::move(check), Method::ExactRational, ok ? 0.0 : -1.0, ok, std::move(detail)};
}

Evidence exact_margin(std::string check, const Rational& margin, std::string detail = {}) {
  return {std::move(check), Method::ExactRational, to_double(margin), margin >= 0, std::move(detail)};
}

// tan x >= x + x^3/3 + 2x^5/15 on (0, pi/2); tan x <= x + x^3/3 + 2x^5/5 on (0, 1).
Rational tan_lower(const Rational& x) { return x + x * x * x / 3 + 2 * x * x * x * x * x / 15; }
Rational tan_upper(const Rational& x) { return x + x * x * x / 3 + 2 * x * x * x * x * x / 5; }

// Certifies atan(y) <= x, i.e. y <= tan x, for 0 < x < pi/2.
Evidence atan_at_most(const Rational& y, const Rational& x, const std::string& label) {
  return exact_margin(label, tan_lower(x) - y, "tan(" + polya::to_string(x) + ") >= " + polya::to_string(y) + " by the odd series lower bound");
}

// Certifies atan(y) >= x, i.e. tan x <= y, for 0 < x < 1.
Evidence atan_at_least(const Rational& y, const Rational& x, const std::string& label) {
  return exact_margin(label, y - tan_upper(x), "tan(" + polya::to_string(x) + ") <= " + polya::to_string(y) + " by the odd series upper bound");
}

Evidence certificate(const std::string& lemma, int depth) {
  Evidence e{"certificate " + lemma, Method::Certificate, 0.0, true, {}};
  std::ostringstream detail;
  double worst = -1e300;
  for (const auto& run : lemma::certify_lemma(lemma, depth)) {
    const auto& c = run.certificate;
    detail << "shift " << polya::to_string(run.target.shift) << ", (0, " << polya::to_string(run.target.dx) << "]: "
           << (c.ok() ? "certified" : "depth exhausted") << ", depth " << c.depth << ", " << c.intervals.size() << " pieces; ";
    if (!c.ok()) {
      e.passed = false;
      if (c.failure_witness) detail << "witness (" << polya::to_string(c.failure_witness->lo) << ", " << polya::to_string(c.failure_witness->hi) << "]; ";
    }
    for (const auto& p : c.intervals) worst = std::max(worst, to_double(p.reduced_constant));
  }
  // Margin: distance of the worst reduced constant below zero.
  e.worst_margin = e.passed ? 0.0 - worst : -1.0;
  e.detail = detail.str();
  return e;
}

Rational pi_hi() { return constants::enclose(ConstantId::Pi, Rational(1, 1000000000)).hi(); }

// Interval enclosure of g on a rational box, refined by bisection until the
// lower end clears `target`.
struct GBox {
  RationalInterval a, b;
};

RationalInterval g_enclosure(const GBox& box) {
  const RationalInterval am1 = box.a - RationalInterval(q(1));
  const RationalInterval s = pow(am1, 2) + pow(box.b, 2);
  const RationalInterval num = pow(s + box.b, 2);
  const RationalInterval den = s * (s + box.a);
  return RationalInterval(q(3, 5)) * num / den;
}

Evidence g_branch_and_bound(const Rational& b_lo, const Rational& b_hi, const Rational& target) {
  std::vector<GBox> stack = {{RationalInterval(q(0), q(1, 2)), RationalInterval(b_lo, b_hi)}};
  std::size_t boxes = 0;
  Rational worst(-1);
  bool have_worst = false;
  constexpr std::size_t kMaxBoxes = 2000000;
  while (!stack.empty()) {
    GBox box = stack.back();
    stack.pop_back();
    if (++boxes > kMaxBoxes) {
      return {"g >= 1 on the box by interval bisection", Method::GridModulus, -1.0, false, "box budget exhausted"};
    }
    const RationalInterval g = g_enclosure(box);
    if (g.lo() >= target) {
      Rational m = g.lo() - target;
      if (!have_worst || m < worst) {
        worst = m;
        have_worst = true;
      }
      continue;
    }
    // Split the dimension with the larger width relative to its range.
    if (box.a.width() * 5 >= box.b.width()) {
      const Rational mid = box.a.midpoint();
      stack.push_back({RationalInterval(box.a.lo(), mid), box.b});
      stack.push_back({RationalInterval(mid, box.a.hi()), box.b});
    } else {
      const Rational mid = box.b.midpoint();
      stack.push_back({box.a, RationalInterval(box.b.lo(), mid)});
      stack.push_back({box.a, RationalInterval(mid, box.b.hi())});
    }
  }
  return {"g >= 1 on [0,1/2] x [sqrt3/2, 2.9] by interval bisection", Method::GridModulus, to_double(worst), true,
          std::to_string(boxes) + " boxes, rational interval arithmetic"};
}

Evidence dense_min(const std::string& check, const std::function<double(double)>& f, double lo, double hi, int n, double target,
                   bool log_spaced = false, const std::string& inner = {}) {
  double worst = 1e300, at = lo;
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double x = log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    const double m = f(x) - target;
    if (m < worst) {
      worst = m;
      at = x;
    }
  }
  return {check, Method::GridModulus, worst, worst >= -1e-12, "dense sample, " + std::to_string(n + 1) + " points" + inner + ", min at " + fmt(at)};
}

// ---------------------------------------------------------------------------

CaseReport acute_1a(const ReplayOptions&) {
  CaseReport r{"acute-1a", "T'_acute with sqrt(3)/2 <= b <= 2.9", {}, Verdict::Failed, {}, {}};
  const Rational g_corner = case_function_exact("g", q(1, 2), q(29, 10));
  r.evidence.push_back(exact("g(1/2, 29/10) = 501126/495785", g_corner == q(501126, 495785), "value " + polya::to_string(g_corner)));
  r.evidence.push_back(exact_margin("g(1/2, 29/10) > 1", g_corner - 1));
  // Lower end of the box: a rational below sqrt(3)/2, so the box covers the region.
  const Rational b_lo = floor_decimal(constants::enclose(ConstantId::Sqrt3, Rational(1, 1000000000)).lo() / 2, 6);
  r.evidence.push_back(g_branch_and_bound(b_lo, q(29, 10), q(1)));
  const double g_c = to_double(g_corner);
  r.evidence.push_back(dense_min(
      "g >= g(1/2, 2.9) on a 201 x 201 sample",
      [&](double a) {
        double m = 1e300;
        for (int j = 0; j <= 200; ++j) m = std::min(m, case_function("g", a, std::sqrt(3.0) / 2 + (2.9 - std::sqrt(3.0) / 2) * j / 200));
        return m;
      },
      0.0, 0.5, 200, g_c, false, " in a, each minimized over 201 b values"));
  r.notes.push_back("cases 1a and 1b overlap on 1 <= b <= 2.9; both are replayed, no canonical partition is chosen");
  return r;
}

CaseReport acute_1b(const ReplayOptions& o) {
  CaseReport r{"acute-1b", "T'_acute with 1 <= b <= 4", {}, Verdict::Failed, {}, {}};
  r.evidence.push_back(certificate("P2_acute", o.cert_depth));
  r.evidence.push_back(exact("shift covers (0.49, 0.775)", q(49, 100) + q(285, 1000) == q(775, 1000)));
  r.evidence.push_back(atan_at_least(q(1, 8), q(12, 100), "atan(1/8) >= 0.12"));
  r.evidence.push_back(atan_at_most(q(1, 2), q(464, 1000), "atan(1/2) <= 0.464"));
  r.evidence.push_back(exact_margin("0.49^3 <= 0.12", q(12, 100) - q(49, 100) * q(49, 100) * q(49, 100)));
  r.evidence.push_back(exact_margin("0.775^3 >= 0.464", q(775, 1000) * q(775, 1000) * q(775, 1000) - q(464, 1000)));
  const Rational airy_lo = constants::enclose(ConstantId::NegAiryA1, Rational(1, 1000000000)).lo();
  r.evidence.push_back(exact_margin("-a1 >= 2.338107", airy_lo - q(2338107, 1000000), "tabulated Airy zero enclosure"));
  r.evidence.push_back(exact_margin("2.338107 > k = 2.3", q(2338107, 1000000) - q(23, 10)));
  r.notes.push_back("cases 1a and 1b overlap on 1 <= b <= 2.9; both are replayed, no canonical partition is chosen");
  return r;
}

CaseReport acute_2(const ReplayOptions& o) {
  CaseReport r{"acute-2", "T'_acute with b >= 3", {}, Verdict::Failed, {}, {}};
  r.evidence.push_back(certificate("negP1prime_mono", o.cert_depth));
  r.evidence.push_back(certificate("Q_mgeq3", o.cert_depth));
  r.evidence.push_back(exact_margin("0.888^3 >= 0.7 (monotone range)", q(888, 1000) * q(888, 1000) * q(888, 1000) - q(7, 10)));
  r.evidence.push_back(exact("two halves of width 0.444 cover (0, 0.888)", q(444, 1000) * 2 == q(888, 1000)));
  r.evidence.push_back(atan_at_most(q(1, 6), q(17, 100), "atan(1/6) <= 0.17, so the apex angle stays below 0.34"));
  r.evidence.push_back(exact_margin("0.34 <= 0.7", q(7, 10) - q(34, 100)));
  const Rational c = q(686, 1000) * q(686, 1000) * q(686, 1000);
  r.evidence.push_back(atan_at_most(q(1, 3), c, "atan(1/3) <= 0.686^3"));
  {
    bool ok = true;
    for (long i = 0; i <= 10; ++i) {
      const Rational a = q(i, 20);
      ok = ok && a * a + 9 >= 4;
    }
    r.evidence.push_back(exact("M^2 = a^2 + b^2 >= 9 >= 4 for b >= 3 (sector torsion bound applies)", ok));
  }
  // Sampled monotonicity of the full sector product; the certificate covers
  // the polynomial part, the tail series has nonnegative coefficients.
  {
    double worst = 1e300, at = 0.0;
    const int n = 20000;
    double prev = case_function("f_acute_high", 0.7 / n);
    for (int i = 2; i <= n; ++i) {
      const double x = 0.7 * i / n;
      const double v = case_function("f_acute_high", x);
      const double m = (v - prev) / std::max(1.0, std::abs(v));
      if (m < worst) {
        worst = m;
        at = x;
      }
      prev = v;
    }
    r.evidence.push_back({"sector product increasing on (0, 0.7)", Method::GridModulus, worst, worst >= -1e-12,
                          "dense sample, 20000 points, smallest relative step at " + fmt(at) + "; supplements the certificate"});
  }
  r.evidence.push_back(
      dense_min("f(b) >= 1 for b >= 3", [](double b) { return case_function("f_mgeq3", b); }, 3.0, 1e4, 20000, 1.0, true));
  r.evidence.push_back(dense_min("g(x) >= 1 on (0, atan(1/3)]", [](double x) { return case_function("g_mgeq3", x); }, 1e-9,
                                 std::atan(1.0 / 3.0), 20000, 1.0));
  return r;
}

CaseReport obtuse_1(const ReplayOptions&) {
  CaseReport r{"obtuse-1", "T_obtuse between 3/2 - (sqrt5/2) sqrt(1+2a-2a^2) and sqrt(a-a^2), a >= a_min", {}, Verdict::Failed, {}, {}};
  // 3(1+b)^2 - 5(1-a+a^2+b^2) = -2 (b^2 - 3b + 1 - 5a/2 + 5a^2/2); the quadratic
  // in b has roots 3/2 -+ (sqrt5/2) sqrt(1+2a-2a^2).
  bool identity = true;
  for (long i = 0; i < 3; ++i) {
    for (long j = 0; j < 3; ++j) {
      const Rational a = q(i, 4), b = q(j, 3);
      const Rational lhs = 3 * (1 + b) * (1 + b) - 5 * (1 - a + a * a + b * b);
      const Rational rhs = -2 * (b * b - 3 * b + 1 - q(5, 2) * a + q(5, 2) * a * a);
      identity = identity && lhs == rhs;
    }
  }
  r.evidence.push_back(exact("f >= 1 iff -2(b - r-)(b - r+) >= 0 (quadratic identity on a 3 x 3 grid)", identity));
  {
    // r-+ = 3/2 -+ (sqrt5/2) sqrt(1+2a-2a^2): product (3/2)^2 - (5/4)(1+2a-2a^2).
    bool ok = true;
    for (long i = 0; i <= 10; ++i) {
      const Rational a = q(i, 20);
      ok = ok && q(9, 4) - q(5, 4) * (1 + 2 * a - 2 * a * a) == 1 - q(5, 2) * a + q(5, 2) * a * a;
    }
    r.evidence.push_back(exact("product of roots r- r+ = 1 - 5a/2 + 5a^2/2 (a = 0, 1/20, ..., 1/2)", ok));
  }
  r.evidence.push_back(exact_margin("upper root r+ >= 3/2 > 1/2 >= b", q(1)));
  // Lower curve meets b = sqrt(a - a^2) where t = a - a^2 solves 9t^2/4 - 12t + 1 = 0.
  auto p = [](const Rational& a) -> Rational {
    const Rational t = a - a * a;
    return q(9, 4) * t * t - 12 * t + 1;
  };
  r.evidence.push_back(exact_margin("a_min > 0.0934 (region empty just left of it)", p(q(934, 10000))));
  r.evidence.push_back(exact_margin("a_min < 0.0935 (region nonempty just right of it)", -p(q(935, 10000)),
                                    "closed form a_min = " + fmt(geometry::obtuse_case1_a_min())));
  return r;
}

// Exact Rayleigh quotient of the two-piece obtuse test function: each piece
// is quadratic, so the edge-midpoint rule integrates v and |grad v|^2 exactly.
std::pair<Rational, Rational> obtuse_test_integrals(const Rational& a, const Rational& b) {
  struct P {
    Rational x, y;
  };
  auto tri_integral = [](const P& p0, const P& p1, const P& p2, const std::function<Rational(const Rational&, const Rational&)>& f) -> Rational {
    Rational area = ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y)) / 2;
    if (area < 0) area = -area;
    auto mid = [](const P& u, const P& w) { return P{(u.x + w.x) / 2, (u.y + w.y) / 2}; };
    const P m01 = mid(p0, p1), m12 = mid(p1, p2), m20 = mid(p2, p0);
    return area / 3 * (f(m01.x, m01.y) + f(m12.x, m12.y) + f(m20.x, m20.y));
  };
  const P o{q(0), q(0)}, e{q(1), q(0)}, apex{a, b}, foot{a, q(0)};
  const Rational sl = b / a, sr = b / (1 - a);
  auto vl = [&](const Rational& x, const Rational& y) -> Rational { return y * (sl * x - y); };
  auto vr = [&](const Rational& x, const Rational& y) -> Rational { return y * (sr * (1 - x) - y); };
  auto gl = [&](const Rational& x, const Rational& y) -> Rational {
    const Rational vx = sl * y, vy = sl * x - 2 * y;
    return vx * vx + vy * vy;
  };
  auto gr = [&](const Rational& x, const Rational& y) -> Rational {
    const Rational vx = -sr * y, vy = sr * (1 - x) - 2 * y;
    return vx * vx + vy * vy;
  };
  Rational iv = tri_integral(o, foot, apex, vl) + tri_integral(foot, e, apex, vr);
  Rational ig = tri_integral(o, foot, apex, gl) + tri_integral(foot, e, apex, gr);
  return {iv, ig};
}

CaseReport obtuse_2(const ReplayOptions&) {
  CaseReport r{"obtuse-2", "T_obtuse with b <= 2a(1-a)/(1-a+a^2)", {}, Verdict::Failed, {}, {}};
  bool identity = true;
  for (long i = 1; i <= 3; ++i) {
    for (long j = 0; j < 3; ++j) {
      const Rational t = q(i, 5), b = q(j, 2);
      identity = identity && (t * (1 + b) * (1 + b) - (t + b * b) == b * (t * (2 + b) - b));
    }
  }
  r.evidence.push_back(exact("f >= 1 iff t(2+b) >= b with t = a - a^2 (identity)", identity));
  bool on_curve = true;
  // The curve stays inside the obtuse half-disc for a <= 1/5.
  for (long k = 1; k <= 8; ++k) {
    const Rational a = q(k, 40);
    Rational b = 2 * a * (1 - a) / (1 - a + a * a);
    b.canonicalize();
    on_curve = on_curve && case_function_exact("f_obtuse_2", a, b) == 1;
  }
  r.evidence.push_back(exact("f(a, 2a(1-a)/(1-a+a^2)) = 1 for a = 1/40, ..., 1/5", on_curve));
  bool quotient = true;
  std::string first_bad;
  for (long i = 1; i <= 10; ++i) {
    for (long j = 1; j <= 10; ++j) {
      const Rational a = q(i, 20), b = q(j, 20);
      const auto [iv, ig] = obtuse_test_integrals(a, b);
      const Rational rq = iv * iv / ig;
      if (rq != bounds::torsion_lb_obtuse_test(a, b)) {
        quotient = false;
        if (first_bad.empty()) first_bad = "(" + polya::to_string(a) + ", " + polya::to_string(b) + ")";
      }
    }
  }
  r.evidence.push_back(exact("test-function quotient equals (1-a)ab^3 / (48(a-a^2+b^2)) on a 10 x 10 rational grid", quotient, first_bad));
  return r;
}

CaseReport obtuse_3(const ReplayOptions& o) {
  CaseReport r{"obtuse-3", "T_obtuse with 2a(1-a)/(1-a+a^2) <= b <= sqrt(a-a^2) and b <= 0.3", {}, Verdict::Failed, {}, {}};
  r.evidence.push_back(certificate("negP1prime_mono", o.cert_depth));
  r.evidence.push_back(certificate("Q_mgeq3", o.cert_depth));
  // At b = 3/10: sqrt(1/4 - 9/100) = 2/5, a_b = 1/10, x_b = 3; x_b decreases in b.
  {
    const Rational b = q(3, 10), root = q(2, 5);
    const Rational ab = q(1, 2) - root;
    const bool ok = root * root == q(1, 4) - b * b && (1 - ab) / b == 3;
    r.evidence.push_back(exact("x_b = 3 at b = 0.3 (and x_b decreases in b)", ok));
  }
  r.evidence.push_back(exact_margin("beta <= atan(0.6) since b/(1-a) <= 0.3/0.5", q(3, 5) - q(3, 10) / q(1, 2)));
  r.evidence.push_back(atan_at_most(q(3, 5), q(7, 10), "atan(0.6) <= 0.7 (monotone range)"));
  r.evidence.push_back(exact_margin("atan(0.6) <= pi/4 (n^3 minimum applies)", q(1) - q(3, 5)));
  const Rational c = q(686, 1000) * q(686, 1000) * q(686, 1000);
  r.evidence.push_back(atan_at_most(q(1, 3), c, "beta_b = atan(1/x_b) <= atan(1/3) <= 0.686^3"));
  // Prefactor is increasing in b (s = sqrt(1-4b^2) decreases), so each grid
  // cell is bounded below by its left end.
  {
    const int n = 10000;
    double worst = 1e300, at = 0.0;
    for (int i = 0; i < n; ++i) {
      const double b0 = 0.5 * i / n;
      const double m = case_function("prefactor_obtuse_3", b0) - 1.0;
      if (m < worst) {
        worst = m;
        at = b0;
      }
    }
    r.evidence.push_back({"prefactor >= 1 on [0, 1/2]", Method::GridModulus, worst, worst >= -1e-12,
                          "10000 cells, monotone modulus (left end), min at b = " + fmt(at)});
  }
  // Full chain lower bound sampled over the replayed region.
  {
    double worst = 1e300;
    std::string where;
    for (int i = 1; i <= 200; ++i) {
      const double a = 0.5 * i / 200;
      for (int j = 1; j <= 200; ++j) {
        const double b = 0.3 * j / 200;
        if (!geometry::in_region(a, b, geometry::RegionId::ObtuseCase3)) continue;
        const double N = std::hypot(1 - a, b);
        const double beta = std::atan2(b, 1 - a);
        const double t = bounds::torsion_lb_sector_closed(N, beta, 0.0).value;
        const double lam = bounds::eig_lb_sector_minorized(beta, b).value;
        const double m = lam * t / (b / 2) / (kPi * kPi / 24) - 1;
        if (m < worst) {
          worst = m;
          where = "(" + fmt(a) + ", " + fmt(b) + ")";
        }
      }
    }
    r.evidence.push_back({"chain bound >= pi^2/24 on a 200 x 200 sample", Method::GridModulus, worst, worst > 0,
                          "dense sample, min relative margin at " + where});
  }
  r.notes.push_back(
      "region text mixes the curve band with the box 0 <= a <= 0.5, 0 <= b <= 0.3; the replay uses the intersection");
  return r;
}

// Halton points in the longest-unit chart with b >= 0.02.
std::vector<geometry::Triangle> halton_triangles(int n) {
  auto halton = [](int i, int base) {
    double f = 1, r = 0;
    while (i > 0) {
      f /= base;
      r += f * (i % base);
      i /= base;
    }
    return r;
  };
  std::vector<geometry::Triangle> out;
  for (int i = 1; static_cast<int>(out.size()) < n; ++i) {
    const double a = 0.5 * halton(i, 2);
    const double top = std::min(std::sqrt(3.0) / 2, std::sqrt(std::max(0.0, 1 - (1 - a) * (1 - a))));
    if (top < 0.02) continue;
    const double b = 0.02 + (top - 0.02) * halton(i, 3);
    out.push_back({a, b});
  }
  return out;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = fem::thread_budget();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

CaseReport upper_common(const std::string& id, const std::vector<fem::Shape>& shapes, bounds::DomainKind kind, const ReplayOptions& o,
                        const std::string& region) {
  CaseReport r{id, region, {}, Verdict::Failed, {}, {}};
  std::vector<bounds::UpperChain> chains(shapes.size());
  std::vector<double> Fs(shapes.size());
  std::vector<std::string> errors(shapes.size());
  parallel_for(shapes.size(), o.threads, [&](std::size_t i) {
    try {
      const fem::SpectralResult s = fem::spectral(shapes[i], o.upper_level);
      chains[i] = bounds::upper_chain({s.lambda1, s.T, s.area, fem::shape_perimeter(shapes[i])}, kind);
      Fs[i] = s.F;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  const double cap_e = (kind == bounds::DomainKind::Triangle ? kPi * kPi / 9 : kPi * kPi / 8) * (1 + 2e-3);
  double we = 1e300, wt = 1e300, wf = 1e300;
  std::size_t ie = 0, it = 0, failures = 0;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (!errors[i].empty()) {
      ++failures;
      continue;
    }
    const double me = (cap_e - chains[i].eigen_factor) / cap_e;
    const double mt = (2.0 / 3 - chains[i].torsion_factor) / (2.0 / 3);
    if (me < we) we = me, ie = i;
    if (mt < wt) wt = mt, it = i;
    wf = std::min(wf, kPi * kPi / 12 - Fs[i]);
  }
  auto where = [&](std::size_t i) {
    return std::visit(
        [](const auto& s) -> std::string {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, geometry::Triangle>) {
            return "triangle (" + fmt(s.a) + ", " + fmt(s.b) + ")";
          } else if constexpr (std::is_same_v<S, geometry::ConvexPolygon>) {
            return "kite apex (" + fmt(s.vertices[1].x) + ", " + fmt(s.vertices[3].y) + ")";
          } else {
            return "shape";
          }
        },
        shapes[i]);
  };
  const std::string n = std::to_string(shapes.size());
  r.evidence.push_back({"oracle solves succeed", Method::Oracle, failures == 0 ? 0.0 : -1.0, failures == 0,
                        std::to_string(failures) + " failures of " + n});
  r.evidence.push_back({"lambda1 area^2 / P^2 <= cap (1 + 2e-3)", Method::Oracle, we, we >= 0,
                        n + " shapes at max_level " + std::to_string(o.upper_level) + ", tightest " + where(ie)});
  r.evidence.push_back({"T P^2 / area^3 < 2/3", Method::Oracle, wt, wt > 0, "tightest " + where(it)});
  r.evidence.push_back({"F < pi^2/12", Method::Oracle, wf, wf > 0, {}});
  return r;
}

CaseReport upper_triangle(const ReplayOptions& o) {
  std::vector<fem::Shape> shapes;
  for (const auto& t : halton_triangles(o.upper_samples)) shapes.emplace_back(t);
  CaseReport r = upper_common("upper-triangle", shapes, bounds::DomainKind::Triangle, o, "T (all triangle shapes), b >= 0.02");
  r.evidence.push_back(exact("(pi^2/9)(2/3) = 2pi^2/27 < pi^2/12", q(2, 27) < q(1, 12)));
  return r;
}

CaseReport upper_tangential(const ReplayOptions& o) {
  std::vector<fem::Shape> shapes;
  for (int i = 1; i <= 9; ++i) {
    for (double w : {0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0}) shapes.emplace_back(geometry::make_kite(0.1 * i, w));
  }
  bool tangential = true;
  for (const auto& s : shapes) tangential = tangential && geometry::is_tangential_quadrilateral(std::get<geometry::ConvexPolygon>(s));
  CaseReport r = upper_common("upper-tangential", shapes, bounds::DomainKind::TangentialQuadrilateral, o, "kites (tangential quadrilaterals)");
  r.evidence.push_back({"sampled kites satisfy the Pitot condition", Method::GridModulus, 0.0, tangential, "tolerance 1e-9"});
  r.evidence.push_back(exact("(pi^2/8)(2/3) = pi^2/12", q(1, 8) * q(2, 3) == q(1, 12)));
  return r;
}

CaseReport rect_monotone(const ReplayOptions&) {
  CaseReport r{"rect-monotone", "rectangles R_{x,1}, x >= 1", {}, Verdict::Failed, {}, {}};
  using poly::RationalPoly;
  const RationalPoly x = RationalPoly::monomial(q(1), 1);
  const RationalPoly x2 = RationalPoly::monomial(q(1), 2);
  const RationalPoly one = RationalPoly::monomial(q(1), 0);
  const RationalPoly x5mx = RationalPoly::monomial(q(1), 5) - x;
  bool all = true;
  std::string bad;
  int pairs = 0;
  for (long n = 0; n < 64; ++n) {
    for (long m = 0; m < n; ++m) {
      const Rational p = 2 * n + 1, s = 2 * m + 1;
      const Rational alpha = p * p * p * p * s * s, beta = s * s * s * s * p * p;
      const RationalPoly d1 = alpha * one + beta * x2;  // alpha + beta x^2
      const RationalPoly d2 = beta * one + alpha * x2;
      const RationalPoly num1 = q(2) * x * d1 - (one + x2) * (q(2) * beta * x);
      const RationalPoly num2 = q(2) * x * d2 - (one + x2) * (q(2) * alpha * x);
      const RationalPoly lhs = num1 * d2 * d2 + num2 * d1 * d1;
      const RationalPoly rhs = (2 * (alpha - beta) * (alpha - beta) * (alpha + beta)) * x5mx;
      ++pairs;
      if (!(lhs == rhs)) {
        all = false;
        if (bad.empty()) bad = "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
      }
    }
  }
  r.evidence.push_back(exact("g'_{alpha,beta} numerator = 2(alpha-beta)^2(alpha+beta) x (x^4 - 1), all n > m, n < 64", all,
                             std::to_string(pairs) + " pairs" + (bad.empty() ? "" : ", first mismatch " + bad)));
  const RationalPoly fac = (x - one) * (x + one) * (x2 + one);
  r.evidence.push_back(exact("x^4 - 1 = (x-1)(x+1)(x^2+1) >= 0 for x >= 1", fac == RationalPoly::monomial(q(1), 4) - one));

  // Exact truncated sums along x = 1, 1.5, ..., 10.
  constexpr long kN = 16;
  Rational prev(-1), worst(-1);
  bool mono = true, first = true;
  for (long k = 0; k <= 18; ++k) {
    const Rational xv = 1 + Rational(k, 2);
    Rational f(0);
    for (long n = 0; n < kN; ++n) {
      for (long m = 0; m < kN; ++m) {
        const Rational p = 2 * n + 1, s = 2 * m + 1;
        f += (1 + xv * xv) / (p * p * p * p * s * s + xv * xv * s * s * s * s * p * p);
      }
    }
    f.canonicalize();
    if (!first) {
      const Rational step = f - prev;
      if (step < 0) mono = false;
      if (worst < 0 || step < worst) worst = step;
    }
    first = false;
    prev = f;
  }
  r.evidence.push_back({"truncated series (16 x 16 terms) nondecreasing on x = 1, 1.5, ..., 10", Method::ExactRational,
                        to_double(worst), mono, "exact rational partial sums"});
  const Rational ph = pi_hi();
  const Rational pi6 = ph * ph * ph * ph * ph * ph;
  r.evidence.push_back(exact_margin("64/pi^4 >= pi^2/24 (pi^6 <= 1536)", 1536 - pi6, "upper end of the pi enclosure"));
  r.evidence.push_back(exact("limit (64/pi^4)(pi^2/8)(pi^4/96) = pi^2/12", q(64) / 8 / 96 == q(1, 12)));
  return r;
}

CaseReport sharpness_thinning(const ReplayOptions& o) {
  CaseReport r{"sharpness-thinning", "isosceles triangles (1/2, b), b in {0.2, 0.1, 0.05}", {}, Verdict::Failed, {}, {}};
  const std::vector<double> bs = {0.2, 0.1, 0.05};
  std::vector<double> F(bs.size()), up(bs.size());
  std::vector<std::string> errors(bs.size());
  parallel_for(bs.size(), o.threads, [&](std::size_t i) {
    try {
      const geometry::Triangle t{0.5, bs[i]};
      F[i] = fem::spectral(t, o.thinning_level).F;
      up[i] = bounds::thinning_upper(0.5 * bs[i], geometry::derive(t).perimeter).value;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const auto& e : errors) {
    if (!e.empty()) {
      r.evidence.push_back({"oracle solves succeed", Method::Oracle, -1.0, false, e});
      return r;
    }
  }
  std::string vals;
  for (std::size_t i = 0; i < bs.size(); ++i) vals += (i ? ", " : "") + fmt(F[i]);
  const double dec = std::min(F[0] - F[1], F[1] - F[2]);
  r.evidence.push_back({"F decreases as b -> 0", Method::Oracle, dec, dec > 0,
                        "F = " + vals + " at max_level " + std::to_string(o.thinning_level)});
  double below = 1e300, above = 1e300;
  std::string caps;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    below = std::min(below, up[i] - F[i]);
    above = std::min(above, F[i] - kPi * kPi / 24);
    caps += (i ? ", " : "") + fmt(up[i]);
  }
  r.evidence.push_back({"F < thinning upper bound", Method::Oracle, below, below > 0, "bounds " + caps});
  r.evidence.push_back({"F > pi^2/24", Method::Oracle, above, above > 0, {}});
  const double cap_dec = std::min(up[0] - up[1], up[1] - up[2]);
  r.evidence.push_back({"thinning upper bound decreases toward pi^2/24", Method::GridModulus, cap_dec, cap_dec > 0, "closed form"});
  return r;
}

}  // namespace

const std::vector<std::string_view>& case_ids() {
  static const std::vector<std::string_view> ids = {"acute-1a",       "acute-1b",         "acute-2",       "obtuse-1",
                                                    "obtuse-2",       "obtuse-3",         "upper-triangle", "upper-tangential",
                                                    "rect-monotone",  "sharpness-thinning"};
  return ids;
}

CaseReport replay_case(std::string_view id, const ReplayOptions& opts) {
  CaseReport r;
  if (id == "acute-1a") r = acute_1a(opts);
  else if (id == "acute-1b") r = acute_1b(opts);
  else if (id == "acute-2") r = acute_2(opts);
  else if (id == "obtuse-1") r = obtuse_1(opts);
  else if (id == "obtuse-2") r = obtuse_2(opts);
  else if (id == "obtuse-3") r = obtuse_3(opts);
  else if (id == "upper-triangle") r = upper_triangle(opts);
  else if (id == "upper-tangential") r = upper_tangential(opts);
  else if (id == "rect-monotone") r = rect_monotone(opts);
  else if (id == "sharpness-thinning") r = sharpness_thinning(opts);
  else throw Error(ErrorCode::UnknownCase, std::string(id));
  finalize(r);
  return r;
}

std::vector<CaseReport> replay_all(const ReplayOptions& opts) {
  std::vector<CaseReport> out;
  for (auto id : case_ids()) out.push_back(replay_case(id, opts));
  return out;
}

}  // namespace polya::harness
