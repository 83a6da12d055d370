#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polya/fem.hpp"
#include "polya/geometry.hpp"
#include "polya/interval.hpp"

namespace polya::harness {

enum class Method { ExactRational, Certificate, GridModulus, Oracle };
enum class Verdict { Verified, VerifiedNumerically, Failed };

std::string_view to_string(Method m);
std::string_view to_string(Verdict v);

struct Evidence {
  std::string check;
  Method method = Method::ExactRational;
  double worst_margin = 0.0;  ///< >= 0 when the check passes
  bool passed = false;
  std::string detail;
};

struct CaseReport {
  std::string case_id;
  std::string region;
  std::vector<Evidence> evidence;
  Verdict verdict = Verdict::Failed;
  std::vector<std::string> notes;
  std::optional<std::string> witness;  ///< first failing check, if any
};

/// Failed if any item failed; Verified only if every item is exact-rational
/// or certificate; otherwise VerifiedNumerically.
Verdict derive_verdict(const std::vector<Evidence>& evidence);
void finalize(CaseReport& report);

/// Derived quantities used by the thin-triangle cases. a_b and x_b exist
/// only for b <= 1/2.
struct CaseContext {
  geometry::Chart chart = geometry::Chart::LongestUnit;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> gamma_b;  ///< atan(1/b), right-triangle apex angle in the acute chart
  std::optional<double> beta_b;   ///< atan(b / (1 - a_b))
  std::optional<double> a_b;      ///< 1/2 - sqrt(1/4 - b^2)
  std::optional<double> x_b;      ///< (1 - a_b) / b
};

CaseContext make_context(geometry::Chart chart, double a, double b);

/// Named scalar functions of the lower-bound cases. Two-variable functions
/// read (a, b); one-variable functions read their argument from `a`.
/// Names: "g" (acute 1a), "f_acute_1b" (x), "f_acute_high" (x, the
/// monotone sector product), "f_mgeq3" (b), "h_mgeq3" (x), "g_mgeq3" (x),
/// "f_obtuse_1", "f_obtuse_2", "prefactor_obtuse_3" (b).
/// Throws OutOfRegion or UnknownName.
double case_function(std::string_view name, double a, double b = 0.0);
/// Exact value for the rational ones ("g", "f_obtuse_1", "f_obtuse_2").
Rational case_function_exact(std::string_view name, const Rational& a, const Rational& b);
const std::vector<std::string_view>& case_function_names();

struct ReplayOptions {
  int upper_samples = 500;
  int upper_level = 5;
  int thinning_level = 9;
  int cert_depth = 40;
  unsigned threads = 0;  ///< 0: fem::thread_budget()
};

const std::vector<std::string_view>& case_ids();
/// Throws UnknownCase.
CaseReport replay_case(std::string_view case_id, const ReplayOptions& opts = {});
std::vector<CaseReport> replay_all(const ReplayOptions& opts = {});

struct SweepConfig {
  int na = 60;
  int nb = 60;
  double b_min = 0.02;
  double b_max = 0.8660254037844386;  ///< sqrt(3)/2
  int max_level = 7;
  geometry::Chart chart = geometry::Chart::LongestUnit;
  unsigned threads = 0;
};

struct BoundGap {
  std::string name;
  double value = 0.0;  ///< bound on F
  double gap = 0.0;    ///< value - F; a lower bound needs gap <= 0
};

struct SweepRow {
  double a = 0.0;
  double b = 0.0;
  std::string cls;
  double lambda1 = 0.0;
  double T = 0.0;
  double torsion_max = 0.0;
  double F = 0.0;
  double margin_low = 0.0;   ///< F - pi^2/24
  double margin_high = 0.0;  ///< pi^2/12 - F
  double error_gauge = 0.0;
  std::vector<BoundGap> lower_bounds;
  BoundGap upper_chain;
  std::string error;  ///< non-empty when the oracle failed on this row
  bool ok() const { return error.empty() && margin_low > 0.0 && margin_high > 0.0; }
};

/// Admissible grid points of the chosen chart, a in [0, 1/2], b in [b_min, b_max].
std::vector<std::pair<double, double>> sweep_points(const SweepConfig& cfg);
/// Rows in grid order (a-major), computed in parallel.
std::vector<SweepRow> sweep_triangles(const SweepConfig& cfg);
/// One row: oracle plus all applicable analytic lower bounds.
SweepRow sweep_row(double a, double b, int max_level);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t enclosure_violations = 0;
  std::size_t solver_failures = 0;
  double worst_lower_gap = -1e300;  ///< max over rows and bounds of bound - F
  std::string worst_lower_name;
  double worst_upper_gap = 1e300;   ///< min over rows of upper - F
  double min_margin_low = 1e300;
  double min_margin_high = 1e300;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

struct RectScan {
  std::vector<double> a_values;
  std::vector<double> F;
  std::vector<double> tail;
  bool nondecreasing = false;
  bool first_is_min = false;
  bool above_floor = false;  ///< every F >= 64/pi^4
  double last_gap = 0.0;     ///< pi^2/12 - F(last)
  std::optional<std::size_t> first_drop;
};

/// rect_F(R_{a,1}) along sorted a >= 1, nondecreasing within twice the tails.
RectScan rect_monotonicity_scan(const std::vector<double>& a_values, int n_terms = 64);

struct GRemark {
  std::vector<double> a_values;
  std::vector<double> G;
  double G_square = 0.0;
  bool square_above_145 = false;
  double a_threshold = 0.0;       ///< sqrt(5 pi^2 / (58 - 5 pi^2))
  bool tail_holds = false;        ///< (pi^2/8)(1 + 1/a^2) <= 1.45 for every grid a >= a_threshold
  bool square_is_max = false;     ///< G(a) <= G(1) on the grid
  double bound_at_238 = 0.0;      ///< (pi^2/8)(1 + 1/2.38^2)
};

GRemark g_remark_check();

}  // namespace polya::harness
