#include "polya/report.hpp"

#include <cmath>
#include <json.hpp>

namespace polya::report {
namespace {

using nlohmann::ordered_json;

ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json nums(const std::vector<double>& xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

ordered_json case_json(const harness::CaseReport& r) {
  ordered_json j;
  j["case_id"] = r.case_id;
  j["region"] = r.region;
  j["verdict"] = std::string(harness::to_string(r.verdict));
  ordered_json ev = ordered_json::array();
  for (const auto& e : r.evidence) {
    ordered_json x;
    x["check"] = e.check;
    x["method"] = std::string(harness::to_string(e.method));
    x["worst_margin"] = num(e.worst_margin);
    x["passed"] = e.passed;
    if (!e.detail.empty()) x["detail"] = e.detail;
    ev.push_back(std::move(x));
  }
  j["evidence"] = std::move(ev);
  j["notes"] = r.notes;
  j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
  return j;
}

ordered_json spectral_json(const fem::SpectralResult& s) {
  ordered_json j;
  j["lambda1"] = num(s.lambda1);
  j["T"] = num(s.T);
  j["torsion_max"] = num(s.torsion_max);
  j["F"] = num(s.F);
  j["area"] = num(s.area);
  j["max_level"] = s.max_level;
  j["h_sequence"] = nums(s.h_sequence);
  j["lambda_levels"] = nums(s.lambda_levels);
  j["T_levels"] = nums(s.T_levels);
  j["error_gauge"] = num(s.error_gauge);
  j["lambda_gauge"] = num(s.lambda_gauge);
  j["T_gauge"] = num(s.T_gauge);
  return j;
}

ordered_json series_json(const closed_forms::SeriesValue& v) {
  return {{"value", num(v.value)}, {"tail_bound", num(v.tail_bound)}, {"terms_used", v.terms_used}};
}

}  // namespace

std::string to_json(const harness::CaseReport& r) { return case_json(r).dump(2); }

std::string to_json(const std::vector<harness::CaseReport>& reports) {
  ordered_json a = ordered_json::array();
  for (const auto& r : reports) a.push_back(case_json(r));
  return a.dump(2);
}

std::string to_json(const fem::SpectralResult& s) { return spectral_json(s).dump(2); }

std::string to_json(const harness::SweepSummary& s) {
  ordered_json j;
  j["rows"] = s.rows;
  j["enclosure_violations"] = s.enclosure_violations;
  j["solver_failures"] = s.solver_failures;
  j["worst_lower_gap"] = num(s.worst_lower_gap);
  j["worst_lower_name"] = s.worst_lower_name;
  j["worst_upper_gap"] = num(s.worst_upper_gap);
  j["min_margin_low"] = num(s.min_margin_low);
  j["min_margin_high"] = num(s.min_margin_high);
  return j.dump(2);
}

std::string to_json(const harness::RectScan& s) {
  ordered_json j;
  j["a_values"] = nums(s.a_values);
  j["F"] = nums(s.F);
  j["tail"] = nums(s.tail);
  j["nondecreasing"] = s.nondecreasing;
  j["first_is_min"] = s.first_is_min;
  j["above_floor"] = s.above_floor;
  j["last_gap"] = num(s.last_gap);
  j["first_drop"] = s.first_drop ? ordered_json(*s.first_drop) : ordered_json(nullptr);
  return j.dump(2);
}

std::string to_json(const harness::GRemark& g) {
  ordered_json j;
  j["a_values"] = nums(g.a_values);
  j["G"] = nums(g.G);
  j["G_square"] = num(g.G_square);
  j["square_above_145"] = g.square_above_145;
  j["a_threshold"] = num(g.a_threshold);
  j["tail_holds"] = g.tail_holds;
  j["square_is_max"] = g.square_is_max;
  j["bound_at_238"] = num(g.bound_at_238);
  return j.dump(2);
}

std::string rect_json(const geometry::Rectangle& r, int n_terms, const fem::SpectralResult* fem_result) {
  ordered_json j;
  j["a"] = num(r.a);
  j["b"] = num(r.b);
  j["terms"] = n_terms;
  j["lambda1"] = num(closed_forms::rect_lambda1(r));
  j["T"] = series_json(closed_forms::rect_torsion(r, n_terms));
  j["F"] = series_json(closed_forms::rect_F(r, n_terms));
  j["center_torsion"] = series_json(closed_forms::rect_center_torsion(r, n_terms));
  if (fem_result) j["fem"] = spectral_json(*fem_result);
  return j.dump(2);
}

}  // namespace polya::report
