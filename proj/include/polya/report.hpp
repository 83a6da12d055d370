#pragma once

#include <string>
#include <vector>

#include "polya/certify.hpp"
#include "polya/closed_forms.hpp"
#include "polya/fem.hpp"
#include "polya/harness.hpp"

// JSON serialization of the result types. Output carries no timings, so a
// fixed input gives byte-identical text. Non-finite numbers become null.
namespace polya::report {

std::string to_json(const harness::CaseReport& r);
std::string to_json(const std::vector<harness::CaseReport>& reports);
std::string to_json(const fem::SpectralResult& s);
std::string to_json(const harness::SweepSummary& s);
std::string to_json(const harness::RectScan& s);
std::string to_json(const harness::GRemark& g);

/// Series values for R with half-widths (a, b), plus the FEM result when given.
std::string rect_json(const geometry::Rectangle& r, int n_terms, const fem::SpectralResult* fem_result = nullptr);

}  // namespace polya::report
