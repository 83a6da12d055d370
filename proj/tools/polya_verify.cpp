#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polya/certify.hpp"
#include "polya/closed_forms.hpp"
#include "polya/config.hpp"
#include "polya/error.hpp"
#include "polya/fem.hpp"
#include "polya/harness.hpp"
#include "polya/poly.hpp"
#include "polya/report.hpp"

using namespace polya;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for lambda1 T / |D| on triangles, rectangles and sectors"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file overriding grid, terms and levels")->check(CLI::ExistingFile);

  auto* compute = app.add_subcommand("compute", "spectral data of one shape as JSON");
  std::string shape = "triangle";
  double a = 0.5, b = 0.8660254037844386;
  int level = 7, terms = closed_forms::kDefaultTerms;
  bool with_fem = false;
  std::string out;
  compute->add_option("--shape", shape, "triangle or rect")->check(CLI::IsMember({"triangle", "rect"}));
  compute->add_option("--a", a, "apex abscissa, or rectangle half-width");
  compute->add_option("--b", b, "apex height, or rectangle half-height");
  auto* level_opt = compute->add_option("--level", level, "finest FEM level (0..9)");
  auto* terms_opt = compute->add_option("--terms", terms, "series terms per index for rectangles");
  compute->add_flag("--fem", with_fem, "also run the FEM oracle on the rectangle");
  compute->add_option("--out", out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "theorem sweep over the triangle moduli space, CSV");
  std::string grid;
  double bmin = 0.02, bmax = 0.8660254037844386;
  int sweep_level = 7;
  std::string csv_out, summary_out;
  auto* grid_opt = sweep->add_option("--grid", grid, "NAxNB");
  auto* bmin_opt = sweep->add_option("--bmin", bmin);
  auto* bmax_opt = sweep->add_option("--bmax", bmax);
  auto* sweep_level_opt = sweep->add_option("--level", sweep_level, "finest FEM level");
  sweep->add_option("--out", csv_out, "CSV file (default stdout)");
  sweep->add_option("--summary", summary_out, "also write a JSON summary with bound gaps");

  auto* certify_cmd = app.add_subcommand("certify", "certify P <= 0 on (0, dx]");
  std::string poly_path, dx_text;
  int depth = certify::kDefaultMaxDepth;
  certify_cmd->add_option("--poly", poly_path, "JSON array of \"p/q\" coefficients")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--dx", dx_text, "interval length P/Q")->required();
  auto* depth_opt = certify_cmd->add_option("--depth", depth, "maximum subdivision depth");
  certify_cmd->add_option("--out", out, "output file (default stdout)");

  auto* replay = app.add_subcommand("replay", "replay case verification chains");
  std::string case_id;
  bool all = false;
  auto* case_opt = replay->add_option("--case", case_id, "case id");
  auto* all_opt = replay->add_flag("--all", all, "every case");
  case_opt->excludes(all_opt);
  replay->add_option("--out", out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    config::Config cfg;
    if (!config_path.empty()) cfg = config::load(config_path);

    if (*compute) {
      if (cfg.level && level_opt->count() == 0) level = *cfg.level;
      if (cfg.terms && terms_opt->count() == 0) terms = *cfg.terms;
      if (shape == "triangle") {
        emit(report::to_json(fem::spectral(geometry::Triangle{a, b}, level)), out);
      } else {
        const geometry::Rectangle r{a, b};
        if (with_fem) {
          const fem::SpectralResult s = fem::spectral(r, level);
          emit(report::rect_json(r, terms, &s), out);
        } else {
          emit(report::rect_json(r, terms), out);
        }
      }
      return 0;
    }

    if (*sweep) {
      harness::SweepConfig sc;
      config::apply(cfg, sc);
      if (grid_opt->count()) std::tie(sc.na, sc.nb) = config::parse_grid(grid);
      if (bmin_opt->count()) sc.b_min = bmin;
      if (bmax_opt->count()) sc.b_max = bmax;
      if (sweep_level_opt->count()) sc.max_level = sweep_level;
      const auto rows = harness::sweep_triangles(sc);
      emit(harness::sweep_csv(rows), csv_out);
      const auto sum = harness::summarize(rows);
      if (!summary_out.empty()) emit(report::to_json(sum), summary_out);
      std::cerr << sum.rows << " rows, " << sum.enclosure_violations << " enclosure violations, " << sum.solver_failures
                << " solver failures\n";
      return sum.enclosure_violations == 0 && sum.solver_failures == 0 ? 0 : 1;
    }

    if (*certify_cmd) {
      if (cfg.cert_depth && depth_opt->count() == 0) depth = *cfg.cert_depth;
      const poly::RationalPoly p = poly::from_json(slurp(poly_path));
      const Rational dx = parse_rational(dx_text);
      const certify::Certificate c = certify::certify_nonpositive(p, dx, depth);
      emit(certify::to_json(c), out);
      return c.ok() ? 0 : 2;
    }

    if (*replay) {
      harness::ReplayOptions opts;
      config::apply(cfg, opts);
      if (all) {
        const auto reports = harness::replay_all(opts);
        emit(report::to_json(reports), out);
        for (const auto& r : reports) {
          if (r.verdict == harness::Verdict::Failed) return 1;
        }
        return 0;
      }
      if (case_id.empty()) throw Error(ErrorCode::InvalidArgument, "replay needs --case ID or --all");
      const auto r = harness::replay_case(case_id, opts);
      emit(report::to_json(r), out);
      return r.verdict == harness::Verdict::Failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
