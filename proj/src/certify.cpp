#include "polya/certify.hpp"

#include <json.hpp>

#include "polya/error.hpp"

namespace polya::certify {
namespace {

struct Search {
  int max_depth;
  Certificate cert;

  // P is the original polynomial shifted to `offset`; certify on (0, width].
  bool run(const poly::RationalPoly& p, const Rational& offset, const Rational& width, int depth) {
    Rational c0 = reduced_constant(p, width);
    if (c0 <= 0) {
      cert.intervals.push_back({offset, offset + width, c0});
      cert.depth = std::max(cert.depth, depth);
      return true;
    }
    if (depth >= max_depth) {
      cert.failure_witness = Witness{offset, offset + width, c0};
      cert.depth = std::max(cert.depth, depth);
      return false;
    }
    Rational half = width / 2;
    if (!run(p, offset, half, depth + 1)) return false;
    return run(poly::taylor_shift(p, half), offset + half, half, depth + 1);
  }
};

}  // namespace

Rational reduced_constant(const poly::RationalPoly& p, const Rational& dx) {
  const auto& a = p.coeffs();
  if (a.empty()) return Rational(0);
  Rational c = a.back();
  for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) {
    c = a[i] + (c > 0 ? Rational(dx * c) : Rational(0));
  }
  c.canonicalize();
  return c;
}

Certificate certify_nonpositive(const poly::RationalPoly& p, const Rational& dx, int max_depth) {
  if (dx <= 0) throw Error(ErrorCode::ZeroWidthInterval, "certification interval must have positive width");
  if (max_depth < 0) throw Error(ErrorCode::InvalidArgument, "max_depth must be >= 0");
  Rational width = dx;
  width.canonicalize();
  Search s{max_depth, {}};
  s.cert.dx = width;
  bool ok = s.run(p, Rational(0), width, 0);
  s.cert.status = ok ? Status::Certified : Status::DepthExhausted;
  return s.cert;
}

bool tiles(const Certificate& c) {
  if (c.intervals.empty()) return false;
  Rational at(0);
  for (const auto& piece : c.intervals) {
    if (piece.lo != at || piece.hi <= piece.lo) return false;
    at = piece.hi;
  }
  return at == c.dx;
}

std::string to_json(const Certificate& c) {
  nlohmann::json j;
  j["status"] = c.ok() ? "Certified" : "DepthExhausted";
  j["dx"] = to_string(c.dx);
  j["depth"] = c.depth;
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : c.intervals) {
    pieces.push_back({{"lo", to_string(p.lo)}, {"hi", to_string(p.hi)}, {"reduced_constant", to_string(p.reduced_constant)}});
  }
  j["intervals"] = pieces;
  if (c.failure_witness) {
    const auto& w = *c.failure_witness;
    j["failure_witness"] = {{"lo", to_string(w.lo)}, {"hi", to_string(w.hi)}, {"reduced_constant", to_string(w.reduced_constant)}};
  } else {
    j["failure_witness"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace polya::certify
