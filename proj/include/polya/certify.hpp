#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polya/poly.hpp"

namespace polya::certify {

/// One certified piece: P <= reduced_constant <= 0 on (lo, hi].
struct Piece {
  Rational lo;
  Rational hi;
  Rational reduced_constant;
};

struct Witness {
  Rational lo;
  Rational hi;
  Rational reduced_constant;  ///< > 0; not a proof that P is positive anywhere
};

enum class Status { Certified, DepthExhausted };

struct Certificate {
  Status status = Status::Certified;
  std::vector<Piece> intervals;  ///< ordered left to right
  int depth = 0;                 ///< deepest subdivision used
  std::optional<Witness> failure_witness;
  Rational dx;

  bool ok() const { return status == Status::Certified; }
};

inline constexpr int kDefaultMaxDepth = 40;

/// Upper bound for P on (0, dx] obtained by folding positive tails:
/// c_n = a_n, c_i = a_i + dx max(c_{i+1}, 0); returns c_0.
Rational reduced_constant(const poly::RationalPoly& p, const Rational& dx);

/// Certifies P(x) <= 0 on (0, dx], halving and re-centring on failure.
/// Throws ZeroWidthInterval when dx <= 0.
Certificate certify_nonpositive(const poly::RationalPoly& p, const Rational& dx, int max_depth = kDefaultMaxDepth);

/// True when the pieces tile (0, dx] exactly.
bool tiles(const Certificate& c);

std::string to_json(const Certificate& c);

}  // namespace polya::certify
