#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modspace/exponent.hpp"
#include "modspace/rational.hpp"
#include "modspace/space_spec.hpp"

namespace modspace {

/// Outcome of an embedding query.
///
/// `clause` names the theorem clause whose index conditions matched (e.g.
/// "B->M (2)"), or "<pair> none" when an index hypothesis such as p0 <= p
/// failed. `critical_s` is the exact threshold of that clause and `strict`
/// tells whether the smoothness comparison against it is strict.
struct Verdict {
  bool holds = false;
  std::string clause;
  Rational critical_s = 0;
  bool strict = false;
  std::string explanation;
  /// Affine piece of tau/sigma attaining the threshold; empty for the FL pairs.
  std::optional<IndexPiece> piece;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Besov <-> modulation, 0 < all indices <= inf.
Verdict embed_besov_to_mod(const Exponent& p0, const Exponent& q0, const Exponent& p, const Exponent& q,
                           const Rational& s, int d);
Verdict embed_mod_to_besov(const Exponent& p, const Exponent& q, const Exponent& p1, const Exponent& q1,
                           const Rational& s, int d);

// H^s = B^s_{2,2}.
Verdict embed_hs_to_mod(const Exponent& p, const Exponent& q, const Rational& s, int d);
Verdict embed_mod_to_hs(const Exponent& p, const Exponent& q, const Rational& s, int d);

// L^r-Sobolev <-> modulation. Require 1 <= r, p <= inf; throw DomainError otherwise.
Verdict embed_sobolev_to_mod(const Exponent& r, const Exponent& p, const Exponent& q, const Rational& s, int d);
Verdict embed_mod_to_sobolev(const Exponent& p, const Exponent& q, const Exponent& r, const Rational& s, int d);

// F^s_{p,2} <-> M_{p,q} (same p on both sides).
Verdict embed_triebel2_to_mod(const Exponent& p, const Exponent& q, const Rational& s, int d);
Verdict embed_mod_to_triebel2(const Exponent& p, const Exponent& q, const Rational& s, int d);

// F^s_{p0,q} -> M_{p,q} and M_{p,q} -> F^s_{p1,q} (shared q).
Verdict embed_triebel_to_mod(const Exponent& p0, const Exponent& p, const Exponent& q, const Rational& s, int d);
Verdict embed_mod_to_triebel(const Exponent& p, const Exponent& p1, const Exponent& q, const Rational& s, int d);

// Fourier-Lebesgue FL^r <-> M^s_{p,q}.
Verdict embed_mod_to_fourierlp(const Exponent& p, const Exponent& q, const Exponent& r, const Rational& s, int d);
Verdict embed_fourierlp_to_mod(const Exponent& r, const Exponent& p, const Exponent& q, const Rational& s, int d);

/// Routes a (from, to) pair to the matching characterization. Throws
/// UncharacterizedError for pairs without one (including the general
/// F_{p0,q0} -> M_{p,q} case with q0 != q), DomainError outside hypotheses.
Verdict decide(const SpaceSpec& from, const SpaceSpec& to);

/// The oracle directions that can be swept over an index plane.
enum class RegionPair {
  BesovToMod,
  ModToBesov,
  SobolevToMod,
  ModToSobolev,
  TriebelToMod,
  ModToTriebel,
  Triebel2ToMod,
  ModToTriebel2,
  ModToFourier,
  FourierToMod,
};

std::string_view to_string(RegionPair pair);
RegionPair parse_region_pair(std::string_view text);

/// One point of a region sweep. The plane coordinates are x = 1/(first index)
/// and y = 1/q, where the first index is p0 / p1 / r / p depending on the pair.
struct RegionCell {
  Rational x;
  Rational y;
  Verdict verdict;
  std::string piece;
};

struct RegionQuery {
  RegionPair pair = RegionPair::BesovToMod;
  Rational s = 0;
  int d = 1;
  /// The p index for the FL pairs (defaults: 1 for M->FL, inf for FL->M).
  std::optional<Exponent> fixed_p;
};

/// Evaluates the oracle at every (x, y). Coordinates must be >= 0; zero maps to inf.
/// The unplotted indices are pinned so they never bind: the target p equals the
/// source exponent (or vice versa) and, for Besov, q0 = q1 = q.
std::vector<RegionCell> classify_region(const RegionQuery& query, const std::vector<std::pair<Rational, Rational>>& points);

/// Equispaced points covering [0, x_max] x [0, y_max], endpoints included;
/// resolution 1 yields the single point (0, 0).
std::vector<std::pair<Rational, Rational>> region_grid(int resolution, const Rational& x_max, const Rational& y_max);

/// The natural plotting window of each pair: [0,1] for the Sobolev exponent,
/// [0,3/2] otherwise.
std::pair<Rational, Rational> region_extent(RegionPair pair);

}  // namespace modspace
