#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modspace/families.hpp"
#include "modspace/grid.hpp"
#include "modspace/oracle.hpp"
#include "modspace/space_spec.hpp"

namespace modspace {

/// Exact slope of log2(||f_l||_target / ||f_l||_source) in l for a family
/// whose two-sided norm asymptotics are known. The smoothness entering the
/// formulas is the difference between the two spaces. Throws
/// UncharacterizedError for pairs outside the catalogue.
Rational predicted_slope(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family);

struct ExperimentOptions {
  int level_min = 4;
  int level_max = 8;
  double tolerance = 0.2;    // sharpness: |fitted - predicted| bound
  double spread_bound = 8;   // boundedness: max ratio / min ratio bound
  double comb_width = 1.0;   // LatticeComb only
  int refine = 1;            // multiplies the oversampling factor M
  std::optional<GridSpec> grid;  // overrides grid_for_family
};

struct LevelRow {
  int level;
  double source_norm;
  double target_norm;
  double ratio;
  double log2_ratio;
};

enum class ExperimentMode { Sharpness, Boundedness };

struct ExperimentReport {
  ExperimentMode mode = ExperimentMode::Sharpness;
  SpaceSpec source;
  SpaceSpec target;
  FamilyKind family = FamilyKind::Annulus;
  double comb_width = 1.0;
  GridSpec grid;
  int level_min = 0;
  int level_max = 0;
  std::vector<LevelRow> rows;
  double fitted_slope = 0.0;
  std::optional<Rational> predicted_slope;
  std::optional<Verdict> verdict;  // absent for uncharacterized pairs
  double tolerance = 0.0;
  double spread = 0.0;
  double spread_bound = 0.0;
  bool pass = false;
};

/// Least-squares slope of y against x. Throws std::invalid_argument for fewer
/// than two points.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Norm ratios per level; fitted slope compared with predicted_slope.
ExperimentReport run_sharpness(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family,
                               const ExperimentOptions& options = {});

/// Norm ratios per level; pass iff the ratio spread stays within the bound.
/// Throws std::invalid_argument when the oracle says the embedding fails.
ExperimentReport run_boundedness(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family,
                                 const ExperimentOptions& options = {});

struct TailReport {
  Exponent q{1};
  int d = 1;
  std::vector<Rational> t;
  std::vector<std::size_t> sizes;  // |K_t|
  std::vector<double> values;      // ||<k>^{-d/q}||_{l^q(K_t)}
  double growth = 0.0;             // last / first
  double factor = 0.0;
  double fit_a = 0.0;              // values ~ a + b log(1/t)
  double fit_b = 0.0;
  double max_residual = 0.0;       // relative
  double residual_bound = 0.0;
  bool monotone = false;
  bool pass = false;
};

/// t_list in decreasing order of t. Requires 0 < q < inf.
TailReport run_weighted_tail(const Exponent& q, const std::vector<Rational>& t_list, int d = 1, double factor = 2.0,
                             double residual_bound = 0.05);

struct NecessityReport {
  Exponent r{1};
  Exponent q{1};
  int d = 1;
  Rational s;
  Rational critical_s;  // d |1/r - 1/q|
  Rational exponent;    // e in sum <k>^{-e}
  std::vector<std::int64_t> cubes;
  std::vector<double> partial_sums;
  std::vector<double> increments;  // partial_sums[i] - partial_sums[i-1]
  double tail_bound = 0.0;         // bound on the tail beyond the last cube; inf when divergent
  double tail_tolerance = 0.0;
  bool converges = false;  // tail_bound <= tail_tolerance
  bool diverges = false;   // e <= d, monotone growth, increments not decaying
};

/// Partial sums of <k>^{-e} over cubes |k|_inf <= K with e = s r (q/r)' for
/// r < q, or e = s q (r/q)' for q < r. Cubes must increase.
NecessityReport run_discrete_necessity(const Exponent& r, const Exponent& q, const Rational& s, int d,
                                       const std::vector<std::int64_t>& cubes, double tail_tolerance = 1e-3);

std::string_view to_string(ExperimentMode mode);

}  // namespace modspace
