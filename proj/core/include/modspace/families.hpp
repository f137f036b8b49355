#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/partitions.hpp"

namespace modspace {

/// Frequency profiles used by the generators.
///
/// The narrow bump is 1 on [-1/16,1/16]^d and supported in [-1/8,1/8]^d; it
/// plays both roles of the pair (the spectrum of the space-side bump and the
/// spectrally supported bump). The wide kernel is 1 on [-1,1]^d and supported
/// in [-9/8,9/8]^d.
struct BumpPair {
  static double narrow(double xi);
  static double wide(double xi);
  static double narrow(double xi0, double xi1) { return narrow(xi0) * narrow(xi1); }
  static double wide(double xi0, double xi1) { return wide(xi0) * wide(xi1); }
};

enum class FamilyKind { Dilation, SingleBox, Annulus, LatticeComb, WeightedSum, ModulatedTrain, DilatedKernel };

std::string_view to_string(FamilyKind kind);
/// Accepts the lower-case names: dilation, single-box, annulus, comb, weighted-sum, train, dilated-kernel.
FamilyKind parse_family_kind(std::string_view text);

/// f_lambda with spectrum lambda^{-d} eta(xi / lambda), i.e. f(lambda x).
/// Requires 0 < lambda <= 1 and M >= 32 / lambda (eta's plateau gets at least
/// two samples per unit of 1/16); throws ResolutionError otherwise.
GridFunction family_dilation(const GridSpec& grid, double lambda);

/// Spectrum eta(xi - k_l) with k_l the lexicographically smallest member of A_l.
GridFunction family_single_box(const GridSpec& grid, int level);
Lattice single_box_center(int level, int d);

/// Spectrum phi_l.
GridFunction family_annulus(const GridSpec& grid, int level);

/// sum_{k in A_l} c_k e^{ikx} eta((x-k)/a): spectrum
/// sum_k c_k e^{-ik(xi-k)} a^d eta(a(xi-k)). Signs default to 1. Requires
/// 0 < a <= 1 and P >= 4 max|k|; throws BandError otherwise.
GridFunction family_lattice_comb(const GridSpec& grid, int level, double a = 1.0,
                                 std::span<const double> signs = {});

/// sum_l c_l f_l over distinct levels for base kind SingleBox, Annulus or
/// LatticeComb. Throws std::invalid_argument on repeated levels (spectral
/// overlap beyond adjacency).
GridFunction family_weighted_sum(const GridSpec& grid, FamilyKind base,
                                 const std::vector<std::pair<int, double>>& coefficients, double a = 1.0);

/// sum_{k in S} a_k e^{ikx} eta(x-k). Requires P >= 4 max|k|.
GridFunction family_modulated_train(const GridSpec& grid, const std::vector<std::pair<Lattice, Complex>>& terms);

/// t^{-d} eta(x/t) for the wide kernel: spectrum w(t xi), equal to 1 on
/// (1/t)[-1,1]^d. Requires 0 < t <= 1 and the support inside the band margin.
GridFunction family_dilated_kernel(const GridSpec& grid, double t);

/// Random trigonometric polynomial: independent complex Gaussian coefficients
/// at every grid frequency with |xi|_inf <= radius, zero elsewhere.
/// Deterministic in the seed.
GridFunction random_band_limited(const GridSpec& grid, double radius, std::uint64_t seed);

/// The family member at level l: lambda = t = 2^-l for the dilation kinds,
/// level l for the others. Comb width a applies to LatticeComb only.
GridFunction family_member(const GridSpec& grid, FamilyKind kind, int level, double a = 1.0);

/// Largest Euclidean |xi| in the spectral support of the member at `level`.
double family_support_radius(FamilyKind kind, int level, int d, double a = 1.0);

/// A grid that resolves every member up to max_level: windows fit in the band,
/// the dyadic partition reaches past the support, the comb has P >= 4 max|k|,
/// the dilation has M >= 32 / lambda. `refine` multiplies M (and with it N).
GridSpec grid_for_family(FamilyKind kind, int max_level, int d, double a = 1.0, int refine = 1);

}  // namespace modspace
