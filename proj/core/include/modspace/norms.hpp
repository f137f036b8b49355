#pragma once

#include <vector>

#include "modspace/exponent.hpp"
#include "modspace/grid.hpp"
#include "modspace/partitions.hpp"
#include "modspace/space_spec.hpp"

namespace modspace {

/// A function whose spectrum leaves the partition's covered band by more than
/// this (relative to the spectral peak) is rejected with BandError.
inline constexpr double kBandTolerance = 1e-10;

/// Boxes and dyadic blocks whose windowed spectrum peaks below this fraction
/// of the spectral peak are treated as empty and skipped.
inline constexpr double kSkipTolerance = 1e-14;

/// Partitions with default (largest admissible) Kmax and J, built once per grid
/// and shared. Safe to call concurrently.
const UniformPartition& uniform_partition(const GridSpec& grid);
const DyadicPartition& dyadic_partition(const GridSpec& grid);

struct BoxTerm {
  Lattice k;
  double norm;  // ||box_k f||_p
};

struct LevelTerm {
  int j;
  double norm;  // ||Delta_j f||_p
};

/// Nonzero box norms in lexicographic order of k.
std::vector<BoxTerm> modulation_terms(const GridFunction& f, const Exponent& p, const UniformPartition& part);
/// Nonzero dyadic block norms in increasing j.
std::vector<LevelTerm> besov_terms(const GridFunction& f, const Exponent& p, const DyadicPartition& part);

/// || (1+|k|)^s ||box_k f||_p ||_{l^q}
double modulation_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s,
                       const UniformPartition& part);
double modulation_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s);

/// || 2^{js} ||Delta_j f||_p ||_{l^q}
double besov_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s, const DyadicPartition& part);
double besov_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s);

/// || ||2^{js} Delta_j f(x)||_{l^q} ||_{L^p}. Throws DomainError for p = inf.
double triebel_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s,
                    const DyadicPartition& part);
double triebel_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s);

/// || F^{-1} (1+|xi|^2)^{s/2} F f ||_r
double sobolev_norm(const GridFunction& f, double s, const Exponent& r);

/// || fhat ||_r as a Riemann sum with weight delta^d per frequency sample.
double fourier_lp_norm(const GridFunction& f, const Exponent& r);

/// Dispatches on the space family.
double space_norm(const GridFunction& f, const SpaceSpec& space);

}  // namespace modspace
