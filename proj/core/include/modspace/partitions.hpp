#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/rational.hpp"

namespace modspace {

/// C-infinity step: 1 for t <= e0, 0 for t >= e1, g(1-u)/(g(1-u)+g(u)) in
/// between with u = (t-e0)/(e1-e0) and g(x) = exp(-1/x).
class SmoothProfile {
 public:
  /// Throws std::invalid_argument unless e0 < e1.
  SmoothProfile(double e0, double e1);

  double operator()(double t) const;
  double edge0() const { return e0_; }
  double edge1() const { return e1_; }

 private:
  double e0_;
  double e1_;
};

inline SmoothProfile smooth_profile(double e0, double e1) { return SmoothProfile(e0, e1); }

/// A lattice point of Z^d; the second coordinate is 0 when d = 1.
using Lattice = std::array<std::int64_t, 2>;

/// Euclidean |k|.
double lattice_norm(const Lattice& k, int d);

/// Uniform partition of unity sigma_k(xi) = prod_i s(xi_i - k_i), |k|_inf <= Kmax.
///
/// The one-dimensional profile is s(t) = theta(t) / sum_m theta(t - m) with
/// theta = 1 on [-1/2,1/2] and support [-3/4,3/4], so s = 1 on [-1/4,1/4].
/// Windows are stored once as a tap vector and shifted by k*M samples.
class UniformPartition {
 public:
  /// kmax < 0 picks the largest admissible value. Throws BandError if a
  /// window support k + [-3/4,3/4]^d would leave the resolved band.
  static UniformPartition build(const GridSpec& grid, int kmax = -1);

  /// Largest k whose window support stays strictly inside the band.
  static int max_admissible(const GridSpec& grid);

  /// The one-dimensional profile s(t).
  static double profile(double t);

  const GridSpec& grid() const { return grid_; }
  int kmax() const { return kmax_; }
  /// Taps cover offsets -half_width()..half_width() samples around k*M.
  int half_width() const { return w_; }
  std::span<const double> taps() const { return taps_; }

  /// Sum over |k|_inf <= Kmax equals 1 for |xi|_inf <= covered_radius().
  double covered_radius() const { return kmax_ + 0.25; }

  bool contains(const Lattice& k) const;

  /// All k with |k|_inf <= Kmax in lexicographic order.
  std::vector<Lattice> lattice() const;

  /// Full multiplier array of sigma_k.
  RealVector window(const Lattice& k) const;

  /// sum_k sigma_k at every grid frequency.
  RealVector coverage() const;

  /// sigma_k * fhat on the frequency side. Throws std::out_of_range if k is
  /// outside the partition.
  GridFunction box_spectrum(const GridFunction& spectrum, const Lattice& k) const;

  /// max |sigma_k fhat|, without allocating.
  double box_peak(const GridFunction& spectrum, const Lattice& k) const;

  /// Box operator on any side; the result is on the space side.
  GridFunction box_apply(const GridFunction& f, const Lattice& k) const;

  /// max over grid frequencies of |fhat| * |1 - sum_k sigma_k|, relative to the peak.
  double uncovered_mass(const GridFunction& spectrum) const;

 private:
  template <class Visit>
  void visit_box(const Lattice& k, Visit&& visit) const;

  GridSpec grid_;
  int kmax_ = 0;
  int w_ = 0;
  RealVector taps_;
  RealVector coverage1d_;
};

/// Dyadic partition phi_0 = psi, phi_j = psi(2^-j xi) - psi(2^{1-j} xi), with
/// psi radial, 1 on |xi| <= 5/4 and 0 on |xi| >= 3/2. Then phi_j = 1 on
/// D_j = {3/4 2^j <= |xi| <= 5/4 2^j} for j >= 1.
class DyadicPartition {
 public:
  /// j_max < 0 picks the largest J with (3/2) 2^J <= Omega. Throws BandError
  /// for a J the grid cannot hold.
  static DyadicPartition build(const GridSpec& grid, int j_max = -1);

  static int max_admissible(const GridSpec& grid);

  static double psi(double radius);
  static double phi(int j, double radius);

  const GridSpec& grid() const { return grid_; }
  int levels() const { return j_max_; }

  /// sum_{j <= J} phi_j = 1 for |xi| <= covered_radius().
  double covered_radius() const;

  /// Full multiplier array of phi_j.
  RealVector window(int j) const;

  GridFunction delta_spectrum(const GridFunction& spectrum, int j) const;
  double delta_peak(const GridFunction& spectrum, int j) const;
  /// Result on the space side. Throws std::out_of_range for j outside 0..J.
  GridFunction delta_apply(const GridFunction& f, int j) const;

  /// max over grid frequencies of |fhat| * |1 - sum_j phi_j|, relative to the peak.
  double uncovered_mass(const GridFunction& spectrum) const;

 private:
  void check_level(int j) const;

  GridSpec grid_;
  int j_max_ = 0;
  // Nonzero entries of each window as (flat index, value).
  std::vector<std::vector<std::pair<std::uint32_t, double>>> support_;
};

enum class IndexSetKind { A, B, K };

std::string_view to_string(IndexSetKind kind);

/// A_l: k + [-3/4,3/4]^d inside D_l; B_l: the cube meets D_l;
/// K_t: the cube inside (1/t)[-1,1]^d. Members are sorted lexicographically.
struct LatticeIndexSet {
  IndexSetKind kind = IndexSetKind::A;
  int level = 0;
  Rational t = 0;
  int d = 1;
  std::vector<Lattice> members;
  /// Non-empty when the set is empty and the caller probably wanted members.
  std::string warning;
};

/// Exact membership through the cube's extreme Euclidean distances to the origin.
LatticeIndexSet index_set_a(int level, int d);
LatticeIndexSet index_set_b(int level, int d);
/// Requires 0 < t <= 1; t = 1 gives {0}.
LatticeIndexSet index_set_k(const Rational& t, int d);

}  // namespace modspace
