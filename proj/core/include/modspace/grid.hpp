#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string_view>

#include "modspace/aligned.hpp"
#include "modspace/exponent.hpp"

namespace modspace {

/// Uniform periodic grid on the torus [0, P)^d with P = 2*pi*M.
///
/// Frequencies live on the lattice (1/M) Z^d; the resolved band is
/// [-Omega, Omega)^d with Omega = N / (2M). Arrays are row-major with the FFT
/// index order on each axis (non-negative frequencies first).
struct GridSpec {
  int d = 1;
  std::size_t n = 0;
  int m = 8;

  /// Validates d in {1,2}, N a power of two (>= 2) and M >= 8.
  static GridSpec make(int d, std::size_t n, int m);

  /// Smallest power-of-two N with Omega >= omega.
  static GridSpec covering(int d, int m, double omega);

  double period() const;   // P
  double spacing() const;  // h = P / N
  double delta() const { return 1.0 / m; }
  double omega() const { return static_cast<double>(n) / (2.0 * m); }
  std::size_t size() const { return d == 1 ? n : n * n; }

  /// Signed lattice index of FFT position i along one axis.
  std::ptrdiff_t signed_index(std::size_t i) const {
    return i < n / 2 ? static_cast<std::ptrdiff_t>(i) : static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(n);
  }
  /// FFT position of a signed lattice index (wraps modulo N).
  std::size_t wrap_index(std::ptrdiff_t j) const {
    const auto nn = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((j % nn) + nn) % nn);
  }
  double frequency(std::size_t i) const { return static_cast<double>(signed_index(i)) / m; }
  double position(std::size_t i) const { return static_cast<double>(i) * spacing(); }

  /// Spatial cell volume h^d, the Riemann weight of space-side sums.
  double space_cell() const;
  /// Frequency cell volume delta^d.
  double frequency_cell() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Side { Space, Frequency };

std::string_view to_string(Side side);

/// Samples of a periodic function on one side of the transform.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(const GridSpec& spec, Side side);
  /// Throws ShapeError when data.size() != spec.size().
  GridFunction(const GridSpec& spec, Side side, ComplexVector data);

  const GridSpec& spec() const { return spec_; }
  Side side() const { return side_; }
  std::size_t size() const { return data_.size(); }

  std::span<const Complex> values() const { return data_; }
  std::span<Complex> values() { return data_; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }

  /// Largest sample modulus.
  double peak() const;

 private:
  GridSpec spec_;
  Side side_ = Side::Space;
  ComplexVector data_;
};

/// Forward: fhat = h^d * DFT(f). Inverse: f = P^{-d} * IDFT(fhat). With these
/// weights the frequency samples approximate the continuous transform
/// F f(xi) = int f(x) e^{-i x xi} dx at xi in (1/M) Z^d, and the round trip is
/// the identity. No-op copy when f is already on the requested side.
GridFunction transform(const GridFunction& f, Side target);
inline GridFunction to_space(const GridFunction& f) { return transform(f, Side::Space); }
inline GridFunction to_frequency(const GridFunction& f) { return transform(f, Side::Frequency); }

/// F^{-1}(m * F f), returned on the space side. m has one entry per grid
/// frequency. Throws ShapeError on size mismatch.
GridFunction apply_multiplier(const GridFunction& f, std::span<const double> m);
GridFunction apply_multiplier(const GridFunction& f, std::span<const Complex> m);

/// (sum_i |z_i|^p * cell)^{1/p}, or max |z_i| for p = inf. Quasi-norm for p < 1.
/// Throws std::invalid_argument on non-finite input.
double lp_sum(std::span<const Complex> z, double cell, const Exponent& p);

/// Riemann-sum L^p quasi-norm of a space-side function.
double lp_norm(const GridFunction& f, const Exponent& p);

/// (sum_k (w(k) a_k)^q)^{1/q}, sup for q = inf. An empty weight means w = 1.
double lq_seq_norm(std::span<const double> a, const Exponent& q,
                   const std::function<double(std::size_t)>& weight = {});

/// Largest |fhat| at frequencies with |xi_i| > radius on some axis, divided by
/// the spectrum's peak (0 for the zero function).
double band_excess(const GridFunction& spectrum, double radius);

/// Throws BandError unless the spectrum vanishes (to rel_tol of its peak)
/// outside the cube |xi|_inf <= Omega (1 - 2/N).
void require_band_margin(const GridFunction& spectrum, double rel_tol = 1e-12);

/// Writes `path` as raw little-endian (re, im) float64 pairs in row-major
/// order, and `path` + ".json" holding {d, N, M, P, side}.
void write_binary(const GridFunction& f, const std::filesystem::path& path);
GridFunction read_binary(const std::filesystem::path& path);

}  // namespace modspace
