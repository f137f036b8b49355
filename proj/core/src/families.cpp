#include "modspace/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "modspace/errors.hpp"

namespace modspace {

namespace {

const SmoothProfile kNarrow(1.0 / 16.0, 1.0 / 8.0);
const SmoothProfile kWide(1.0, 9.0 / 8.0);

// Evaluates fn(xi0, xi1) at every grid frequency (xi1 = 0 in d = 1).
template <class Fn>
GridFunction synthesize(const GridSpec& g, Fn&& fn) {
  GridFunction spectrum(g, Side::Frequency);
  if (g.d == 1) {
    for (std::size_t i = 0; i < g.n; ++i) spectrum[i] = fn(g.frequency(i), 0.0);
  } else {
    for (std::size_t i = 0; i < g.n; ++i) {
      const double a = g.frequency(i);
      for (std::size_t j = 0; j < g.n; ++j) spectrum[i * g.n + j] = fn(a, g.frequency(j));
    }
  }
  return spectrum;
}

// Adds coeff * e^{-ik(xi-k)} a^d eta(a(xi-k)) around lattice point k.
void add_modulated_bump(GridFunction& spectrum, const Lattice& k, Complex coeff, double a) {
  const GridSpec& g = spectrum.spec();
  const auto reach = static_cast<std::int64_t>(std::ceil(g.m / (8.0 * a)));
  const double scale = std::pow(a, g.d);
  const double m = g.m;
  auto offset_term = [&](std::int64_t o, std::int64_t kk) {
    const double off = static_cast<double>(o) / m;
    const double amp = BumpPair::narrow(a * off);
    return std::pair{amp, -static_cast<double>(kk) * off};
  };
  if (g.d == 1) {
    for (std::int64_t o = -reach; o <= reach; ++o) {
      const auto [amp, phase] = offset_term(o, k[0]);
      if (amp == 0.0) continue;
      spectrum[g.wrap_index(k[0] * g.m + o)] += coeff * scale * amp * std::polar(1.0, phase);
    }
    return;
  }
  for (std::int64_t o0 = -reach; o0 <= reach; ++o0) {
    const auto [amp0, phase0] = offset_term(o0, k[0]);
    if (amp0 == 0.0) continue;
    const std::size_t row = g.wrap_index(k[0] * g.m + o0) * g.n;
    for (std::int64_t o1 = -reach; o1 <= reach; ++o1) {
      const auto [amp1, phase1] = offset_term(o1, k[1]);
      if (amp1 == 0.0) continue;
      spectrum[row + g.wrap_index(k[1] * g.m + o1)] += coeff * scale * amp0 * amp1 * std::polar(1.0, phase0 + phase1);
    }
  }
}

void require_period(const GridSpec& g, double max_k) {
  if (g.period() < 4.0 * max_k) {
    throw BandError("period P=" + std::to_string(g.period()) + " is below 4 max|k| = " + std::to_string(4.0 * max_k));
  }
}

GridFunction finish(const GridFunction& spectrum) {
  require_band_margin(spectrum);
  return to_space(spectrum);
}

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

double BumpPair::narrow(double xi) { return kNarrow(std::abs(xi)); }
double BumpPair::wide(double xi) { return kWide(std::abs(xi)); }

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Dilation: return "dilation";
    case FamilyKind::SingleBox: return "single-box";
    case FamilyKind::Annulus: return "annulus";
    case FamilyKind::LatticeComb: return "comb";
    case FamilyKind::WeightedSum: return "weighted-sum";
    case FamilyKind::ModulatedTrain: return "train";
    case FamilyKind::DilatedKernel: return "dilated-kernel";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view text) {
  for (auto kind : {FamilyKind::Dilation, FamilyKind::SingleBox, FamilyKind::Annulus, FamilyKind::LatticeComb,
                    FamilyKind::WeightedSum, FamilyKind::ModulatedTrain, FamilyKind::DilatedKernel}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

GridFunction family_dilation(const GridSpec& grid, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("dilation needs 0 < lambda <= 1");
  if (grid.m * lambda < 32.0) {
    throw ResolutionError("dilation by " + std::to_string(lambda) + " needs M >= " + std::to_string(32.0 / lambda));
  }
  const double norm = std::pow(lambda, -grid.d);
  return finish(synthesize(grid, [&](double a, double b) {
    return Complex(norm * BumpPair::narrow(a / lambda) * (grid.d == 2 ? BumpPair::narrow(b / lambda) : 1.0), 0.0);
  }));
}

Lattice single_box_center(int level, int d) {
  const auto set = index_set_a(level, d);
  if (set.members.empty()) throw std::invalid_argument("A_" + std::to_string(level) + " is empty");
  return set.members.front();
}

GridFunction family_single_box(const GridSpec& grid, int level) {
  const Lattice k = single_box_center(level, grid.d);
  GridFunction spectrum(grid, Side::Frequency);
  // eta(xi - k) without the modulation phase.
  const auto reach = static_cast<std::int64_t>(std::ceil(grid.m / 8.0));
  for (std::int64_t o0 = -reach; o0 <= reach; ++o0) {
    const double a0 = BumpPair::narrow(static_cast<double>(o0) / grid.m);
    if (a0 == 0.0) continue;
    const std::size_t i0 = grid.wrap_index(k[0] * grid.m + o0);
    if (grid.d == 1) {
      spectrum[i0] = a0;
      continue;
    }
    for (std::int64_t o1 = -reach; o1 <= reach; ++o1) {
      const double a1 = BumpPair::narrow(static_cast<double>(o1) / grid.m);
      if (a1 != 0.0) spectrum[i0 * grid.n + grid.wrap_index(k[1] * grid.m + o1)] = a0 * a1;
    }
  }
  return finish(spectrum);
}

GridFunction family_annulus(const GridSpec& grid, int level) {
  if (level < 0) throw std::invalid_argument("annulus level must be >= 0");
  return finish(synthesize(grid, [&](double a, double b) {
    return Complex(DyadicPartition::phi(level, std::hypot(a, b)), 0.0);
  }));
}

GridFunction family_lattice_comb(const GridSpec& grid, int level, double a, std::span<const double> signs) {
  if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("comb width a must lie in (0, 1]");
  const auto set = index_set_a(level, grid.d);
  if (set.members.empty()) throw std::invalid_argument("A_" + std::to_string(level) + " is empty");
  if (!signs.empty() && signs.size() != set.members.size()) {
    throw ShapeError("comb needs one coefficient per member of A_l (" + std::to_string(set.members.size()) + ")");
  }
  double max_k = 0.0;
  for (const auto& k : set.members) max_k = std::max(max_k, lattice_norm(k, grid.d));
  require_period(grid, max_k);
  GridFunction spectrum(grid, Side::Frequency);
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    add_modulated_bump(spectrum, set.members[i], signs.empty() ? 1.0 : signs[i], a);
  }
  return finish(spectrum);
}

GridFunction family_weighted_sum(const GridSpec& grid, FamilyKind base,
                                 const std::vector<std::pair<int, double>>& coefficients, double a) {
  if (base != FamilyKind::SingleBox && base != FamilyKind::Annulus && base != FamilyKind::LatticeComb) {
    throw std::invalid_argument("weighted sums take single-box, annulus or comb members");
  }
  std::set<int> seen;
  for (const auto& [level, c] : coefficients) {
    if (!seen.insert(level).second) {
      throw std::invalid_argument("level " + std::to_string(level) + " repeated: spectra would overlap");
    }
  }
  GridFunction total(grid, Side::Frequency);
  for (const auto& [level, c] : coefficients) {
    if (c == 0.0) continue;
    const GridFunction member = to_frequency(family_member(grid, base, level, a));
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += c * member[i];
  }
  return to_space(total);
}

GridFunction family_modulated_train(const GridSpec& grid, const std::vector<std::pair<Lattice, Complex>>& terms) {
  double max_k = 0.0;
  for (const auto& [k, c] : terms) max_k = std::max(max_k, lattice_norm(k, grid.d));
  require_period(grid, max_k);
  GridFunction spectrum(grid, Side::Frequency);
  for (const auto& [k, c] : terms) {
    if (c != Complex(0.0)) add_modulated_bump(spectrum, k, c, 1.0);
  }
  return finish(spectrum);
}

GridFunction family_dilated_kernel(const GridSpec& grid, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("dilated kernel needs 0 < t <= 1");
  return finish(synthesize(grid, [&](double a, double b) {
    return Complex(BumpPair::wide(t * a) * (grid.d == 2 ? BumpPair::wide(t * b) : 1.0), 0.0);
  }));
}

GridFunction random_band_limited(const GridSpec& grid, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  GridFunction spectrum(grid, Side::Frequency);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double a = grid.frequency(grid.d == 1 ? i : i / grid.n);
    const double b = grid.d == 1 ? 0.0 : grid.frequency(i % grid.n);
    // Draw unconditionally so the sequence does not depend on the radius.
    const Complex z(normal(rng), normal(rng));
    if (std::abs(a) <= radius && std::abs(b) <= radius) spectrum[i] = z;
  }
  return to_space(spectrum);
}

GridFunction family_member(const GridSpec& grid, FamilyKind kind, int level, double a) {
  switch (kind) {
    case FamilyKind::Dilation: return family_dilation(grid, pow2(-level));
    case FamilyKind::SingleBox: return family_single_box(grid, level);
    case FamilyKind::Annulus: return family_annulus(grid, level);
    case FamilyKind::LatticeComb: return family_lattice_comb(grid, level, a);
    case FamilyKind::DilatedKernel: return family_dilated_kernel(grid, pow2(-level));
    case FamilyKind::WeightedSum:
    case FamilyKind::ModulatedTrain: break;
  }
  throw std::invalid_argument(std::string(to_string(kind)) + " has no single-level member; use its generator");
}

double family_support_radius(FamilyKind kind, int level, int d, double a) {
  const double diag = std::sqrt(static_cast<double>(d));
  switch (kind) {
    case FamilyKind::Dilation: return pow2(-level) * diag / 8.0;
    case FamilyKind::SingleBox: return lattice_norm(single_box_center(level, d), d) + diag / 8.0;
    case FamilyKind::Annulus: return 1.5 * pow2(level);
    case FamilyKind::LatticeComb: {
      double max_k = 0.0;
      for (const auto& k : index_set_a(level, d).members) max_k = std::max(max_k, lattice_norm(k, d));
      return max_k + diag / (8.0 * a);
    }
    case FamilyKind::DilatedKernel: return pow2(level) * diag * 9.0 / 8.0;
    case FamilyKind::WeightedSum:
    case FamilyKind::ModulatedTrain: break;
  }
  throw std::invalid_argument(std::string(to_string(kind)) + " has no level-indexed support");
}

GridSpec grid_for_family(FamilyKind kind, int max_level, int d, double a, int refine) {
  if (refine < 1) throw std::invalid_argument("refine must be >= 1");
  const double radius = family_support_radius(kind, max_level, d, a);
  int m = 16;
  switch (kind) {
    case FamilyKind::Dilation: m = std::max(16, static_cast<int>(std::ceil(32.0 * pow2(max_level)))); break;
    case FamilyKind::SingleBox: m = 64; break;
    case FamilyKind::Annulus: m = 16; break;
    case FamilyKind::DilatedKernel: m = 64; break;
    case FamilyKind::LatticeComb: {
      double max_k = 0.0;
      for (const auto& k : index_set_a(max_level, d).members) max_k = std::max(max_k, lattice_norm(k, d));
      m = std::max(64, static_cast<int>(std::ceil(4.0 * max_k / (2.0 * std::numbers::pi))));
      break;
    }
    default: break;
  }
  m *= refine;
  // Dyadic partition must reach past the support; box windows need R + 1.
  int j = 0;
  while (1.25 * pow2(j) < radius) ++j;
  const double omega = std::max(1.5 * pow2(j), radius + 1.0);
  return GridSpec::covering(d, m, omega);
}

}  // namespace modspace
