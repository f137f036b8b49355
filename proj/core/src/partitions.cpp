#include "modspace/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "modspace/errors.hpp"

namespace modspace {

SmoothProfile::SmoothProfile(double e0, double e1) : e0_(e0), e1_(e1) {
  if (!(e0 < e1)) throw std::invalid_argument("smooth_profile needs edge0 < edge1");
}

double SmoothProfile::operator()(double t) const {
  if (t <= e0_) return 1.0;
  if (t >= e1_) return 0.0;
  const double u = (t - e0_) / (e1_ - e0_);
  const double a = std::exp(-1.0 / (1.0 - u));
  const double b = std::exp(-1.0 / u);
  return a / (a + b);
}

double lattice_norm(const Lattice& k, int d) {
  const double x = static_cast<double>(k[0]);
  const double y = d == 2 ? static_cast<double>(k[1]) : 0.0;
  return std::hypot(x, y);
}

// ---------------------------------------------------------------------------
// Uniform partition

namespace {

const SmoothProfile kTheta(0.5, 0.75);

int uniform_half_width(int m) { return (3 * m - 1) / 4; }

}  // namespace

double UniformPartition::profile(double t) {
  if (std::abs(t) >= 0.75) return 0.0;
  const double centre = kTheta(std::abs(t));
  return centre / (kTheta(std::abs(t - 1.0)) + centre + kTheta(std::abs(t + 1.0)));
}

int UniformPartition::max_admissible(const GridSpec& grid) {
  const auto half = static_cast<std::int64_t>(grid.n / 2);
  const std::int64_t room = half - 1 - uniform_half_width(grid.m);
  return room < 0 ? -1 : static_cast<int>(room / grid.m);
}

UniformPartition UniformPartition::build(const GridSpec& grid, int kmax) {
  const int admissible = max_admissible(grid);
  if (admissible < 0) throw BandError("grid band too small for a single uniform window");
  if (kmax < 0) kmax = admissible;
  if (kmax > admissible) {
    throw BandError("Kmax=" + std::to_string(kmax) + " exceeds the grid band (max " + std::to_string(admissible) + ")");
  }
  UniformPartition part;
  part.grid_ = grid;
  part.kmax_ = kmax;
  part.w_ = uniform_half_width(grid.m);
  part.taps_.resize(2 * static_cast<std::size_t>(part.w_) + 1);
  for (int o = -part.w_; o <= part.w_; ++o) {
    part.taps_[static_cast<std::size_t>(o + part.w_)] = profile(static_cast<double>(o) / grid.m);
  }
  part.coverage1d_.assign(grid.n, 0.0);
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    for (int o = -part.w_; o <= part.w_; ++o) {
      part.coverage1d_[grid.wrap_index(k * grid.m + o)] += part.taps_[static_cast<std::size_t>(o + part.w_)];
    }
  }
  return part;
}

bool UniformPartition::contains(const Lattice& k) const {
  const bool first = std::abs(k[0]) <= kmax_;
  return grid_.d == 1 ? first && k[1] == 0 : first && std::abs(k[1]) <= kmax_;
}

std::vector<Lattice> UniformPartition::lattice() const {
  std::vector<Lattice> out;
  for (std::int64_t a = -kmax_; a <= kmax_; ++a) {
    if (grid_.d == 1) {
      out.push_back({a, 0});
      continue;
    }
    for (std::int64_t b = -kmax_; b <= kmax_; ++b) out.push_back({a, b});
  }
  return out;
}

template <class Visit>
void UniformPartition::visit_box(const Lattice& k, Visit&& visit) const {
  if (!contains(k)) throw std::out_of_range("lattice point outside the uniform partition");
  const std::int64_t m = grid_.m;
  if (grid_.d == 1) {
    for (int o = -w_; o <= w_; ++o) {
      visit(grid_.wrap_index(k[0] * m + o), taps_[static_cast<std::size_t>(o + w_)]);
    }
    return;
  }
  for (int a = -w_; a <= w_; ++a) {
    const std::size_t row = grid_.wrap_index(k[0] * m + a) * grid_.n;
    const double ta = taps_[static_cast<std::size_t>(a + w_)];
    for (int b = -w_; b <= w_; ++b) {
      visit(row + grid_.wrap_index(k[1] * m + b), ta * taps_[static_cast<std::size_t>(b + w_)]);
    }
  }
}

RealVector UniformPartition::window(const Lattice& k) const {
  RealVector out(grid_.size(), 0.0);
  visit_box(k, [&](std::size_t i, double w) { out[i] = w; });
  return out;
}

RealVector UniformPartition::coverage() const {
  if (grid_.d == 1) return coverage1d_;
  RealVector out(grid_.size());
  for (std::size_t i = 0; i < grid_.n; ++i) {
    for (std::size_t j = 0; j < grid_.n; ++j) out[i * grid_.n + j] = coverage1d_[i] * coverage1d_[j];
  }
  return out;
}

GridFunction UniformPartition::box_spectrum(const GridFunction& spectrum, const Lattice& k) const {
  if (spectrum.spec() != grid_ || spectrum.side() != Side::Frequency) {
    throw ShapeError("box_spectrum expects a frequency-side function on the partition grid");
  }
  GridFunction out(grid_, Side::Frequency);
  visit_box(k, [&](std::size_t i, double w) { out[i] = w * spectrum[i]; });
  return out;
}

double UniformPartition::box_peak(const GridFunction& spectrum, const Lattice& k) const {
  double best = 0.0;
  visit_box(k, [&](std::size_t i, double w) { best = std::max(best, w * std::abs(spectrum[i])); });
  return best;
}

GridFunction UniformPartition::box_apply(const GridFunction& f, const Lattice& k) const {
  return to_space(box_spectrum(to_frequency(f), k));
}

double UniformPartition::uncovered_mass(const GridFunction& spectrum) const {
  const double peak = spectrum.peak();
  if (peak == 0.0) return 0.0;
  double worst = 0.0;
  const std::size_t n = grid_.n;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double cov = grid_.d == 1 ? coverage1d_[i] : coverage1d_[i / n] * coverage1d_[i % n];
    worst = std::max(worst, std::abs(spectrum[i]) * std::abs(1.0 - cov));
  }
  return worst / peak;
}

// ---------------------------------------------------------------------------
// Dyadic partition

namespace {

const SmoothProfile kPsi(1.25, 1.5);

double radius_at(const GridSpec& g, std::size_t flat) {
  if (g.d == 1) return std::abs(g.frequency(flat));
  return std::hypot(g.frequency(flat / g.n), g.frequency(flat % g.n));
}

}  // namespace

double DyadicPartition::psi(double radius) { return kPsi(radius); }

double DyadicPartition::phi(int j, double radius) {
  if (j < 0) return 0.0;
  if (j == 0) return psi(radius);
  return psi(std::ldexp(radius, -j)) - psi(std::ldexp(radius, 1 - j));
}

int DyadicPartition::max_admissible(const GridSpec& grid) {
  int j = -1;
  while (1.5 * std::ldexp(1.0, j + 1) <= grid.omega()) ++j;
  return j;
}

DyadicPartition DyadicPartition::build(const GridSpec& grid, int j_max) {
  const int admissible = max_admissible(grid);
  if (admissible < 0) throw BandError("grid band too small for the dyadic base window");
  if (j_max < 0) j_max = admissible;
  if (j_max > admissible) {
    throw BandError("J=" + std::to_string(j_max) + " exceeds the grid band (max " + std::to_string(admissible) + ")");
  }
  DyadicPartition part;
  part.grid_ = grid;
  part.j_max_ = j_max;
  part.support_.resize(static_cast<std::size_t>(j_max) + 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = radius_at(grid, i);
    if (r >= 1.5 * std::ldexp(1.0, j_max)) continue;
    // Only levels with 5/8 2^j < r < 3/2 2^j can be nonzero.
    const int top = r < 1.25 ? 0 : std::min(j_max, static_cast<int>(std::floor(std::log2(r / 0.625))) + 1);
    for (int j = std::max(0, top - 2); j <= top; ++j) {
      const double v = phi(j, r);
      if (v != 0.0) part.support_[static_cast<std::size_t>(j)].emplace_back(static_cast<std::uint32_t>(i), v);
    }
  }
  return part;
}

double DyadicPartition::covered_radius() const { return 1.25 * std::ldexp(1.0, j_max_); }

void DyadicPartition::check_level(int j) const {
  if (j < 0 || j > j_max_) throw std::out_of_range("dyadic level " + std::to_string(j) + " outside 0..J");
}

RealVector DyadicPartition::window(int j) const {
  check_level(j);
  RealVector out(grid_.size(), 0.0);
  for (const auto& [i, v] : support_[static_cast<std::size_t>(j)]) out[i] = v;
  return out;
}

GridFunction DyadicPartition::delta_spectrum(const GridFunction& spectrum, int j) const {
  check_level(j);
  if (spectrum.spec() != grid_ || spectrum.side() != Side::Frequency) {
    throw ShapeError("delta_spectrum expects a frequency-side function on the partition grid");
  }
  GridFunction out(grid_, Side::Frequency);
  for (const auto& [i, v] : support_[static_cast<std::size_t>(j)]) out[i] = v * spectrum[i];
  return out;
}

double DyadicPartition::delta_peak(const GridFunction& spectrum, int j) const {
  check_level(j);
  double best = 0.0;
  for (const auto& [i, v] : support_[static_cast<std::size_t>(j)]) best = std::max(best, v * std::abs(spectrum[i]));
  return best;
}

GridFunction DyadicPartition::delta_apply(const GridFunction& f, int j) const {
  return to_space(delta_spectrum(to_frequency(f), j));
}

double DyadicPartition::uncovered_mass(const GridFunction& spectrum) const {
  const double peak = spectrum.peak();
  if (peak == 0.0) return 0.0;
  double worst = 0.0;
  const double scale = std::ldexp(1.0, -j_max_);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double a = std::abs(spectrum[i]);
    if (a == 0.0) continue;
    worst = std::max(worst, a * (1.0 - psi(radius_at(grid_, i) * scale)));
  }
  return worst / peak;
}

// ---------------------------------------------------------------------------
// Index sets

std::string_view to_string(IndexSetKind kind) {
  switch (kind) {
    case IndexSetKind::A: return "A";
    case IndexSetKind::B: return "B";
    case IndexSetKind::K: return "K";
  }
  return "?";
}

namespace {

// Work in quarter units so the cube half-width 3/4 becomes the integer 3.
struct CubeExtremes {
  std::int64_t min_sq;
  std::int64_t max_sq;
};

CubeExtremes quarter_extremes(const Lattice& k, int d) {
  CubeExtremes e{0, 0};
  for (int i = 0; i < d; ++i) {
    const std::int64_t a = 4 * std::abs(k[static_cast<std::size_t>(i)]);
    const std::int64_t lo = a > 3 ? a - 3 : 0;
    e.min_sq += lo * lo;
    e.max_sq += (a + 3) * (a + 3);
  }
  return e;
}

template <class Pred>
std::vector<Lattice> enumerate_cube(std::int64_t bound, int d, Pred&& keep) {
  std::vector<Lattice> out;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    if (d == 1) {
      if (keep(Lattice{a, 0})) out.push_back({a, 0});
      continue;
    }
    for (std::int64_t b = -bound; b <= bound; ++b) {
      if (keep(Lattice{a, b})) out.push_back({a, b});
    }
  }
  return out;
}

LatticeIndexSet annulus_set(IndexSetKind kind, int level, int d) {
  require_dimension(d);
  if (d > 2) throw std::invalid_argument("index sets support d <= 2");
  if (level < 0 || level > 24) throw std::invalid_argument("dyadic level out of range 0..24");
  const std::int64_t inner = 3LL << level;
  const std::int64_t outer = 5LL << level;
  const std::int64_t bound = (outer / 4) + 1;
  LatticeIndexSet set;
  set.kind = kind;
  set.level = level;
  set.d = d;
  set.members = enumerate_cube(bound, d, [&](const Lattice& k) {
    const auto e = quarter_extremes(k, d);
    if (kind == IndexSetKind::A) return e.min_sq >= inner * inner && e.max_sq <= outer * outer;
    return e.min_sq <= outer * outer && e.max_sq >= inner * inner;
  });
  if (set.members.empty()) {
    set.warning = std::string(to_string(kind)) + "_" + std::to_string(level) + " is empty";
  }
  return set;
}

}  // namespace

LatticeIndexSet index_set_a(int level, int d) { return annulus_set(IndexSetKind::A, level, d); }
LatticeIndexSet index_set_b(int level, int d) { return annulus_set(IndexSetKind::B, level, d); }

LatticeIndexSet index_set_k(const Rational& t, int d) {
  require_dimension(d);
  if (d > 2) throw std::invalid_argument("index sets support d <= 2");
  if (t <= 0 || t > 1) throw std::invalid_argument("K_t needs 0 < t <= 1");
  // |k_i| + 3/4 <= 1/t  <=>  |k_i| <= floor(1/t - 3/4).
  const Rational limit = Rational(1) / t - Rational(3, 4);
  const auto bound = static_cast<std::int64_t>(boost::multiprecision::numerator(limit) /
                                               boost::multiprecision::denominator(limit));
  LatticeIndexSet set;
  set.kind = IndexSetKind::K;
  set.t = t;
  set.d = d;
  set.members = enumerate_cube(bound, d, [](const Lattice&) { return true; });
  return set;
}

}  // namespace modspace
