#include "modspace/norms.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "modspace/errors.hpp"
#include "modspace/parallel.hpp"

namespace modspace {

namespace {

template <class Partition>
const Partition& cached_partition(const GridSpec& grid) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, int>, std::unique_ptr<const Partition>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{grid.d, grid.n, grid.m}];
  if (!slot) slot = std::make_unique<const Partition>(Partition::build(grid));
  return *slot;
}

GridFunction checked_spectrum(const GridFunction& f) {
  GridFunction spectrum = to_frequency(f);
  for (const auto& z : spectrum.values()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("non-finite samples");
  }
  return spectrum;
}

void require_grid(const GridFunction& f, const GridSpec& grid) {
  if (f.spec() != grid) throw ShapeError("function and partition live on different grids");
}

template <class Partition>
void require_covered(const Partition& part, const GridFunction& spectrum, const char* what) {
  const double excess = part.uncovered_mass(spectrum);
  if (excess > kBandTolerance) {
    throw BandError(std::string(what) + ": spectrum leaves the covered band |xi| <= " +
                    std::to_string(part.covered_radius()) + " (relative excess " + std::to_string(excess) + ")");
  }
}

}  // namespace

const UniformPartition& uniform_partition(const GridSpec& grid) { return cached_partition<UniformPartition>(grid); }

const DyadicPartition& dyadic_partition(const GridSpec& grid) { return cached_partition<DyadicPartition>(grid); }

std::vector<BoxTerm> modulation_terms(const GridFunction& f, const Exponent& p, const UniformPartition& part) {
  require_grid(f, part.grid());
  const GridFunction spectrum = checked_spectrum(f);
  require_covered(part, spectrum, "modulation norm");
  const double floor = kSkipTolerance * spectrum.peak();
  std::vector<BoxTerm> terms;
  for (const auto& k : part.lattice()) {
    if (part.box_peak(spectrum, k) > floor) terms.push_back({k, 0.0});
  }
  const double cell = part.grid().space_cell();
  parallel_for(terms.size(), [&](std::size_t i) {
    const GridFunction piece = to_space(part.box_spectrum(spectrum, terms[i].k));
    terms[i].norm = lp_sum(piece.values(), cell, p);
  });
  return terms;
}

std::vector<LevelTerm> besov_terms(const GridFunction& f, const Exponent& p, const DyadicPartition& part) {
  require_grid(f, part.grid());
  const GridFunction spectrum = checked_spectrum(f);
  require_covered(part, spectrum, "dyadic norm");
  const double floor = kSkipTolerance * spectrum.peak();
  std::vector<LevelTerm> terms;
  for (int j = 0; j <= part.levels(); ++j) {
    if (part.delta_peak(spectrum, j) > floor) terms.push_back({j, 0.0});
  }
  const double cell = part.grid().space_cell();
  parallel_for(terms.size(), [&](std::size_t i) {
    const GridFunction piece = to_space(part.delta_spectrum(spectrum, terms[i].j));
    terms[i].norm = lp_sum(piece.values(), cell, p);
  });
  return terms;
}

double modulation_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s,
                       const UniformPartition& part) {
  const auto terms = modulation_terms(f, p, part);
  std::vector<double> values;
  values.reserve(terms.size());
  for (const auto& t : terms) values.push_back(t.norm);
  const int d = part.grid().d;
  return lq_seq_norm(values, q, [&](std::size_t i) { return std::pow(1.0 + lattice_norm(terms[i].k, d), s); });
}

double modulation_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s) {
  return modulation_norm(f, p, q, s, uniform_partition(f.spec()));
}

double besov_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s, const DyadicPartition& part) {
  const auto terms = besov_terms(f, p, part);
  std::vector<double> values;
  values.reserve(terms.size());
  for (const auto& t : terms) values.push_back(t.norm);
  return lq_seq_norm(values, q, [&](std::size_t i) { return std::exp2(terms[i].j * s); });
}

double besov_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s) {
  return besov_norm(f, p, q, s, dyadic_partition(f.spec()));
}

double triebel_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s,
                    const DyadicPartition& part) {
  if (p.is_infinite()) throw DomainError("triebel_norm is undefined for p = inf");
  require_grid(f, part.grid());
  const GridFunction spectrum = checked_spectrum(f);
  require_covered(part, spectrum, "triebel norm");
  const double floor = kSkipTolerance * spectrum.peak();
  const GridSpec& g = part.grid();
  const bool sup = q.is_infinite();
  const double qd = sup ? 0.0 : q.to_double();

  // Pointwise l^q accumulation over levels, in increasing j for reproducibility.
  RealVector acc(g.size(), 0.0);
  for (int j = 0; j <= part.levels(); ++j) {
    if (!(part.delta_peak(spectrum, j) > floor)) continue;
    const GridFunction piece = to_space(part.delta_spectrum(spectrum, j));
    const double weight = std::exp2(j * s);
    const auto v = piece.values();
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const double a = weight * std::abs(v[i]);
      if (sup) {
        acc[i] = std::max(acc[i], a);
      } else if (a > 0.0) {
        acc[i] += std::pow(a, qd);
      }
    }
  }
  ComplexVector pointwise(g.size());
  for (std::size_t i = 0; i < acc.size(); ++i) pointwise[i] = sup ? acc[i] : std::pow(acc[i], 1.0 / qd);
  return lp_sum(pointwise, g.space_cell(), p);
}

double triebel_norm(const GridFunction& f, const Exponent& p, const Exponent& q, double s) {
  return triebel_norm(f, p, q, s, dyadic_partition(f.spec()));
}

double sobolev_norm(const GridFunction& f, double s, const Exponent& r) {
  const GridSpec& g = f.spec();
  if (s == 0.0) return lp_norm(to_space(f), r);
  RealVector m(g.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    double r2 = 0.0;
    if (g.d == 1) {
      r2 = g.frequency(i) * g.frequency(i);
    } else {
      const double a = g.frequency(i / g.n);
      const double b = g.frequency(i % g.n);
      r2 = a * a + b * b;
    }
    m[i] = std::pow(1.0 + r2, s / 2.0);
  }
  return lp_norm(apply_multiplier(f, m), r);
}

double fourier_lp_norm(const GridFunction& f, const Exponent& r) {
  const GridFunction spectrum = to_frequency(f);
  return lp_sum(spectrum.values(), f.spec().frequency_cell(), r);
}

double space_norm(const GridFunction& f, const SpaceSpec& space) {
  space.validate();
  const double s = to_double(space.s);
  switch (space.family) {
    case Family::Modulation: return modulation_norm(f, space.need_p(), space.need_q(), s);
    case Family::Besov: return besov_norm(f, space.need_p(), space.need_q(), s);
    case Family::Triebel: return triebel_norm(f, space.need_p(), space.need_q(), s);
    case Family::SobolevW: return sobolev_norm(f, s, space.need_r());
    case Family::FourierL: return fourier_lp_norm(f, space.need_r());
  }
  throw std::logic_error("unknown family");
}

}  // namespace modspace
