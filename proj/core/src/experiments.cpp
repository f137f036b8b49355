#include "modspace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "modspace/errors.hpp"
#include "modspace/norms.hpp"
#include "modspace/parallel.hpp"

namespace modspace {

std::string_view to_string(ExperimentMode mode) {
  return mode == ExperimentMode::Sharpness ? "sharpness" : "boundedness";
}

namespace {

[[noreturn]] void uncatalogued(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family) {
  throw UncharacterizedError("no slope catalogued for " + render(source) + " -> " + render(target) + " with the " +
                             std::string(to_string(family)) + " family");
}

Rational one_minus(const Exponent& p) { return Rational(1) - p.reciprocal(); }

}  // namespace

Rational predicted_slope(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family) {
  source.validate();
  target.validate();
  const Rational d = source.d;

  if (target.family == Family::Modulation) {
    const Rational s = source.s - target.s;
    const Exponent& p = target.need_p();
    const Exponent& q = target.need_q();
    switch (source.family) {
      case Family::Besov:
      case Family::Triebel: {
        const Exponent& p0 = source.need_p();
        switch (family) {
          case FamilyKind::SingleBox: return -s;
          case FamilyKind::Annulus: return d * q.reciprocal() - s - d * one_minus(p0);
          case FamilyKind::LatticeComb:
            if (source.family == Family::Besov && p0 >= Exponent(2)) return d * q.reciprocal() - s - d * p0.reciprocal();
            break;
          case FamilyKind::Dilation:
            if (source.family == Family::Besov) return d * (p.reciprocal() - p0.reciprocal());
            break;
          default: break;
        }
        break;
      }
      case Family::SobolevW: {
        const Exponent& r = source.need_r();
        if (family == FamilyKind::SingleBox) return -s;
        if (family == FamilyKind::Dilation && s == 0) return d * (p.reciprocal() - r.reciprocal());
        if (family == FamilyKind::DilatedKernel && s == 0 && r == Exponent(1)) return d * q.reciprocal();
        break;
      }
      case Family::FourierL:
        if (family == FamilyKind::SingleBox) return target.s;
        break;
      case Family::Modulation: break;
    }
    uncatalogued(source, target, family);
  }

  if (source.family == Family::Modulation) {
    const Rational s = target.s - source.s;
    const Exponent& p = source.need_p();
    const Exponent& q = source.need_q();
    switch (target.family) {
      case Family::Besov:
      case Family::Triebel: {
        const Exponent& p1 = target.need_p();
        switch (family) {
          case FamilyKind::SingleBox: return s;
          case FamilyKind::Annulus: return s + d * one_minus(p1) - d * q.reciprocal();
          case FamilyKind::LatticeComb:
            if (target.family == Family::Besov) return s + d * p1.reciprocal() - d * q.reciprocal();
            break;
          case FamilyKind::Dilation:
            if (target.family == Family::Besov) return d * (p1.reciprocal() - p.reciprocal());
            break;
          default: break;
        }
        break;
      }
      case Family::SobolevW:
        if (family == FamilyKind::SingleBox) return s;
        break;
      case Family::FourierL:
        if (family == FamilyKind::SingleBox) return -source.s;
        break;
      case Family::Modulation: break;
    }
  }
  uncatalogued(source, target, family);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_slope: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("fit_slope needs at least two levels");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_slope: abscissae coincide");
  return sxy / sxx;
}

namespace {

ExperimentReport measure(ExperimentMode mode, const SpaceSpec& source, const SpaceSpec& target, FamilyKind family,
                         const ExperimentOptions& opt) {
  if (opt.level_max <= opt.level_min) {
    throw std::invalid_argument("level range must contain at least two levels to fit a slope");
  }
  if (source.d != target.d) throw std::invalid_argument("source and target dimensions differ");
  ExperimentReport report;
  report.mode = mode;
  report.source = source;
  report.target = target;
  report.family = family;
  report.comb_width = opt.comb_width;
  report.level_min = opt.level_min;
  report.level_max = opt.level_max;
  report.tolerance = opt.tolerance;
  report.spread_bound = opt.spread_bound;
  report.grid = opt.grid ? *opt.grid : grid_for_family(family, opt.level_max, source.d, opt.comb_width, opt.refine);
  try {
    report.verdict = decide(source, target);
  } catch (const UncharacterizedError&) {
  }
  try {
    report.predicted_slope = predicted_slope(source, target, family);
  } catch (const UncharacterizedError&) {
    if (mode == ExperimentMode::Sharpness) throw;
  }

  const auto count = static_cast<std::size_t>(opt.level_max - opt.level_min + 1);
  report.rows.resize(count);
  parallel_for(count, [&](std::size_t i) {
    const int level = opt.level_min + static_cast<int>(i);
    const GridFunction f = family_member(report.grid, family, level, opt.comb_width);
    const double a = space_norm(f, source);
    const double b = space_norm(f, target);
    report.rows[i] = {level, a, b, b / a, std::log2(b / a)};
  });

  std::vector<double> x, y;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& row : report.rows) {
    x.push_back(row.level);
    y.push_back(row.log2_ratio);
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
  }
  report.fitted_slope = fit_slope(x, y);
  report.spread = hi / lo;
  return report;
}

}  // namespace

ExperimentReport run_sharpness(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family,
                               const ExperimentOptions& options) {
  ExperimentReport report = measure(ExperimentMode::Sharpness, source, target, family, options);
  report.pass = std::abs(report.fitted_slope - to_double(*report.predicted_slope)) <= report.tolerance;
  return report;
}

ExperimentReport run_boundedness(const SpaceSpec& source, const SpaceSpec& target, FamilyKind family,
                                 const ExperimentOptions& options) {
  try {
    if (!decide(source, target).holds) {
      throw std::invalid_argument("boundedness needs an embedding that holds: " + render(source) + " -> " +
                                  render(target) + " fails");
    }
  } catch (const UncharacterizedError&) {
  }
  ExperimentReport report = measure(ExperimentMode::Boundedness, source, target, family, options);
  report.pass = report.spread <= report.spread_bound;
  return report;
}

TailReport run_weighted_tail(const Exponent& q, const std::vector<Rational>& t_list, int d, double factor,
                             double residual_bound) {
  if (q.is_infinite()) throw std::invalid_argument("weighted tail needs q < inf");
  if (t_list.size() < 2) throw std::invalid_argument("weighted tail needs at least two values of t");
  TailReport report;
  report.q = q;
  report.d = d;
  report.t = t_list;
  report.factor = factor;
  report.residual_bound = residual_bound;
  const double qd = q.to_double();
  for (const auto& t : t_list) {
    const auto set = index_set_k(t, d);
    double sum = 0.0;
    for (const auto& k : set.members) sum += std::pow(1.0 + lattice_norm(k, d), -static_cast<double>(d));
    report.sizes.push_back(set.members.size());
    report.values.push_back(std::pow(sum, 1.0 / qd));
  }
  report.monotone = std::adjacent_find(report.values.begin(), report.values.end(), std::greater_equal<>()) ==
                    report.values.end();
  report.growth = report.values.back() / report.values.front();

  std::vector<double> x;
  for (const auto& t : t_list) x.push_back(-std::log(to_double(t)));
  report.fit_b = fit_slope(x, report.values);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += report.values[i];
  }
  report.fit_a = (my - report.fit_b * mx) / static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fitted = report.fit_a + report.fit_b * x[i];
    report.max_residual = std::max(report.max_residual, std::abs(report.values[i] - fitted) / report.values[i]);
  }
  report.pass = report.monotone && report.growth >= factor && report.max_residual < residual_bound;
  return report;
}

namespace {

// Sum of <k>^{-e} over k in Z^d with from < |k|_inf <= to.
double shell_sum(std::int64_t from, std::int64_t to, double e, int d) {
  double sum = 0.0;
  if (d == 1) {
    for (std::int64_t m = to; m > from; --m) sum += 2.0 * std::pow(1.0 + static_cast<double>(m), -e);
    if (from < 0) sum += 1.0;  // k = 0
    return sum;
  }
  for (std::int64_t m = std::max<std::int64_t>(from + 1, 0); m <= to; ++m) {
    if (m == 0) {
      sum += 1.0;
      continue;
    }
    // Ring |k|_inf = m: walk one edge and use the eightfold symmetry.
    const double md = static_cast<double>(m);
    sum += 4.0 * std::pow(1.0 + md, -e);                     // (+-m, 0), (0, +-m)
    sum += 4.0 * std::pow(1.0 + std::sqrt(2.0) * md, -e);   // corners
    for (std::int64_t j = 1; j < m; ++j) sum += 8.0 * std::pow(1.0 + std::hypot(md, static_cast<double>(j)), -e);
  }
  return sum;
}

}  // namespace

NecessityReport run_discrete_necessity(const Exponent& r, const Exponent& q, const Rational& s, int d,
                                       const std::vector<std::int64_t>& cubes, double tail_tolerance) {
  require_dimension(d);
  if (d > 2) throw std::invalid_argument("discrete necessity supports d <= 2");
  if (r == q) throw std::invalid_argument("discrete necessity needs r != q");
  if (cubes.empty() || !std::is_sorted(cubes.begin(), cubes.end()) || cubes.front() < 0) {
    throw std::invalid_argument("cube sizes must be non-negative and increasing");
  }
  if (d == 2 && cubes.back() > (1 << 14)) throw std::invalid_argument("d = 2 cubes are capped at 2^14");

  NecessityReport report;
  report.r = r;
  report.q = q;
  report.d = d;
  report.s = s;
  report.cubes = cubes;
  report.tail_tolerance = tail_tolerance;
  const Exponent& lo = r < q ? r : q;
  const Exponent& hi = r < q ? q : r;
  const Rational gap = lo.reciprocal() - hi.reciprocal();
  report.critical_s = d * gap;
  // s lo (hi/lo)' = s / (1/lo - 1/hi), also when hi = inf.
  report.exponent = s / gap;

  const double e = to_double(report.exponent);
  double total = 0.0;
  std::int64_t previous = -1;
  for (std::int64_t k : cubes) {
    total += shell_sum(previous, k, e, d);
    if (!report.partial_sums.empty()) report.increments.push_back(total - report.partial_sums.back());
    report.partial_sums.push_back(total);
    previous = k;
  }

  // Integral test over rings: at most 2d 3^{d-1} (1+m)^{d-1} points with |k| >= m.
  if (report.exponent > d) {
    const double kk = static_cast<double>(cubes.back());
    report.tail_bound = 2.0 * d * std::pow(3.0, d - 1) * std::pow(1.0 + kk, d - e) / (e - d);
  } else {
    report.tail_bound = std::numeric_limits<double>::infinity();
  }
  report.converges = report.tail_bound <= tail_tolerance;
  const bool monotone = std::all_of(report.increments.begin(), report.increments.end(), [](double v) { return v > 0; });
  report.diverges = report.exponent <= d && monotone && !report.increments.empty() &&
                    report.increments.back() >= 0.5 * report.increments.front();
  return report;
}

}  // namespace modspace
