#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cli.hpp"
#include "modspace/families.hpp"
#include "modspace/norms.hpp"
#include "modspace/oracle.hpp"
#include "modspace/partitions.hpp"
#include "modspace/report.hpp"

namespace modspace::cli {

namespace {

struct Suite {
  nlohmann::json checks = nlohmann::json::array();
  bool pass = true;

  void add(const std::string& name, double value, double bound) {
    const bool ok = std::isfinite(value) && value < bound;
    checks.push_back({{"name", name}, {"value", value}, {"bound", bound}, {"pass", ok}});
    pass = pass && ok;
  }

  void expect(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"value", ok ? 1.0 : 0.0}, {"bound", 1.0}, {"pass", ok}});
    pass = pass && ok;
  }
};

double rel_l2_error(const GridFunction& a, const GridFunction& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

double linf_of(const GridSpec& g, std::size_t i) {
  if (g.d == 1) return std::abs(g.frequency(i));
  return std::max(std::abs(g.frequency(i / g.n)), std::abs(g.frequency(i % g.n)));
}

double radius_of(const GridSpec& g, std::size_t i) {
  if (g.d == 1) return std::abs(g.frequency(i));
  return std::hypot(g.frequency(i / g.n), g.frequency(i % g.n));
}

void partition_checks(Suite& suite, const GridSpec& g) {
  const std::string tag = "d" + std::to_string(g.d) + ".";
  const UniformPartition& up = uniform_partition(g);
  const DyadicPartition& dp = dyadic_partition(g);

  const RealVector cover = up.coverage();
  double uniform_residual = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (linf_of(g, i) <= up.kmax() - 1) uniform_residual = std::max(uniform_residual, std::abs(cover[i] - 1.0));
  }
  suite.add(tag + "uniform_residual", uniform_residual, 1e-12);

  const RealVector w0 = up.window(Lattice{0, 0});
  double plateau = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = linf_of(g, i);
    if (r <= 0.25) plateau = std::max(plateau, std::abs(w0[i] - 1.0));
    if (r >= 0.75) outside = std::max(outside, std::abs(w0[i]));
  }
  suite.add(tag + "uniform_plateau", plateau, 1e-12);
  suite.add(tag + "uniform_support", outside, 1e-14);

  std::vector<RealVector> windows;
  for (int j = 0; j <= dp.levels(); ++j) windows.push_back(dp.window(j));
  double dyadic_residual = 0.0;
  double dyadic_plateau = 0.0;
  const double top = 1.25 * std::ldexp(1.0, dp.levels());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = radius_of(g, i);
    if (r <= top) {
      double sum = 0.0;
      for (const auto& w : windows) sum += w[i];
      dyadic_residual = std::max(dyadic_residual, std::abs(sum - 1.0));
    }
    for (int j = 1; j < dp.levels(); ++j) {
      const double scale = std::ldexp(1.0, j);
      if (r >= 0.75 * scale && r <= 1.25 * scale) dyadic_plateau = std::max(dyadic_plateau, std::abs(windows[j][i] - 1.0));
    }
  }
  suite.add(tag + "dyadic_residual", dyadic_residual, 1e-12);
  suite.add(tag + "dyadic_plateau", dyadic_plateau, 1e-12);

  const double band = std::min(up.kmax() - 1.0, top / std::sqrt(static_cast<double>(g.d)));
  const GridFunction f = random_band_limited(g, band, 20260101 + g.d);
  const GridFunction fhat = to_frequency(f);
  suite.add(tag + "round_trip", rel_l2_error(to_space(fhat), f), 1e-12);

  // Parseval: ||f||_2^2 = (2 pi)^{-d} delta^d sum |fhat|^2.
  const double lhs = std::pow(lp_norm(f, Exponent(2)), 2.0);
  double rhs = 0.0;
  for (const auto& z : fhat.values()) rhs += std::norm(z);
  rhs *= g.frequency_cell() / std::pow(2.0 * std::numbers::pi, g.d);
  suite.add(tag + "parseval", std::abs(lhs - rhs) / lhs, 1e-12);

  GridFunction boxes(g, Side::Space);
  for (const auto& k : up.lattice()) {
    const GridFunction piece = up.box_apply(f, k);
    for (std::size_t i = 0; i < g.size(); ++i) boxes[i] += piece[i];
  }
  suite.add(tag + "box_reconstruction", rel_l2_error(boxes, f), 1e-10);

  GridFunction blocks(g, Side::Space);
  for (int j = 0; j <= dp.levels(); ++j) {
    const GridFunction piece = dp.delta_apply(f, j);
    for (std::size_t i = 0; i < g.size(); ++i) blocks[i] += piece[i];
  }
  suite.add(tag + "dyadic_reconstruction", rel_l2_error(blocks, f), 1e-10);
}

void oracle_checks(Suite& suite) {
  const Exponent inf = Exponent::infinity();
  const Exponent e1(1), e2(2), e4(4);
  auto check = [&](const std::string& name, const Verdict& v, bool holds) { suite.expect("oracle." + name, v.holds == holds); };
  check("besov_to_mod_clause1", embed_besov_to_mod(e1, e1, e2, e2, Rational(1, 2), 1), true);
  check("besov_to_mod_q0_gt_q", embed_besov_to_mod(e2, inf, e2, e2, Rational(0), 1), false);
  check("mod_to_besov_sigma", embed_mod_to_besov(e2, e2, e4, e2, Rational(-1), 1), true);
  check("hs_to_mod_strict", embed_hs_to_mod(e4, e1, Rational(1, 2), 1), false);
  check("sobolev_to_mod_clause3", embed_sobolev_to_mod(e1, e1, inf, Rational(0), 1), true);
  check("mod_to_sobolev_strict", embed_mod_to_sobolev(e2, e4, e2, Rational(-1, 4), 1), false);
  check("mod_to_fourier_chain", embed_mod_to_fourierlp(e1, e2, inf, Rational(0), 1), true);
  check("fourier_to_mod_edge", embed_fourierlp_to_mod(e4, e2, e2, Rational(-1, 4), 1), false);
  suite.expect("index_set.A4", index_set_a(4, 1).members.size() == 14);
  suite.expect("index_set.K1/10", index_set_k(Rational(1, 10), 1).members.size() == 19);
}

}  // namespace

nlohmann::json selftest_report() {
  Suite suite;
  partition_checks(suite, GridSpec::make(1, 1 << 14, 16));
  partition_checks(suite, GridSpec::make(2, 256, 8));
  oracle_checks(suite);
  return {{"schema_version", kReportSchemaVersion}, {"kind", "selftest"}, {"checks", suite.checks}, {"pass", suite.pass}};
}

}  // namespace modspace::cli
