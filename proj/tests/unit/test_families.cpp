#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "modspace/errors.hpp"
#include "modspace/experiments.hpp"
#include "modspace/families.hpp"
#include "modspace/norms.hpp"

namespace modspace {
namespace {

using testing::rel_l2;
const Exponent kInf = Exponent::infinity();

std::vector<Lattice> active_boxes(const GridFunction& f, const Exponent& p) {
  const auto terms = modulation_terms(f, p, uniform_partition(f.spec()));
  double peak = 0.0;
  for (const auto& t : terms) peak = std::max(peak, t.norm);
  std::vector<Lattice> out;
  for (const auto& t : terms) {
    if (t.norm > 1e-10 * peak) out.push_back(t.k);
  }
  return out;
}

TEST(BumpPair, Supports) {
  EXPECT_EQ(BumpPair::narrow(0.0625), 1.0);
  EXPECT_EQ(BumpPair::narrow(0.125), 0.0);
  EXPECT_GT(BumpPair::narrow(0.1), 0.0);
  EXPECT_EQ(BumpPair::wide(1.0), 1.0);
  EXPECT_EQ(BumpPair::wide(1.125), 0.0);
  EXPECT_EQ(BumpPair::narrow(0.05, -0.06), 1.0);
}

TEST(FamilyKind, NamesRoundTrip) {
  for (auto kind : {FamilyKind::Dilation, FamilyKind::SingleBox, FamilyKind::Annulus, FamilyKind::LatticeComb,
                    FamilyKind::WeightedSum, FamilyKind::ModulatedTrain, FamilyKind::DilatedKernel}) {
    EXPECT_EQ(parse_family_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_family_kind("gabor"), std::invalid_argument);
}

TEST(Dilation, ScalingAndSingleBox) {
  const auto g = GridSpec::make(1, 8192, 256);
  const auto f1 = family_dilation(g, 1.0);
  for (const auto& p : {Exponent(1), Exponent(2), Exponent(4)}) {
    for (double lambda : {0.5, 0.25, 0.125}) {
      const auto f = family_dilation(g, lambda);
      const double ratio = lp_norm(f, p) / lp_norm(f1, p) / std::pow(lambda, -1.0 / p.to_double());
      EXPECT_GT(ratio, 0.5);
      EXPECT_LT(ratio, 2.0);
      const auto boxes = active_boxes(f, p);
      ASSERT_EQ(boxes.size(), 1u);
      EXPECT_EQ(boxes[0], (Lattice{0, 0}));
    }
  }
  EXPECT_THROW(family_dilation(GridSpec::make(1, 8192, 64), 0.125), ResolutionError);
}

TEST(SingleBox, ModulationEqualsLp) {
  const auto g = grid_for_family(FamilyKind::SingleBox, 8, 1);
  for (int l = 4; l <= 8; ++l) {
    const auto f = family_single_box(g, l);
    const auto boxes = active_boxes(f, Exponent(2));
    ASSERT_EQ(boxes.size(), 1u);
    EXPECT_EQ(boxes[0], single_box_center(l, 1));
    for (const auto& p : {Exponent(1, 2), Exponent(1), kInf}) {
      for (const auto& q : {Exponent(1, 2), Exponent(3)}) {
        const double lp = lp_norm(f, p);
        EXPECT_NEAR(modulation_norm(f, p, q, 0.0), lp, 1e-10 * lp);
      }
    }
  }
}

TEST(SingleBox, DyadicLocalization) {
  const auto g = grid_for_family(FamilyKind::SingleBox, 8, 1);
  const auto& dp = dyadic_partition(g);
  std::vector<double> scaled;
  for (int l = 4; l <= 8; ++l) {
    const auto f = family_single_box(g, l);
    const double scale = lp_norm(f, Exponent(2));
    for (int j = 0; j <= dp.levels(); ++j) {
      if (std::abs(j - l) > 3) EXPECT_LT(lp_norm(dp.delta_apply(f, j), Exponent(2)), 1e-12 * scale);
    }
    scaled.push_back(besov_norm(f, Exponent(1), Exponent(2), 0.5) / std::pow(2.0, 0.5 * l));
  }
  const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
  EXPECT_LT(*hi / *lo, 2.0);
}

TEST(Annulus, Slopes) {
  const auto g = grid_for_family(FamilyKind::Annulus, 8, 1);
  std::vector<double> levels, l1, mod;
  for (int l = 4; l <= 8; ++l) {
    const auto f = family_annulus(g, l);
    levels.push_back(l);
    l1.push_back(std::log2(lp_norm(f, Exponent(4, 3))));
    mod.push_back(std::log2(modulation_norm(f, Exponent(2), Exponent(1, 2), 0.0)));
    // Value itself within factor 4 of 2^{l d/q} (q = 1/2) up to a fixed constant.
  }
  EXPECT_NEAR(fit_slope(levels, l1), 1.0 - 3.0 / 4.0, 0.15);
  EXPECT_NEAR(fit_slope(levels, mod), 2.0, 0.15);
  const auto f0 = family_annulus(g, 0);
  EXPECT_GT(lp_norm(f0, Exponent(1)), 0.0);
  EXPECT_TRUE(std::isfinite(modulation_norm(f0, Exponent(1), Exponent(1), 0.0)));
}

TEST(LatticeComb, BoxesAreTheSummands) {
  const int l = 4;
  const auto g = grid_for_family(FamilyKind::LatticeComb, l, 1);
  const auto f = family_lattice_comb(g, l);
  const auto set = index_set_a(l, 1);
  const auto& up = uniform_partition(g);
  const double scale = lp_norm(f, Exponent(2));
  for (const auto& k : up.lattice()) {
    const auto box = up.box_apply(f, k);
    if (std::binary_search(set.members.begin(), set.members.end(), k)) {
      const auto summand = family_modulated_train(g, {{k, Complex(1.0)}});
      EXPECT_LT(rel_l2(box, summand), 1e-10) << k[0];
    } else {
      EXPECT_LT(lp_norm(box, Exponent(2)), 1e-10 * scale) << k[0];
    }
  }
  EXPECT_EQ(active_boxes(f, Exponent(2)), set.members);
}

TEST(LatticeComb, L2SlopeAndSupBound) {
  std::vector<double> levels, l2, sup;
  const auto g = grid_for_family(FamilyKind::LatticeComb, 8, 1);
  for (int l = 4; l <= 8; ++l) {
    const auto f = family_lattice_comb(g, l);
    levels.push_back(l);
    l2.push_back(std::log2(lp_norm(f, Exponent(2))));
    sup.push_back(lp_norm(f, kInf));
  }
  EXPECT_NEAR(fit_slope(levels, l2), 0.5, 0.15);
  const auto [lo, hi] = std::minmax_element(sup.begin(), sup.end());
  EXPECT_LT(*hi / *lo, 8.0);
}

TEST(LatticeComb, PeriodGuard) {
  EXPECT_THROW(family_lattice_comb(GridSpec::make(1, 1024, 8), 5), BandError);
  EXPECT_THROW(family_lattice_comb(GridSpec::make(1, 1 << 14, 64), 4, 0.0), std::invalid_argument);
}

TEST(WeightedSum, ReducesAndTracksCoefficients) {
  const auto g = grid_for_family(FamilyKind::SingleBox, 8, 1);
  const auto alone = family_weighted_sum(g, FamilyKind::SingleBox, {{6, 1.0}, {7, 0.0}});
  EXPECT_LT(rel_l2(alone, family_single_box(g, 6)), 1e-13);
  EXPECT_THROW(family_weighted_sum(g, FamilyKind::SingleBox, {{6, 1.0}, {6, 2.0}}), std::invalid_argument);
  EXPECT_THROW(family_weighted_sum(g, FamilyKind::Dilation, {{6, 1.0}}), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.1, 3.0);
  for (const auto& q : {Exponent(1), Exponent(2), kInf}) {
    double lo = 1e300, hi = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::pair<int, double>> coeffs;
      std::vector<double> a;
      for (int l = 4; l <= 8; ++l) {
        a.push_back(unif(rng));
        coeffs.emplace_back(l, a.back());
      }
      const auto f = family_weighted_sum(g, FamilyKind::SingleBox, coeffs);
      const double ratio = modulation_norm(f, Exponent(2), q, 0.0) / lq_seq_norm(a, q);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    EXPECT_LT(hi / lo, 1.5) << q.str();
  }
}

TEST(WeightedSum, AnnulusLowerBound) {
  const auto g = grid_for_family(FamilyKind::Annulus, 8, 1);
  const std::vector<std::pair<int, double>> coeffs{{4, 1.0}, {6, 0.5}, {8, 0.25}};
  const auto f = family_weighted_sum(g, FamilyKind::Annulus, coeffs);
  for (const auto& q : {Exponent(1), Exponent(2)}) {
    std::vector<double> weighted;
    for (const auto& [l, c] : coeffs) weighted.push_back(c * std::pow(2.0, l / q.to_double()));
    const double ratio = modulation_norm(f, Exponent(2), q, 0.0) / lq_seq_norm(weighted, q);
    EXPECT_GT(ratio, 0.1);
    EXPECT_LT(ratio, 10.0);
  }
}

TEST(ModulatedTrain, NormsTrackCoefficients) {
  const auto g = GridSpec::make(1, 8192, 64);
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  double lo = 1e300, hi = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::pair<Lattice, Complex>> terms;
    std::vector<double> mags;
    for (std::int64_t k = -20; k <= 20; k += 1 + trial % 3) {
      terms.emplace_back(Lattice{k, 0}, Complex(normal(rng), normal(rng)));
      mags.push_back(std::abs(terms.back().second));
    }
    const auto f = family_modulated_train(g, terms);
    const double ratio = lp_norm(f, Exponent(2)) / lq_seq_norm(mags, Exponent(2));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    EXPECT_LE(lp_norm(f, kInf), 4.0 * lq_seq_norm(mags, kInf));
  }
  EXPECT_LT(hi / lo, 2.0);
  const auto zero = family_modulated_train(g, {{Lattice{3, 0}, Complex(0.0)}});
  EXPECT_EQ(lp_norm(zero, kInf), 0.0);
}

TEST(DilatedKernel, L1InvariantAndPlateau) {
  const int m = 1024;
  double reference = 0.0;
  for (int e = 0; e <= 4; ++e) {
    const double t = std::ldexp(1.0, -e);
    // Scaling N with 1/t keeps the samples of t^{-1} eta(x/t) aligned.
    const auto g = GridSpec::make(1, std::size_t{8192} << e, m);
    const auto f = family_dilated_kernel(g, t);
    const double l1 = lp_norm(f, Exponent(1));
    if (e == 0) reference = l1;
    EXPECT_NEAR(l1, reference, 1e-8 * reference) << t;
    const auto hat = to_frequency(f);
    for (std::size_t i = 0; i < g.n; ++i) {
      if (std::abs(g.frequency(i)) <= 1.0 / t) EXPECT_NEAR(hat[i].real(), 1.0, 1e-12);
    }
  }
}

TEST(Families, DeterministicAndBandLimited) {
  for (auto kind : {FamilyKind::Dilation, FamilyKind::SingleBox, FamilyKind::Annulus, FamilyKind::LatticeComb,
                    FamilyKind::DilatedKernel}) {
    const auto g = grid_for_family(kind, 5, 1);
    const auto a = family_member(g, kind, 5);
    const auto b = family_member(g, kind, 5);
    EXPECT_EQ(rel_l2(a, b), 0.0) << to_string(kind);
    EXPECT_NO_THROW(require_band_margin(to_frequency(a))) << to_string(kind);
  }
  EXPECT_THROW(family_member(GridSpec::make(1, 64, 8), FamilyKind::ModulatedTrain, 1), std::invalid_argument);
}

TEST(Families, TwoDimensionalMembers) {
  for (auto kind : {FamilyKind::SingleBox, FamilyKind::Annulus}) {
    const auto g = grid_for_family(kind, 4, 2);
    const auto f = family_member(g, kind, 4);
    EXPECT_GT(lp_norm(f, Exponent(2)), 0.0);
  }
  const auto g = grid_for_family(FamilyKind::SingleBox, 4, 2);
  EXPECT_EQ(active_boxes(family_single_box(g, 4), Exponent(2)).size(), 1u);
}

}  // namespace
}  // namespace modspace
