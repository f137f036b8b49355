#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "models.hpp"
#include "modspace/errors.hpp"
#include "modspace/families.hpp"
#include "modspace/norms.hpp"
#include "modspace/partitions.hpp"

namespace modspace {
namespace {

using testing::rel_l2;

TEST(SmoothProfile, Endpoints) {
  const SmoothProfile s(0.5, 0.75);
  EXPECT_EQ(s(0.0), 1.0);
  EXPECT_EQ(s(0.5), 1.0);
  EXPECT_EQ(s(0.75), 0.0);
  EXPECT_EQ(s(3.0), 0.0);
  EXPECT_NEAR(s(0.625), 0.5, 1e-15);
  for (double t = 0.5; t < 0.75; t += 0.01) EXPECT_GE(s(t), s(t + 0.01));
  EXPECT_THROW(SmoothProfile(1.0, 1.0), std::invalid_argument);
}

class UniformTest : public ::testing::Test {
 protected:
  GridSpec g1 = GridSpec::make(1, 2048, 16);
  GridSpec g2 = GridSpec::make(2, 256, 8);
};

TEST_F(UniformTest, ResidualAtRandomFrequencies) {
  const auto& part = uniform_partition(g1);
  const auto cover = part.coverage();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> pick(-(part.kmax() - 1) * g1.m, (part.kmax() - 1) * g1.m);
  for (int i = 0; i < 1000; ++i) EXPECT_NEAR(cover[g1.wrap_index(pick(rng))], 1.0, 1e-12);
}

TEST_F(UniformTest, PlateauAndSupport) {
  for (const auto& g : {g1, g2}) {
    const auto& part = uniform_partition(g);
    const auto w = part.window(Lattice{1, g.d == 2 ? -2 : 0});
    const double c0 = 1.0;
    const double c1 = g.d == 2 ? -2.0 : 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = g.frequency(g.d == 1 ? i : i / g.n) - c0;
      const double b = g.d == 1 ? 0.0 : g.frequency(i % g.n) - c1;
      const double r = std::max(std::abs(a), std::abs(b));
      if (r <= 0.25) EXPECT_NEAR(w[i], 1.0, 1e-12);
      if (r >= 0.75) EXPECT_LE(std::abs(w[i]), 1e-14);
    }
  }
  const auto w0 = uniform_partition(g1).window(Lattice{0, 0});
  EXPECT_EQ(w0[0], 1.0);
  EXPECT_EQ(w0[g1.wrap_index(static_cast<std::ptrdiff_t>(0.8 * g1.m))], 0.0);
}

TEST_F(UniformTest, TranslationCovariance) {
  const auto& part = uniform_partition(g1);
  const auto w0 = part.window(Lattice{0, 0});
  for (std::int64_t k : {-5, 3, 7}) {
    const auto wk = part.window(Lattice{k, 0});
    for (std::ptrdiff_t o = -g1.m; o <= g1.m; ++o) {
      EXPECT_EQ(wk[g1.wrap_index(k * g1.m + o)], w0[g1.wrap_index(o)]);
    }
  }
}

TEST_F(UniformTest, Reconstruction) {
  for (const auto& g : {g1, g2}) {
    const auto& part = uniform_partition(g);
    const auto f = random_band_limited(g, part.kmax() - 1, 17);
    GridFunction sum(g, Side::Space);
    for (const auto& k : part.lattice()) {
      const auto piece = part.box_apply(f, k);
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] += piece[i];
    }
    EXPECT_LT(rel_l2(sum, f), 1e-10);
  }
}

TEST_F(UniformTest, Orthogonality) {
  const auto& part = uniform_partition(g1);
  const auto f = random_band_limited(g1, part.kmax() - 1, 3);
  const double scale = lp_norm(f, Exponent(2));
  for (std::int64_t k : {-4, 0, 5}) {
    for (std::int64_t kk : {k + 2, k + 3, k - 2}) {
      const auto twice = part.box_apply(part.box_apply(f, Lattice{kk, 0}), Lattice{k, 0});
      EXPECT_LT(lp_norm(twice, Exponent(2)), 1e-12 * scale);
    }
  }
}

TEST(UniformPartition, NarrowSpectrumLivesInBoxZero) {
  const auto g1 = GridSpec::make(1, 4096, 32);
  const auto f = family_dilation(g1, 1.0);
  const auto& part = uniform_partition(g1);
  EXPECT_LT(rel_l2(part.box_apply(f, Lattice{0, 0}), f), 1e-12);
  const double scale = lp_norm(f, Exponent(2));
  EXPECT_LT(lp_norm(part.box_apply(f, Lattice{1, 0}), Exponent(2)), 1e-12 * scale);
  const auto& dyadic = dyadic_partition(g1);
  EXPECT_LT(rel_l2(dyadic.delta_apply(f, 0), f), 1e-12);
  for (int j = 2; j <= dyadic.levels(); ++j) EXPECT_LT(lp_norm(dyadic.delta_apply(f, j), Exponent(2)), 1e-12 * scale);
}

TEST_F(UniformTest, RejectsUndersampledOrOversizedBuilds) {
  EXPECT_THROW(UniformPartition::build(g1, UniformPartition::max_admissible(g1) + 1), BandError);
  EXPECT_THROW(uniform_partition(g1).box_apply(random_band_limited(g1, 1, 1), Lattice{1000, 0}), std::out_of_range);
}

class DyadicTest : public ::testing::Test {
 protected:
  GridSpec g1 = GridSpec::make(1, 4096, 8);
  GridSpec g2 = GridSpec::make(2, 256, 8);
};

TEST_F(DyadicTest, PointValues) {
  EXPECT_EQ(DyadicPartition::phi(3, 8.0), 1.0);
  EXPECT_EQ(DyadicPartition::phi(3, 32.0), 0.0);
  EXPECT_EQ(DyadicPartition::psi(1.25), 1.0);
  EXPECT_EQ(DyadicPartition::psi(1.5), 0.0);
}

TEST_F(DyadicTest, PlateauSupportAndResidual) {
  for (const auto& g : {g1, g2}) {
    const auto& part = dyadic_partition(g);
    const int top = part.levels();
    std::vector<RealVector> w;
    for (int j = 0; j <= top; ++j) w.push_back(part.window(j));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = g.frequency(g.d == 1 ? i : i / g.n);
      const double b = g.d == 1 ? 0.0 : g.frequency(i % g.n);
      const double r = std::hypot(a, b);
      double sum = 0.0;
      for (int j = 0; j <= top; ++j) {
        sum += w[j][i];
        const double s = std::ldexp(1.0, j);
        if (j >= 1 && j < top && r >= 0.75 * s && r <= 1.25 * s) EXPECT_NEAR(w[j][i], 1.0, 1e-12);
        if (j >= 1 && (r < 0.625 * s || r > 1.5 * s)) EXPECT_EQ(w[j][i], 0.0);
        for (int jj = j + 2; jj <= top; ++jj) EXPECT_EQ(w[j][i] * w[jj][i], 0.0);
      }
      if (r <= 1.25 * std::ldexp(1.0, top)) EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST_F(DyadicTest, Reconstruction) {
  for (const auto& g : {g1, g2}) {
    const auto& part = dyadic_partition(g);
    const auto f = random_band_limited(g, part.covered_radius() / g.d, 5);
    GridFunction sum(g, Side::Space);
    for (int j = 0; j <= part.levels(); ++j) {
      const auto piece = part.delta_apply(f, j);
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] += piece[i];
    }
    EXPECT_LT(rel_l2(sum, f), 1e-10);
  }
}

TEST_F(DyadicTest, BuildBeyondBandFails) {
  EXPECT_THROW(DyadicPartition::build(g1, DyadicPartition::max_admissible(g1) + 1), BandError);
  EXPECT_THROW(dyadic_partition(g1).window(-1), std::out_of_range);
}

// ||Delta_j box_k f||_p <= C ||box_k f||_p with one C for every (j, k).
TEST(Convolution, DyadicOfBoxIsUniformlyBounded) {
  const auto g = GridSpec::make(1, 4096, 8);
  const auto& up = uniform_partition(g);
  const auto& dp = dyadic_partition(g);
  for (const auto& p : {Exponent(1, 2), Exponent(1), Exponent(2), Exponent::infinity()}) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto f = random_band_limited(g, up.kmax() - 1, 100 + seed);
      for (const auto& k : up.lattice()) {
        if (std::abs(k[0]) > 80) continue;
        const auto box = up.box_apply(f, k);
        const double base = lp_norm(box, p);
        for (int j = 0; j <= dp.levels(); ++j) worst = std::max(worst, lp_norm(dp.delta_apply(box, j), p) / base);
      }
    }
    EXPECT_LT(worst, 8.0) << p.str();
  }
}

// ||f||_q <= C R^{d(1/p-1/q)} ||f||_p for supp fhat in B(xi0, R).
TEST(Bernstein, ConstantIsScaleFree) {
  const auto g = GridSpec::make(1, 4096, 8);
  const std::vector<std::pair<Exponent, Exponent>> pairs{
      {Exponent(1), Exponent(2)}, {Exponent(1), Exponent::infinity()}, {Exponent(2), Exponent::infinity()},
      {Exponent(1, 2), Exponent(1)}};
  for (const auto& [p, q] : pairs) {
    double lo = 1e300, hi = 0.0;
    for (double radius : {4.0, 8.0, 16.0, 32.0}) {
      for (double xi0 : {0.0, 37.0, 90.0}) {
        const auto f = testing::bump_cluster(g, xi0, radius, 7);
        const double c = lp_norm(f, q) / (std::pow(radius, to_double(reciprocal(p) - reciprocal(q))) * lp_norm(f, p));
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
    }
    EXPECT_LT(hi / lo, 4.0) << p.str() << "->" << q.str();
  }
}

// || |f| * |g| ||_p <= C (R1+R2)^{d(1/p-1)} ||f||_p ||g||_p for 0 < p < 1.
TEST(QuasiYoung, ConstantBounded) {
  const auto g = GridSpec::make(1, 4096, 8);
  for (const auto& p : {Exponent(1, 2), Exponent(2, 3)}) {
    const double pd = p.to_double();
    double lo = 1e300, hi = 0.0;
    for (double r1 : {2.0, 4.0, 8.0}) {
      for (double r2 : {2.0, 4.0, 8.0}) {
        const auto f = testing::bump_cluster(g, 5.0, r1, 1);
        const auto h = testing::bump_cluster(g, -3.0, r2, 2);
        const auto conv = testing::convolve(testing::modulus(f), testing::modulus(h));
        const double c = lp_norm(conv, p) / (std::pow(r1 + r2, 1 / pd - 1) * lp_norm(f, p) * lp_norm(h, p));
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
    }
    EXPECT_LT(hi / lo, 16.0) << p.str();
    EXPECT_LT(hi, 100.0);
  }
}

TEST(IndexSets, Examples) {
  const auto a4 = index_set_a(4, 1);
  ASSERT_EQ(a4.members.size(), 14u);
  EXPECT_EQ(a4.members.front()[0], -19);
  EXPECT_EQ(a4.members.back()[0], 19);
  for (const auto& k : a4.members) EXPECT_TRUE(std::abs(k[0]) >= 13 && std::abs(k[0]) <= 19);
  const auto kt = index_set_k(Rational(1, 10), 1);
  ASSERT_EQ(kt.members.size(), 19u);
  EXPECT_EQ(kt.members.front()[0], -9);
  EXPECT_TRUE(index_set_a(1, 1).members.empty());
  EXPECT_FALSE(index_set_a(1, 1).warning.empty());
  EXPECT_THROW(index_set_k(Rational(0), 1), std::invalid_argument);
}

TEST(IndexSets, AInsideBAndGrowth) {
  for (int d : {1, 2}) {
    for (int l = 2; l <= (d == 1 ? 10 : 7); ++l) {
      const auto a = index_set_a(l, d);
      const auto b = index_set_b(l, d);
      EXPECT_TRUE(std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end()));
      if (l >= 4) {
        const double excess = std::log2(static_cast<double>(a.members.size())) - l * d;
        EXPECT_GT(excess, -3.0);
        EXPECT_LT(excess, 3.0);
      }
    }
  }
}

TEST(IndexSets, MembershipMatchesDefinition) {
  // k + [-3/4,3/4]^2 inside D_l, checked on the cube corners in quarter units.
  const int l = 4;
  const auto a = index_set_a(l, 2);
  std::set<Lattice> members(a.members.begin(), a.members.end());
  for (std::int64_t x = -25; x <= 25; ++x) {
    for (std::int64_t y = -25; y <= 25; ++y) {
      auto extreme = [&](bool far) {
        auto axis = [&](std::int64_t k) {
          const std::int64_t lo = std::abs(4 * k) - 3;
          const std::int64_t hi = std::abs(4 * k) + 3;
          if (far) return hi;
          return lo < 0 ? std::int64_t{0} : lo;
        };
        return axis(x) * axis(x) + axis(y) * axis(y);
      };
      const std::int64_t inner = 4 * 3 * 4, outer = 4 * 5 * 4;  // 3*2^l/4 and 5*2^l/4 in quarter units
      const bool inside = extreme(false) >= inner * inner && extreme(true) <= outer * outer;
      EXPECT_EQ(members.count(Lattice{x, y}) == 1, inside) << x << "," << y;
    }
  }
}

}  // namespace
}  // namespace modspace
