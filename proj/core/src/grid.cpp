#include "modspace/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fft.hpp"
#include "modspace/errors.hpp"

namespace modspace {

GridSpec GridSpec::make(int d, std::size_t n, int m) {
  if (d != 1 && d != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
  if (n < 2 || !std::has_single_bit(n)) throw std::invalid_argument("grid size N must be a power of two >= 2");
  if (m < 8) throw ResolutionError("oversampling factor M must be >= 8, got " + std::to_string(m));
  return GridSpec{d, n, m};
}

GridSpec GridSpec::covering(int d, int m, double omega) {
  std::size_t n = 2;
  while (static_cast<double>(n) / (2.0 * m) < omega) n *= 2;
  return make(d, n, m);
}

double GridSpec::period() const { return 2.0 * std::numbers::pi * m; }
double GridSpec::spacing() const { return period() / static_cast<double>(n); }
double GridSpec::space_cell() const { return std::pow(spacing(), d); }
double GridSpec::frequency_cell() const { return std::pow(delta(), d); }

std::string_view to_string(Side side) { return side == Side::Space ? "space" : "frequency"; }

GridFunction::GridFunction(const GridSpec& spec, Side side) : spec_(spec), side_(side), data_(spec.size()) {}

GridFunction::GridFunction(const GridSpec& spec, Side side, ComplexVector data)
    : spec_(spec), side_(side), data_(std::move(data)) {
  if (data_.size() != spec_.size()) {
    throw ShapeError("sample count " + std::to_string(data_.size()) + " does not match grid size " +
                     std::to_string(spec_.size()));
  }
}

double GridFunction::peak() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

GridFunction transform(const GridFunction& f, Side target) {
  if (f.side() == target) return f;
  const GridSpec& g = f.spec();
  ComplexVector out(g.size());
  const bool forward = target == Side::Frequency;
  detail::fft(g.d, g.n, forward ? detail::FftDirection::Forward : detail::FftDirection::Backward, f.values().data(),
              out.data());
  const double scale = forward ? g.space_cell() : 1.0 / std::pow(g.period(), g.d);
  for (auto& z : out) z *= scale;
  return GridFunction(g, target, std::move(out));
}

namespace {

template <class T>
GridFunction multiply_then_invert(const GridFunction& f, std::span<const T> m) {
  if (m.size() != f.size()) {
    throw ShapeError("multiplier has " + std::to_string(m.size()) + " entries, grid has " + std::to_string(f.size()));
  }
  GridFunction spectrum = to_frequency(f);
  auto v = spectrum.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= m[i];
  return to_space(spectrum);
}

}  // namespace

GridFunction apply_multiplier(const GridFunction& f, std::span<const double> m) { return multiply_then_invert(f, m); }

GridFunction apply_multiplier(const GridFunction& f, std::span<const Complex> m) { return multiply_then_invert(f, m); }

double lp_sum(std::span<const Complex> z, double cell, const Exponent& p) {
  double result = 0.0;
  if (p.is_infinite()) {
    for (const auto& v : z) result = std::max(result, std::abs(v));
  } else {
    const double pd = p.to_double();
    double sum = 0.0;
    if (pd == 2.0) {
      for (const auto& v : z) sum += std::norm(v);
    } else if (pd == 1.0) {
      for (const auto& v : z) sum += std::abs(v);
    } else {
      // |z|^p computed from |z|^2 skips a square root per sample.
      const double half = pd / 2.0;
      for (const auto& v : z) {
        const double n2 = std::norm(v);
        if (n2 > 0.0) sum += std::pow(n2, half);
      }
    }
    result = std::pow(sum * cell, 1.0 / pd);
  }
  if (!std::isfinite(result)) throw std::invalid_argument("non-finite samples in Lp evaluation");
  return result;
}

double lp_norm(const GridFunction& f, const Exponent& p) {
  if (f.side() != Side::Space) throw ShapeError("lp_norm expects a space-side function");
  return lp_sum(f.values(), f.spec().space_cell(), p);
}

double lq_seq_norm(std::span<const double> a, const Exponent& q, const std::function<double(std::size_t)>& weight) {
  auto term = [&](std::size_t k) { return std::abs(weight ? weight(k) * a[k] : a[k]); };
  if (q.is_infinite()) {
    double best = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, term(k));
    return best;
  }
  const double qd = q.to_double();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = term(k);
    if (t > 0.0) sum += qd == 1.0 ? t : std::pow(t, qd);
  }
  return qd == 1.0 ? sum : std::pow(sum, 1.0 / qd);
}

double band_excess(const GridFunction& spectrum, double radius) {
  if (spectrum.side() != Side::Frequency) throw ShapeError("band_excess expects a frequency-side function");
  const GridSpec& g = spectrum.spec();
  const double peak = spectrum.peak();
  if (peak == 0.0) return 0.0;
  auto outside = [&](std::size_t i) { return std::abs(g.frequency(i)) > radius; };
  double worst = 0.0;
  const auto v = spectrum.values();
  if (g.d == 1) {
    for (std::size_t i = 0; i < g.n; ++i) {
      if (outside(i)) worst = std::max(worst, std::abs(v[i]));
    }
  } else {
    for (std::size_t i = 0; i < g.n; ++i) {
      const bool row_out = outside(i);
      for (std::size_t j = 0; j < g.n; ++j) {
        if (row_out || outside(j)) worst = std::max(worst, std::abs(v[i * g.n + j]));
      }
    }
  }
  return worst / peak;
}

void require_band_margin(const GridFunction& spectrum, double rel_tol) {
  const GridSpec& g = spectrum.spec();
  const double radius = g.omega() * (1.0 - 2.0 / static_cast<double>(g.n));
  const double excess = band_excess(spectrum, radius);
  if (excess > rel_tol) {
    throw BandError("spectrum exceeds the band margin |xi| <= " + std::to_string(radius) + " (relative excess " +
                    std::to_string(excess) + ")");
  }
}

void write_binary(const GridFunction& f, const std::filesystem::path& path) {
  static_assert(std::endian::native == std::endian::little, "binary export assumes a little-endian host");
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(f.values().data()),
              static_cast<std::streamsize>(f.size() * sizeof(Complex)));
    if (!out) throw std::runtime_error("failed writing " + path.string());
  }
  const GridSpec& g = f.spec();
  nlohmann::json header = {{"d", g.d}, {"N", g.n}, {"M", g.m}, {"P", g.period()}, {"side", to_string(f.side())}};
  std::ofstream meta(path.string() + ".json");
  if (!meta) throw std::runtime_error("cannot open header for " + path.string());
  meta << header.dump(2) << '\n';
}

GridFunction read_binary(const std::filesystem::path& path) {
  std::ifstream meta(path.string() + ".json");
  if (!meta) throw std::runtime_error("missing header " + path.string() + ".json");
  const auto header = nlohmann::json::parse(meta);
  const GridSpec g = GridSpec::make(header.at("d").get<int>(), header.at("N").get<std::size_t>(), header.at("M").get<int>());
  const auto side_name = header.at("side").get<std::string>();
  if (side_name != "space" && side_name != "frequency") throw std::runtime_error("unknown side '" + side_name + "'");
  ComplexVector data(g.size());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(Complex)));
  if (in.gcount() != static_cast<std::streamsize>(data.size() * sizeof(Complex)) || in.peek() != EOF) {
    throw ShapeError("binary payload size does not match the header");
  }
  return GridFunction(g, side_name == "space" ? Side::Space : Side::Frequency, std::move(data));
}

}  // namespace modspace
