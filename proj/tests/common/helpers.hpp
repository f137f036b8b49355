#pragma once

#include <cmath>

#include "modspace/grid.hpp"

namespace modspace::testing {

inline double rel_l2(const GridFunction& a, const GridFunction& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

inline GridFunction combine(Complex alpha, const GridFunction& f, Complex beta, const GridFunction& g) {
  GridFunction out(f.spec(), f.side());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = alpha * f[i] + beta * g[i];
  return out;
}

inline GridFunction scaled(const GridFunction& f, Complex alpha) {
  GridFunction out(f.spec(), f.side());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = alpha * f[i];
  return out;
}

}  // namespace modspace::testing
