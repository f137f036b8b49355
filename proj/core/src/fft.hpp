#pragma once

#include <cstddef>

#include "modspace/aligned.hpp"

namespace modspace::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalized d-dimensional DFT of an N^d array. in and out may alias. Plans
/// are cached per (d, N, direction, in-place) and reused from any thread.
void fft(int d, std::size_t n, FftDirection dir, const Complex* in, Complex* out);

}  // namespace modspace::detail
