#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace modspace::detail {

namespace {

using Key = std::tuple<int, std::size_t, FftDirection, bool>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  // FFTW's planner is not re-entrant; execution of an existing plan is.
  fftw_plan get(const Key& key) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const auto [d, n, dir, in_place] = key;
    const std::size_t total = d == 1 ? n : n * n;
    ComplexVector a(total), b(in_place ? 0 : total);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = in_place ? pa : reinterpret_cast<fftw_complex*>(b.data());
    const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    // ESTIMATE keeps plans (and therefore roundoff) identical from run to run.
    const int ni = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | (in_place ? 0u : FFTW_PRESERVE_INPUT);
    fftw_plan plan = d == 1 ? fftw_plan_dft_1d(ni, pa, pb, sign, flags) : fftw_plan_dft_2d(ni, ni, pa, pb, sign, flags);
    if (!plan) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void fft(int d, std::size_t n, FftDirection dir, const Complex* in, Complex* out) {
  const bool in_place = in == out;
  fftw_plan plan = cache().get({d, n, dir, in_place});
  // Out-of-place plans carry PRESERVE_INPUT, so the const_cast is safe.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace modspace::detail
