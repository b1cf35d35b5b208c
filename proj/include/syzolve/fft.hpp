#pragma once

// Thin FFTW wrappers. Plans are cached per size and shared across threads; planning
// is serialized, execution uses the new-array interface.

#include <fftw3.h>

#include <bit>
#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

namespace syzolve::fft {

using cplx = std::complex<double>;

inline std::size_t next_power_of_two(std::size_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

namespace detail {

enum class Kind { forward, backward, r2c, c2r };

class PlanCache {
 public:
  static PlanCache& get() {
    static PlanCache c;
    return c;
  }

  fftw_plan plan(Kind kind, std::size_t n) {
    std::lock_guard lock(mu_);
    const auto key = std::make_tuple(kind, n);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_complex* c = fftw_alloc_complex(n);
    double* r = fftw_alloc_real(n);
    fftw_plan p = nullptr;
    switch (kind) {
      case Kind::forward: p = fftw_plan_dft_1d(len, c, c, FFTW_FORWARD, flags); break;
      case Kind::backward: p = fftw_plan_dft_1d(len, c, c, FFTW_BACKWARD, flags); break;
      case Kind::r2c: p = fftw_plan_dft_r2c_1d(len, r, c, flags); break;
      case Kind::c2r: p = fftw_plan_dft_c2r_1d(len, c, r, flags); break;
    }
    fftw_free(c);
    fftw_free(r);
    plans_.emplace(key, p);
    return p;
  }

  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<Kind, std::size_t>, fftw_plan> plans_;
};

inline fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace detail

/// In-place DFT of any length, X_k = sum_j a_j exp(-2 pi i jk/N). Inverse includes the 1/N factor.
inline void transform(std::span<cplx> a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  const auto kind = inverse ? detail::Kind::backward : detail::Kind::forward;
  fftw_execute_dft(detail::PlanCache::get().plan(kind, n), detail::as_fftw(a.data()), detail::as_fftw(a.data()));
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

/// Linear convolution of two real sequences.
inline std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out = a.size() + b.size() - 1;
  const std::size_t n = next_power_of_two(out);
  auto& cache = detail::PlanCache::get();
  const fftw_plan r2c = cache.plan(detail::Kind::r2c, n);
  std::vector<double> ra(n, 0.0), rb(n, 0.0);
  std::copy(a.begin(), a.end(), ra.begin());
  std::copy(b.begin(), b.end(), rb.begin());
  std::vector<cplx> fa(n / 2 + 1), fb(n / 2 + 1);
  fftw_execute_dft_r2c(r2c, ra.data(), detail::as_fftw(fa.data()));
  fftw_execute_dft_r2c(r2c, rb.data(), detail::as_fftw(fb.data()));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k] * scale;
  fftw_execute_dft_c2r(cache.plan(detail::Kind::c2r, n), detail::as_fftw(fa.data()), ra.data());
  ra.resize(out);
  return ra;
}

}  // namespace syzolve::fft
