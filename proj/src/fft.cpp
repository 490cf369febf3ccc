#include "bmocz/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bmocz::fft {

namespace {

// fftw plan creation/destruction is not thread-safe; execution is
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;
  std::size_t n = 0;

  explicit Plan(std::size_t N) : n(N) {
    in = fftw_alloc_complex(N);
    out = fftw_alloc_complex(N);
    if (!in || !out) throw std::bad_alloc();
    std::lock_guard lk(plan_mutex());
    plan = fftw_plan_dft_1d(int(N), in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
  }
  ~Plan() {
    if (plan) {
      std::lock_guard lk(plan_mutex());
      fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
};

}  // namespace

void forward(std::span<const std::complex<double>> x, std::size_t N,
             std::vector<std::complex<double>>& out) {
  if (N == 0 || x.size() > N) throw std::invalid_argument("fft::forward: need N >= input length");
  thread_local std::map<std::size_t, std::unique_ptr<Plan>> plans;
  auto& p = plans[N];
  if (!p) p = std::make_unique<Plan>(N);
  auto* pin = reinterpret_cast<std::complex<double>*>(p->in);
  std::copy(x.begin(), x.end(), pin);
  std::fill(pin + x.size(), pin + N, std::complex<double>{});
  fftw_execute(p->plan);
  const auto* pout = reinterpret_cast<const std::complex<double>*>(p->out);
  out.assign(pout, pout + N);
}

}  // namespace bmocz::fft
