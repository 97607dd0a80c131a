#include "prandtl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace prandtl {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

PlanPair get_plans(int n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    p.fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[n] = p;
    return p;
}

} // namespace

void fft_strided(std::complex<double>* data, int n, std::size_t stride, bool forward) {
    const PlanPair plans = get_plans(n);
    thread_local std::vector<std::complex<double>> scratch;
    scratch.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = data[i * stride];
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_execute_dft(forward ? plans.fwd : plans.bwd, buf, buf);
    const double scale = forward ? 1.0 / n : 1.0;
    for (int i = 0; i < n; ++i) data[i * stride] = scratch[static_cast<std::size_t>(i)] * scale;
}

} // namespace prandtl
