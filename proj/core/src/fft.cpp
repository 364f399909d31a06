#include "mpns/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mpns {
namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.  Each
// thread keeps its own plans and aligned scratch so field operations stay
// pure and lock-free after first use.
std::mutex plan_mutex;

struct PlanSet {
    int n = 0;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit PlanSet(int n_) : n(n_) {
        const size_t count = static_cast<size_t>(n) * n * n;
        in = fftw_alloc_complex(count);
        out = fftw_alloc_complex(count);
        std::lock_guard<std::mutex> lock(plan_mutex);
        fwd = fftw_plan_dft_3d(n, n, n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_3d(n, n, n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;
    ~PlanSet() {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(out);
    }
};

PlanSet& plans_for(int n) {
    thread_local std::map<int, std::unique_ptr<PlanSet>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlanSet>(n);
    return *slot;
}

}  // namespace

ScalarField to_spectral(const ScalarField& f) {
    auto s = f.samples();  // throws on mismatched representation
    PlanSet& p = plans_for(f.grid().n);
    const long count = f.grid().size();
    for (long i = 0; i < count; ++i) {
        p.in[i][0] = s[i];
        p.in[i][1] = 0.0;
    }
    fftw_execute(p.fwd);
    const double scale = 1.0 / static_cast<double>(count);
    std::vector<Complex> modes(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i)
        modes[i] = Complex{p.out[i][0] * scale, p.out[i][1] * scale};
    return ScalarField::from_modes(f.grid(), std::move(modes));
}

ScalarField to_real(const ScalarField& f) {
    auto m = f.modes();
    PlanSet& p = plans_for(f.grid().n);
    const long count = f.grid().size();
    for (long i = 0; i < count; ++i) {
        p.in[i][0] = m[i].real();
        p.in[i][1] = m[i].imag();
    }
    fftw_execute(p.bwd);
    std::vector<double> samples(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) samples[i] = p.out[i][0];
    return ScalarField::from_samples(f.grid(), std::move(samples));
}

ScalarField as_spectral(const ScalarField& f) {
    return f.is_spectral() ? f : to_spectral(f);
}

ScalarField as_real(const ScalarField& f) { return f.is_real() ? f : to_real(f); }

VectorField to_spectral(const VectorField& v) {
    return VectorField{{to_spectral(v[0]), to_spectral(v[1]), to_spectral(v[2])}};
}

VectorField to_real(const VectorField& v) {
    return VectorField{{to_real(v[0]), to_real(v[1]), to_real(v[2])}};
}

VectorField as_spectral(const VectorField& v) {
    return v.rep() == Rep::Spectral ? v : to_spectral(v);
}

VectorField as_real(const VectorField& v) {
    return v.rep() == Rep::Real ? v : to_real(v);
}

}  // namespace mpns
