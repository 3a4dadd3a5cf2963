#include "nlc/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nlc {
namespace fft {

namespace {

// One cached plan pair with its own work buffers. FFTW's planner is not
// thread safe and execution reuses the plan buffers, so every use is
// serialized by the registry mutex.
struct PlanPair {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan fwd{};
    fftw_plan bwd{};
    std::size_t n = 0;

    PlanPair(int dim, int size) {
        n = 1;
        for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(size);
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        int dims[3] = {size, size, size};
        fwd = fftw_plan_dft(dim, dims, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft(dim, dims, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
    }
    ~PlanPair() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(out);
    }
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;
};

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

PlanPair& plan_for(const Grid& g) {
    static std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> registry;
    const auto key = std::make_pair(g.dim(), g.size());
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<PlanPair>(g.dim(), g.size())).first;
    return *it->second;
}

void execute(const Grid& g, std::span<const std::complex<double>> in, std::span<std::complex<double>> out,
             bool forward_dir) {
    if (in.size() != g.modes() || out.size() != g.modes())
        throw std::invalid_argument("fft buffer size does not match grid");
    std::lock_guard lock(registry_mutex());
    PlanPair& p = plan_for(g);
    std::memcpy(p.in, in.data(), sizeof(fftw_complex) * p.n);
    fftw_execute(forward_dir ? p.fwd : p.bwd);
    const double scale = forward_dir ? 1.0 / static_cast<double>(p.n) : 1.0;
    auto* src = reinterpret_cast<std::complex<double>*>(p.out);
    for (std::size_t i = 0; i < p.n; ++i) out[i] = src[i] * scale;
}

}  // namespace

void forward(const Grid& g, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(g, in, out, true);
}

void backward(const Grid& g, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    execute(g, in, out, false);
}

}  // namespace fft
}  // namespace nlc
