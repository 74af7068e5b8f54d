#include "apriori/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace apriori {
namespace {

struct PlanSet {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t size = 0;
};

// Plans are created once per (dims, n) and executed on a shared aligned
// buffer under the cache mutex. fftw_execute on the planning buffer is the
// only thread-unsafe part of FFTW we touch.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void transform(const Grid& grid, const std::complex<double>* in, std::complex<double>* out,
                   bool forward) {
        std::lock_guard<std::mutex> lock(mutex_);
        PlanSet& ps = plans(grid);
        std::memcpy(ps.buf, in, ps.size * sizeof(fftw_complex));
        fftw_execute(forward ? ps.forward : ps.backward);
        std::memcpy(out, ps.buf, ps.size * sizeof(fftw_complex));
    }

  private:
    PlanSet& plans(const Grid& grid) {
        auto key = std::make_pair(grid.dims(), grid.n());
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        PlanSet ps;
        ps.size = grid.size();
        ps.buf = fftw_alloc_complex(ps.size);
        int dims[3] = {grid.n(), grid.n(), grid.n()};
        ps.forward = fftw_plan_dft(grid.dims(), dims, ps.buf, ps.buf, FFTW_FORWARD, FFTW_ESTIMATE);
        ps.backward = fftw_plan_dft(grid.dims(), dims, ps.buf, ps.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        return cache_.emplace(key, ps).first->second;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, PlanSet> cache_;
};

}  // namespace

std::vector<std::complex<double>> fft_forward(const Grid& grid, const std::vector<double>& real) {
    std::vector<std::complex<double>> tmp(real.begin(), real.end());
    std::vector<std::complex<double>> out(grid.size());
    PlanCache::instance().transform(grid, tmp.data(), out.data(), true);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : out) c *= scale;
    return out;
}

std::vector<double> fft_inverse(const Grid& grid, const std::vector<std::complex<double>>& coef) {
    std::vector<std::complex<double>> out(grid.size());
    PlanCache::instance().transform(grid, coef.data(), out.data(), false);
    std::vector<double> real(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i) real[i] = out[i].real();
    return real;
}

std::vector<std::complex<double>> fft_inverse_complex(const Grid& grid,
                                                      const std::vector<std::complex<double>>& coef) {
    std::vector<std::complex<double>> out(grid.size());
    PlanCache::instance().transform(grid, coef.data(), out.data(), false);
    return out;
}

}  // namespace apriori
