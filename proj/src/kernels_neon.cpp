#include "authornet/kernels.hpp"

#if defined(__aarch64__)
#define AUTHORNET_NEON 1
#include <arm_neon.h>
#else
#define AUTHORNET_NEON 0
#endif

namespace authornet::kernels {

#if AUTHORNET_NEON

namespace neon {

double sum(std::span<const double> x) {
    const double* p = x.data();
    std::size_t n = x.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(p + i));
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) total += p[i];
    return total;
}

void scale(std::span<double> x, double factor) {
    double* p = x.data();
    std::size_t n = x.size();
    float64x2_t f = vdupq_n_f64(factor);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(p + i, vmulq_f64(vld1q_f64(p + i), f));
    for (; i < n; ++i) p[i] *= factor;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    const double* pa = a.data();
    const double* pb = b.data();
    std::size_t n = a.size();
    float64x2_t best = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vabdq_f64(vld1q_f64(pa + i), vld1q_f64(pb + i));
        best = vmaxq_f64(best, d);
    }
    double m = vmaxvq_f64(best);
    for (; i < n; ++i) {
        double d = pa[i] - pb[i];
        if (d < 0) d = -d;
        if (d > m) m = d;
    }
    return m;
}

double gather_weighted_sum(std::span<const double> weights,
                           std::span<const std::int32_t> indices, const double* x) {
    // No hardware gather on NEON; lane loads keep the FMA pipeline busy.
    const double* w = weights.data();
    const std::int32_t* idx = indices.data();
    std::size_t n = weights.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        float64x2_t vx = {x[idx[k]], x[idx[k + 1]]};
        acc = vfmaq_f64(acc, vld1q_f64(w + k), vx);
    }
    double total = vaddvq_f64(acc);
    for (; k < n; ++k) total += w[k] * x[idx[k]];
    return total;
}

}  // namespace neon

const KernelTable* neon_table() {
    static const KernelTable table = {"neon", neon::sum, neon::scale, neon::max_abs_diff,
                                      neon::gather_weighted_sum};
    return &table;
}

#else

const KernelTable* neon_table() { return nullptr; }

#endif  // AUTHORNET_NEON

}  // namespace authornet::kernels
