#include "authornet/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define AUTHORNET_X86 1
#include <immintrin.h>
#else
#define AUTHORNET_X86 0
#endif

namespace authornet::kernels {

#if AUTHORNET_X86

namespace avx2 {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum(std::span<const double> x) {
    const double* p = x.data();
    std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(p + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += p[i];
    return total;
}

void scale(std::span<double> x, double factor) {
    double* p = x.data();
    std::size_t n = x.size();
    __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
    for (; i < n; ++i) p[i] *= factor;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    const double* pa = a.data();
    const double* pb = b.data();
    std::size_t n = a.size();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        best = _mm256_max_pd(best, _mm256_andnot_pd(sign_mask, d));
    }
    double m = hmax(best);
    for (; i < n; ++i) {
        double d = pa[i] - pb[i];
        if (d < 0) d = -d;
        if (d > m) m = d;
    }
    return m;
}

double gather_weighted_sum(std::span<const double> weights,
                           std::span<const std::int32_t> indices, const double* x) {
    const double* w = weights.data();
    const std::int32_t* idx = indices.data();
    std::size_t n = weights.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k));
        __m256d vx = _mm256_i32gather_pd(x, vi, 8);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + k), vx, acc);
    }
    double total = hsum(acc);
    for (; k < n; ++k) total += w[k] * x[idx[k]];
    return total;
}

}  // namespace avx2

const KernelTable* avx2_table() {
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (!supported) return nullptr;
    static const KernelTable table = {"avx2", avx2::sum, avx2::scale, avx2::max_abs_diff,
                                      avx2::gather_weighted_sum};
    return &table;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif  // AUTHORNET_X86

}  // namespace authornet::kernels
