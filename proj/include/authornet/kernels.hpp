#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace authornet::kernels {

/// Dense vector primitives used by the score iteration. Each variant fills
/// one table; all variants must agree with the scalar reference within
/// floating-point reassociation error (covered by the equivalence tests).
struct KernelTable {
    const char* name;
    double (*sum)(std::span<const double> x);
    void (*scale)(std::span<double> x, double factor);
    double (*max_abs_diff)(std::span<const double> a, std::span<const double> b);
    // Sparse row reduction: sum of weights[k] * x[indices[k]].
    double (*gather_weighted_sum)(std::span<const double> weights,
                                  std::span<const std::int32_t> indices, const double* x);
};

/// Portable reference implementation; always available.
const KernelTable& scalar_table();

/// AVX2+FMA variant; nullptr when the build or the CPU lacks support.
const KernelTable* avx2_table();

/// NEON variant; nullptr off aarch64.
const KernelTable* neon_table();

/// Variant picked at startup: best available, overridable with the
/// AUTHORNET_KERNELS environment variable (auto|scalar|avx2|neon).
const KernelTable& active();

/// Every variant usable on this machine (scalar first).
std::vector<const KernelTable*> available_tables();

}  // namespace authornet::kernels
