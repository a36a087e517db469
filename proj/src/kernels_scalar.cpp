#include <cmath>

#include "authornet/kernels.hpp"

namespace authornet::kernels {

namespace scalar {

double sum(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

void scale(std::span<double> x, double factor) {
    for (double& v : x) v *= factor;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > best) best = d;
    }
    return best;
}

double gather_weighted_sum(std::span<const double> weights,
                           std::span<const std::int32_t> indices, const double* x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) acc += weights[k] * x[indices[k]];
    return acc;
}

}  // namespace scalar

const KernelTable& scalar_table() {
    static const KernelTable table = {"scalar", scalar::sum, scalar::scale,
                                      scalar::max_abs_diff, scalar::gather_weighted_sum};
    return table;
}

}  // namespace authornet::kernels
