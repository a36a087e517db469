#include "authornet/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace authornet::kernels {

namespace {

const KernelTable& pick() {
    const char* env = std::getenv("AUTHORNET_KERNELS");
    std::string_view want = env ? env : "auto";
    if (want == "scalar") return scalar_table();
    if (want == "avx2" && avx2_table()) return *avx2_table();
    if (want == "neon" && neon_table()) return *neon_table();
    // auto (or an unavailable request): best variant present on this CPU
    if (const KernelTable* t = avx2_table()) return *t;
    if (const KernelTable* t = neon_table()) return *t;
    return scalar_table();
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = pick();
    return table;
}

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> tables = {&scalar_table()};
    if (const KernelTable* t = avx2_table()) tables.push_back(t);
    if (const KernelTable* t = neon_table()) tables.push_back(t);
    return tables;
}

}  // namespace authornet::kernels
