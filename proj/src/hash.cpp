#include "authornet/hash.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "authornet/errors.hpp"

namespace authornet {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_string(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return digest_string(ss.str());
}

}  // namespace authornet
