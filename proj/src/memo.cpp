#include "finmod/memo.hpp"

#include <cstdio>

namespace finmod {

Memo& memo() {
    static Memo m;
    return m;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(s));
    return std::string(buf);
}

}  // namespace finmod
