// Shared error helpers and configuration.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ug24 {

// Precondition failure: the caller passed something invalid.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency failure: a computed result violates a contract
// that the implementation is supposed to establish.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error("internal check failed: " + msg);
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Seed used by the randomized parts (equal-degree polynomial splitting,
// idempotent-splitting fallback). Fixed by default so runs are replayable;
// override with the UG24_SEED environment variable.
inline std::uint64_t default_seed() {
    if (const char* s = std::getenv("UG24_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 0x75672434u;  // arbitrary fixed constant
}

}  // namespace ug24
