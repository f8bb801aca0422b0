#pragma once

#include <optional>
#include <string>

#include "primroot/prime_engine.hpp"

namespace primroot {

// Flat binary prime-table cache.  Layout: magic "PTBL1", little-endian 64-bit
// limit, little-endian 64-bit count, then `count` single-byte gaps where
// byte 0 is the first prime (2) and byte i is primes[i] - primes[i-1].
// Every gap below 1e8 fits in a byte.
void write_prime_table(const PrimeTable& table, const std::string& path);
std::optional<PrimeTable> read_prime_table(const std::string& path);

// Sieve, or reuse a table cached under $PRIMROOT_CACHE_DIR when that is set.
PrimeTable load_or_sieve(std::uint64_t limit);

inline constexpr const char* kCacheDirEnvVar = "PRIMROOT_CACHE_DIR";

}  // namespace primroot
