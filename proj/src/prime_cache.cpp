#include "primroot/prime_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <vector>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

constexpr char kMagic[5] = {'P', 'T', 'B', 'L', '1'};

void put_u64le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_prime_table(const PrimeTable& table, const std::string& path) {
  std::string buf;
  buf.reserve(21 + table.primes.size());
  buf.append(kMagic, 5);
  put_u64le(buf, table.limit);
  put_u64le(buf, table.primes.size());
  std::uint64_t prev = 0;
  for (std::uint32_t p : table.primes) {
    const std::uint64_t gap = p - prev;
    if (gap > 0xff) throw CapacityError("prime gap does not fit the PTBL1 byte format");
    buf.push_back(static_cast<char>(gap));
    prev = p;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot open prime cache file for writing: " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::optional<PrimeTable> read_prime_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (raw.size() < 21 || std::memcmp(raw.data(), kMagic, 5) != 0) return std::nullopt;
  PrimeTable table;
  table.limit = get_u64le(raw.data() + 5);
  const std::uint64_t count = get_u64le(raw.data() + 13);
  if (raw.size() != 21 + count) return std::nullopt;
  table.primes.reserve(count);
  std::uint64_t cur = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    cur += raw[21 + i];
    table.primes.push_back(static_cast<std::uint32_t>(cur));
  }
  return table;
}

PrimeTable load_or_sieve(std::uint64_t limit) {
  const char* dir = std::getenv(kCacheDirEnvVar);
  if (dir == nullptr || *dir == '\0') return sieve_primes(limit);
  const std::string path = std::string(dir) + "/ptbl_" + std::to_string(limit) + ".bin";
  if (auto cached = read_prime_table(path); cached && cached->limit == limit) {
    return std::move(*cached);
  }
  PrimeTable table = sieve_primes(limit);
  try {
    write_prime_table(table, path);
  } catch (...) {
    // cache writes are best effort
  }
  return table;
}

}  // namespace primroot
