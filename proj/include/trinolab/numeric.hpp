// Integer helpers shared by the field engine: powers of three, checked
// 64-bit arithmetic and trial-division factorization of group orders.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace trinolab {

/// Error type for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace numeric {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow");
  return out;
}

inline std::uint64_t pow3(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) out = checked_mul(out, 3);
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Prime factors of 3^(2k) - 1, via the split (3^k - 1)(3^k + 1) so trial
/// division stays below sqrt(3^k + 1).
inline std::vector<std::uint64_t> group_order_factors(unsigned k) {
  const std::uint64_t q = pow3(k);
  auto lo = prime_factors(q - 1);
  auto hi = prime_factors(q + 1);
  lo.insert(lo.end(), hi.begin(), hi.end());
  std::sort(lo.begin(), lo.end());
  lo.erase(std::unique(lo.begin(), lo.end()), lo.end());
  return lo;
}

}  // namespace numeric
}  // namespace trinolab
