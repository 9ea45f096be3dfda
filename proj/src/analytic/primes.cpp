#include "artin/analytic/primes.hpp"

#include <cmath>

namespace artin {

std::vector<std::uint64_t> sieve(std::uint64_t H) {
  std::vector<std::uint64_t> out;
  if (H < 2) return out;
  // odd-only: index i <-> 2i+1
  std::size_t m = (H - 1) / 2 + 1;
  std::vector<std::uint8_t> comp(m, 0);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= H; ++i) {
    if (comp[i]) continue;
    std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < m; j += p) comp[j] = 1;
  }
  out.reserve(static_cast<std::size_t>(1.3 * H / std::max(1.0, std::log(static_cast<double>(H)))) + 8);
  out.push_back(2);
  for (std::size_t i = 1; i < m; ++i)
    if (!comp[i]) out.push_back(2 * i + 1);
  return out;
}

std::uint64_t prime_pi(std::uint64_t H) { return sieve(H).size(); }

void squarefree_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& primes,
                        std::vector<std::uint8_t>& flags) {
  flags.assign(hi > lo ? hi - lo : 0, 1);
  if (lo == 0 && !flags.empty()) flags[0] = 0;
  for (std::uint64_t p : primes) {
    std::uint64_t q = p * p;
    if (q >= hi) break;
    std::uint64_t start = (lo + q - 1) / q * q;
    for (std::uint64_t x = start; x < hi; x += q) flags[x - lo] = 0;
  }
}

std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    f.emplace_back(p, k);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace artin
