#pragma once

#include <cstdint>
#include <vector>

namespace artin {

// Primes p <= H in increasing order (empty for H < 2).
std::vector<std::uint64_t> sieve(std::uint64_t H);
std::uint64_t prime_pi(std::uint64_t H);

// flags[i] = 1 iff lo + i is squarefree, for lo + i in [lo, hi). `primes` must
// contain every prime p with p*p < hi.
void squarefree_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& primes,
                        std::vector<std::uint8_t>& flags);

// Trial division; fine for the small moduli used here.
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n);

}  // namespace artin
