#pragma once

#include <gmpxx.h>

#include <string>

namespace artin {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline BigRational abs_q(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

}  // namespace artin
