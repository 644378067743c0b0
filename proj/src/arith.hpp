#pragma once

// Word-level modular arithmetic shared by the ring implementations.

#include <cstdint>
#include <vector>

#include "optemb/local_ring.hpp"

namespace optemb::detail {

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m);
bool is_prime_u64(u64 n);
u64 reduce_signed(std::int64_t v, u64 m);
/// Largest k with p^k | x, for x != 0.
int p_valuation(u64 x, u64 p);

/// Multiplication in (Z/m)[x]/(x^f + h_{f-1}x^{f-1} + ... + h_0).
Coeffs gr_mul(const Coeffs& a, const Coeffs& b, u64 m, int f, const Coeffs& h);

// Dense polynomials over F_p, low degree first, trimmed.
using FpPoly = std::vector<u64>;
void fp_trim(FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_mod(FpPoly a, const FpPoly& b, u64 p);
FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p);
FpPoly fp_powmod(const FpPoly& base, u64 e, const FpPoly& mod, u64 p);
/// Inverse of a modulo the irreducible `mod`; a must be nonzero mod `mod`.
FpPoly fp_invmod(const FpPoly& a, const FpPoly& mod, u64 p);

}  // namespace optemb::detail
