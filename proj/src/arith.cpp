#include "arith.hpp"

#include <utility>

namespace optemb::detail {

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 reduce_signed(std::int64_t v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  u64 mag = static_cast<u64>(-(v + 1)) + 1;
  u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

int p_valuation(u64 x, u64 p) {
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

Coeffs gr_mul(const Coeffs& a, const Coeffs& b, u64 m, int f, const Coeffs& h) {
  if (f == 1) return Coeffs{mulmod(a[0], b[0], m), 0, 0};
  std::array<u64, 5> prod{};
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j) prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], m), m);
  }
  // x^f = -(h_0 + h_1 x + ... + h_{f-1} x^{f-1})
  for (int k = 2 * f - 2; k >= f; --k) {
    u64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < f; ++i) prod[k - f + i] = submod(prod[k - f + i], mulmod(c, h[i] % m, m), m);
  }
  return Coeffs{prod[0], prod[1], f > 2 ? prod[2] : 0};
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
  fp_trim(out);
  return out;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, u64 p) {
  fp_trim(a);
  u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& base, u64 e, const FpPoly& mod, u64 p) {
  FpPoly result{1};
  FpPoly b = fp_mod(base, mod, p);
  while (e) {
    if (e & 1) result = fp_mod(fp_mul(result, b, p), mod, p);
    b = fp_mod(fp_mul(b, b, p), mod, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_invmod(const FpPoly& a, const FpPoly& mod, u64 p) {
  // Extended Euclid tracking only the coefficient of a.
  FpPoly r0 = mod, r1 = fp_mod(a, mod, p);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    FpPoly q;
    FpPoly r = r0;
    u64 lead_inv = powmod(r1.back(), p - 2, p);
    if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, 0);
    while (r.size() >= r1.size()) {
      u64 c = mulmod(r.back(), lead_inv, p);
      std::size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] = submod(r[shift + i], mulmod(c, r1[i], p), p);
      fp_trim(r);
    }
    FpPoly qs = fp_mul(q, s1, p);
    FpPoly s(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      u64 x = i < s0.size() ? s0[i] : 0;
      u64 y = i < qs.size() ? qs[i] : 0;
      s[i] = submod(x, y, p);
    }
    fp_trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant when a is invertible.
  u64 inv = powmod(r0.at(0), p - 2, p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  return fp_mod(s0, mod, p);
}

}  // namespace optemb::detail
