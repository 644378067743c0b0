#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "optemb/error.hpp"

namespace optemb {

using u64 = std::uint64_t;

/// Coefficients of an element in the basis 1, x, x^2 of the residue-degree
/// extension. Only the first `degree()` slots are meaningful; the rest are 0.
using Coeffs = std::array<u64, 3>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The truncated unramified local ring W/(p^N), where W is the unramified
/// extension of Z_p of residue degree f, presented as (Z/p^N)[x]/(h) with h
/// monic of degree f and irreducible modulo p. Its residue field F_{p^f} is
/// F_p[x]/(h mod p). Since the extension is unramified, p is a uniformizer.
///
/// Instances are immutable and shared between the elements that live in them.
class Ring {
 public:
  static constexpr int kMaxDegree = 3;

  /// `h_low` lists c0..c_{f-1} of h = x^f + c_{f-1}x^{f-1} + ... + c0. For
  /// f = 1 it may be empty (h = x). Requires p^N < 2^62.
  static RingPtr make(u64 p, int f, int N, std::vector<u64> h_low = {});

  /// Same ring with the lexicographically first irreducible modulus.
  static RingPtr make_default(u64 p, int f, int N);

  u64 p() const noexcept { return p_; }
  int degree() const noexcept { return f_; }
  int precision() const noexcept { return N_; }
  u64 modulus() const noexcept { return pN_; }
  const Coeffs& modulus_poly() const noexcept { return h_; }

  /// p^k for 0 <= k <= N.
  u64 p_power(int k) const;

  /// Residue field size p^f. Throws InvalidParameters when it exceeds 2^40.
  u64 residue_field_size() const;

  RingPtr with_precision(int N) const;

  bool operator==(const Ring& other) const noexcept {
    return p_ == other.p_ && f_ == other.f_ && N_ == other.N_ && h_ == other.h_;
  }

  /// e.g. "Z/2^4" or "(Z/2^2)[x]/(x^3+x+1)".
  std::string describe() const;

 private:
  Ring(u64 p, int f, int N, Coeffs h, u64 pN);

  u64 p_;
  int f_;
  int N_;
  Coeffs h_;
  u64 pN_;
};

/// Throws SpecMismatch unless both rings describe the same W/(p^N).
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Lexicographically first monic irreducible polynomial of degree f over F_p
/// (ordered by sum c_i p^i of its lower coefficients).
std::vector<u64> first_irreducible_modulus(u64 p, int f);

/// The p-adic valuation of an element, truncated at the working precision.
class Valuation {
 public:
  static Valuation exact(int k) { return Valuation(k); }
  static Valuation at_least_precision() { return Valuation(-1); }

  bool is_exact() const noexcept { return k_ >= 0; }
  /// Throws PrecisionTooLow when not exact.
  int value() const;

  bool operator==(const Valuation&) const = default;
  std::string to_string() const;

 private:
  explicit Valuation(int k) : k_(k) {}
  int k_;
};

class ResidueElem;

/// Element of W/(p^N); every coefficient is the canonical representative in
/// [0, p^N).
class LocalElem {
 public:
  /// Detached placeholder; only valid as an assignment target.
  LocalElem() = default;
  LocalElem(RingPtr ring, const Coeffs& c);

  static LocalElem from_int(const RingPtr& ring, std::int64_t v);
  static LocalElem from_signed(const RingPtr& ring, const std::vector<std::int64_t>& c);
  static LocalElem zero(const RingPtr& ring) { return LocalElem(ring, Coeffs{}); }
  static LocalElem one(const RingPtr& ring) { return from_int(ring, 1); }
  /// p^k, which is 0 once k >= N.
  static LocalElem p_power(const RingPtr& ring, int k);
  static LocalElem random(const RingPtr& ring, std::mt19937_64& rng);

  const RingPtr& ring() const noexcept { return ring_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  u64 coeff(int i) const noexcept { return c_[i]; }
  bool is_zero() const noexcept { return c_ == Coeffs{}; }

  friend LocalElem operator+(const LocalElem& x, const LocalElem& y);
  friend LocalElem operator-(const LocalElem& x, const LocalElem& y);
  friend LocalElem operator*(const LocalElem& x, const LocalElem& y);
  friend LocalElem operator*(std::int64_t k, const LocalElem& x);
  LocalElem operator-() const;
  LocalElem& operator+=(const LocalElem& y) { return *this = *this + y; }
  LocalElem& operator-=(const LocalElem& y) { return *this = *this - y; }
  LocalElem& operator*=(const LocalElem& y) { return *this = *this * y; }
  friend bool operator==(const LocalElem& x, const LocalElem& y);

  LocalElem pow(u64 e) const;
  Valuation valuation() const;
  bool is_unit() const;
  /// Throws NotAUnit.
  LocalElem inverse() const;

  /// Exact division by p^k; requires every coefficient divisible by p^k.
  /// The quotient is returned with coefficients in [0, p^(N-k)).
  LocalElem divide_by_p_power(int k) const;
  /// Coefficients reduced modulo p^k (the canonical remainder modulo p^k W).
  LocalElem reduce_mod_p_power(int k) const;
  /// Same coefficients read in a ring of another precision.
  LocalElem change_precision(const RingPtr& target) const;

  ResidueElem reduce() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  Coeffs c_{};
};

/// Element of the residue field F_{p^f}.
class ResidueElem {
 public:
  ResidueElem() = default;
  ResidueElem(RingPtr ring, const Coeffs& c);

  static ResidueElem from_int(const RingPtr& ring, std::int64_t v);
  static ResidueElem zero(const RingPtr& ring) { return ResidueElem(ring, Coeffs{}); }
  static ResidueElem one(const RingPtr& ring) { return from_int(ring, 1); }
  /// Enumeration order: index = sum c_i p^i.
  static ResidueElem from_index(const RingPtr& ring, u64 index);
  static ResidueElem random(const RingPtr& ring, std::mt19937_64& rng);

  const RingPtr& ring() const noexcept { return ring_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  u64 index() const;
  bool is_zero() const noexcept { return c_ == Coeffs{}; }

  friend ResidueElem operator+(const ResidueElem& x, const ResidueElem& y);
  friend ResidueElem operator-(const ResidueElem& x, const ResidueElem& y);
  friend ResidueElem operator*(const ResidueElem& x, const ResidueElem& y);
  ResidueElem operator-() const;
  ResidueElem& operator+=(const ResidueElem& y) { return *this = *this + y; }
  ResidueElem& operator-=(const ResidueElem& y) { return *this = *this - y; }
  ResidueElem& operator*=(const ResidueElem& y) { return *this = *this * y; }
  friend bool operator==(const ResidueElem& x, const ResidueElem& y);

  ResidueElem pow(u64 e) const;
  /// Throws DivisionByZero on zero.
  ResidueElem inverse() const;
  /// Canonical lift with coefficients in [0, p).
  LocalElem lift() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  Coeffs c_{};
};

using LocalPoly = std::vector<LocalElem>;      // low degree first
using ResiduePoly = std::vector<ResidueElem>;  // low degree first, trimmed

/// Root r of `poly` with r = seed mod p, by Newton iteration. Throws
/// NotSimpleRoot unless seed is a simple root modulo p.
LocalElem hensel_root(const LocalPoly& poly, const ResidueElem& seed);

template <class E>
E poly_eval(const std::vector<E>& poly, const E& x) {
  E acc = E::zero(x.ring());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class E>
std::vector<E> poly_derivative(const std::vector<E>& poly) {
  std::vector<E> out;
  for (std::size_t i = 1; i < poly.size(); ++i)
    out.push_back(static_cast<std::int64_t>(i) * poly[i]);
  return out;
}

// Polynomials over the residue field.
ResiduePoly poly_trim(ResiduePoly a);
ResiduePoly poly_add(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly poly_sub(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly poly_mul(const ResiduePoly& a, const ResiduePoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<ResiduePoly, ResiduePoly> poly_divmod(const ResiduePoly& a, const ResiduePoly& b);
/// Monic gcd; the gcd of two zero polynomials is the empty polynomial.
ResiduePoly poly_gcd(const ResiduePoly& a, const ResiduePoly& b);
ResiduePoly poly_powmod(const ResiduePoly& base, u64 e, const ResiduePoly& mod);
bool poly_is_squarefree(const ResiduePoly& a);
/// True iff `a` has a root in F_{p^f}, decided by gcd with x^{p^f} - x.
bool poly_has_root(const ResiduePoly& a, const RingPtr& ring);
/// Exhaustive scan of F_{p^f}, in enumeration order. Requires p^f <= 2^20.
std::vector<ResidueElem> poly_roots(const ResiduePoly& a, const RingPtr& ring);
std::string poly_to_string(const ResiduePoly& a);

/// Same as ResidueElem::operator* with a scalar integer.
ResidueElem operator*(std::int64_t k, const ResidueElem& x);

}  // namespace optemb
