#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "optemb/mat3.hpp"

namespace optemb {

enum class OrderKind { Split, Inert };

std::string_view kind_name(OrderKind k);
/// Accepts "split" and "inert"; throws InvalidParameters otherwise.
OrderKind parse_kind(std::string_view s);

/// The local cubic algebra: F^3, or the unramified cubic field F[alpha] with
/// alpha^3 = a2 alpha^2 + a1 alpha + a0.
class CubicAlgebra {
 public:
  static CubicAlgebra split(const RingPtr& ring);
  /// Throws InvalidParameters unless x^3 - a2 x^2 - a1 x - a0 has no root in
  /// the residue field.
  static CubicAlgebra inert(const LocalElem& a0, const LocalElem& a1, const LocalElem& a2);

  OrderKind kind() const noexcept { return kind_; }
  const RingPtr& ring() const noexcept { return ring_; }
  /// a0, a1, a2; zero for the split algebra.
  const std::array<LocalElem, 3>& coeffs() const noexcept { return a_; }
  const LocalElem& a0() const noexcept { return a_[0]; }
  const LocalElem& a1() const noexcept { return a_[1]; }
  const LocalElem& a2() const noexcept { return a_[2]; }

  /// Coordinates on 1, alpha, alpha^2 of the product (inert only).
  std::array<LocalElem, 3> multiply(const std::array<LocalElem, 3>& x, const std::array<LocalElem, 3>& y) const;
  /// "a0,a1,a2" with ':' separating residue-basis coefficients when f > 1.
  std::string minpoly_string() const;
  CubicAlgebra with_ring(const RingPtr& ring) const;

 private:
  CubicAlgebra(OrderKind kind, RingPtr ring, std::array<LocalElem, 3> a)
      : kind_(kind), ring_(std::move(ring)), a_(std::move(a)) {}

  OrderKind kind_;
  RingPtr ring_;
  std::array<LocalElem, 3> a_;
};

/// Split: basis (1,1,1), (0,p^a,0), (0,0,p^b).
/// Inert: basis 1, p^a alpha, p^b alpha^2 with a <= b <= 2a.
class LocalOrder {
 public:
  /// Throws InvalidParameters on negative exponents or, for inert orders,
  /// unless a <= b <= 2a.
  static LocalOrder make(const CubicAlgebra& algebra, int a, int b);

  OrderKind kind() const noexcept { return algebra_.kind(); }
  const CubicAlgebra& algebra() const noexcept { return algebra_; }
  const RingPtr& ring() const noexcept { return algebra_.ring(); }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  std::string describe() const;

 private:
  LocalOrder(CubicAlgebra algebra, int a, int b) : algebra_(std::move(algebra)), a_(a), b_(b) {}

  CubicAlgebra algebra_;
  int a_, b_;
};

/// product(i, j) holds the coordinates of e_i e_j on e_1, e_2, e_3 (0-based).
struct StructureConstants {
  std::array<std::array<std::array<LocalElem, 3>, 3>, 3> table;
  const std::array<LocalElem, 3>& product(int i, int j) const { return table[i][j]; }
};

StructureConstants structure_constants(const LocalOrder& order);

/// Multiplication by e_2 and e_3 in the basis e_1, e_2, e_3.
struct RegularPair {
  Mat3L a0, b0;
};
RegularPair regular_rep(const LocalOrder& order);

/// v(disc S) = 2(a+b).
int disc_exponent(const LocalOrder& order);
/// Valuation of det(Tr(e_i e_j)). Throws PrecisionTooLow unless N > 2(a+b).
Valuation gram_disc_exponent(const LocalOrder& order);

/// 2(a+b) + 6.
int default_precision(int a, int b);

/// Embedding number into the maximal order of the division algebra: 1 for
/// the maximal order of the unramified field, 0 otherwise.
int division_embedding_number(const LocalOrder& order);

struct InertNormalization {
  int a = 0, b = 0;
  /// alpha' = u alpha + v alpha^2, read at precision N - a.
  LocalElem u, v;
  /// The order equals R + R p^a alpha' + R p^b alpha'^2 (checked at N - 2a).
  bool verified = false;
};

/// Recovers (a, b) and a generator for the order spanned by three vectors
/// given in coordinates on 1, alpha, alpha^2. Throws NotAnOrder when 1 is
/// missing or the span is not closed under multiplication, PrecisionTooLow
/// when N <= 2(a+b) or the span is not of full rank at this precision, and
/// InvalidParameters when a <= b <= 2a fails.
InertNormalization normalize_inert_order(const CubicAlgebra& algebra,
                                         const std::array<std::array<LocalElem, 3>, 3>& basis);

/// Coefficient triples (a0, a1, a2), canonical lifts, with
/// x^3 - a2 x^2 - a1 x - a0 irreducible over the residue field; enumerated
/// lexicographically by the indices of (a2, a1, a0).
std::vector<std::array<LocalElem, 3>> irreducible_residue_cubics(const RingPtr& ring, std::size_t limit);

}  // namespace optemb
