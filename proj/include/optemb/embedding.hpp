#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "optemb/local_order.hpp"
#include "optemb/z3.hpp"

namespace optemb {

/// Images A = phi(e_2), B = phi(e_3) of an embedding of a local order into
/// M_3 over W/(p^N); e_1 maps to the identity.
class EmbeddingPair {
 public:
  /// Throws NotAHomomorphism unless A, B satisfy the structure constants,
  /// SpecMismatch when the matrices live in another ring.
  static EmbeddingPair make(const LocalOrder& order, const Mat3L& a, const Mat3L& b);

  const LocalOrder& order() const noexcept { return order_; }
  const Mat3L& a() const noexcept { return a_; }
  const Mat3L& b() const noexcept { return b_; }

  /// (U^{-1} A U, U^{-1} B U).
  EmbeddingPair conjugated(const Mat3L& u) const;

 private:
  EmbeddingPair(LocalOrder order, Mat3L a, Mat3L b) : order_(std::move(order)), a_(std::move(a)), b_(std::move(b)) {}

  LocalOrder order_;
  Mat3L a_, b_;
};

/// Determinant of the matrix whose row j is ((A1)_{s_j t_j}, (A2)_{s_j t_j},
/// (A3)_{s_j t_j}); positions are 0-based (row, column).
ResidueElem minor_select_det(const Mat3R& a1, const Mat3R& a2, const Mat3R& a3,
                             const std::array<std::pair<int, int>, 3>& positions);

/// I, A, B independent modulo p.
bool optimal_by_independence(const EmbeddingPair& pair);
/// Some minor-selection determinant of (I, A, B) modulo p is nonzero.
bool optimal_by_minors(const EmbeddingPair& pair);
/// Both criteria; a disagreement throws std::logic_error.
bool is_optimal(const EmbeddingPair& pair);

/// Residue pattern test: A mod p is of Jordan type and, after conjugating to
/// the Jordan form, B mod p has b21 != 0, b22 = b11 and b13 = 0.
/// Throws NotOptimal.
bool is_special(const EmbeddingPair& pair);

EmbeddingPair special_normal_form(const LocalOrder& order);

enum class OrbitClass { Regular, Special };
std::string_view orbit_name(OrbitClass c);

/// Regular iff some unit-determinant U satisfies U^{-1} A U = A0 and
/// U^{-1} B U = B0 for the regular representation. Throws NotOptimal.
OrbitClass classify_orbit(const EmbeddingPair& pair);

/// Split: 1 if ab = 0, else 2. Inert: 1 if b = 2a, else 2.
int embedding_number(const LocalOrder& order);

/// The explicit conjugator U with U^{-1} A'0 U = A0 and U^{-1} B'0 U = B0
/// (A'0, B'0 the special normal form). Throws NoWitnessExpected when the
/// embedding number is 2.
Mat3L regular_special_witness(const LocalOrder& order);
/// Unit determinant and both conjugation identities.
bool witness_verifies(const LocalOrder& order, const Mat3L& u);

struct SinertConjugator {
  /// Precision N - max(v(g(d)), 2a - b) at which everything below lives.
  RingPtr ring;
  int v = 0;
  LocalElem h;
  Mat3L u_d, a_d, a0_special;
  bool det_matches = false;        // det U_d = (a0 + a1 a2)^2 h^-2
  bool conjugation_matches = false;  // U_d^{-1} A'0 U_d = A_d
};

/// Throws InvalidParameters for split orders and ParameterOutOfRange when
/// g(d) vanishes at this precision, v(g(d)) < 2a - b, or
/// v(d - a2 p^a) < 2a - b.
SinertConjugator sinert_conjugator(const LocalOrder& order, const LocalElem& d);

/// Split: Z/3. Inert: {0, (a+b) mod 3}.
Z3Set local_norm_set(const LocalOrder& order);
NormCoset translate_norm_set(const Z3Set& s, int v);

}  // namespace optemb
