#include "optemb/embedding.hpp"

#include <stdexcept>

#include "optemb/howell.hpp"
#include "optemb/similarity.hpp"

namespace optemb {

namespace {

Mat3L combination(const std::array<LocalElem, 3>& c, const Mat3L& e1, const Mat3L& e2, const Mat3L& e3) {
  return c[0] * e1 + c[1] * e2 + c[2] * e3;
}

void require_optimal(const EmbeddingPair& pair) {
  if (!is_optimal(pair)) throw Error(Errc::NotOptimal, "embedding is not optimal");
}

}  // namespace

EmbeddingPair EmbeddingPair::make(const LocalOrder& order, const Mat3L& a, const Mat3L& b) {
  const RingPtr& ring = order.ring();
  require_same_ring(ring, a.ring());
  require_same_ring(ring, b.ring());
  const Mat3L id = Mat3L::identity(ring);
  const StructureConstants sc = structure_constants(order);
  auto fail = [](const std::string& what) { throw Error(Errc::NotAHomomorphism, what); };
  if (!(a * a == combination(sc.product(1, 1), id, a, b))) fail("e2*e2 is not preserved");
  if (!(a * b == combination(sc.product(1, 2), id, a, b))) fail("e2*e3 is not preserved");
  if (!(b * a == a * b)) fail("images of e2 and e3 do not commute");
  if (!(b * b == combination(sc.product(2, 2), id, a, b))) fail("e3*e3 is not preserved");
  return EmbeddingPair(order, a, b);
}

EmbeddingPair EmbeddingPair::conjugated(const Mat3L& u) const {
  const Mat3L inv = inverse(u);
  return EmbeddingPair(order_, inv * a_ * u, inv * b_ * u);
}

ResidueElem minor_select_det(const Mat3R& a1, const Mat3R& a2, const Mat3R& a3,
                             const std::array<std::pair<int, int>, 3>& positions) {
  Mat3R x;
  for (int j = 0; j < 3; ++j) {
    const auto [s, t] = positions[j];
    if (s < 0 || s > 2 || t < 0 || t > 2) throw Error(Errc::InvalidParameters, "minor position out of range");
    x(j, 0) = a1(s, t);
    x(j, 1) = a2(s, t);
    x(j, 2) = a3(s, t);
  }
  return x.det();
}

bool optimal_by_independence(const EmbeddingPair& pair) {
  const RingPtr& ring = pair.order().ring();
  std::vector<RVec> rows;
  for (const Mat3R& m : {Mat3R::identity(ring), reduce(pair.a()), reduce(pair.b())})
    rows.emplace_back(m.entries().begin(), m.entries().end());
  return residue_rank(rows, 9, ring) == 3;
}

bool optimal_by_minors(const EmbeddingPair& pair) {
  const RingPtr& ring = pair.order().ring();
  const Mat3R id = Mat3R::identity(ring), a = reduce(pair.a()), b = reduce(pair.b());
  // Repeated positions give repeated rows and reordering only flips the
  // sign, so 3-subsets of the 9 positions suffice.
  for (int x = 0; x < 9; ++x)
    for (int y = x + 1; y < 9; ++y)
      for (int z = y + 1; z < 9; ++z) {
        std::array<std::pair<int, int>, 3> pos{{{x / 3, x % 3}, {y / 3, y % 3}, {z / 3, z % 3}}};
        if (!minor_select_det(id, a, b, pos).is_zero()) return true;
      }
  return false;
}

bool is_optimal(const EmbeddingPair& pair) {
  const bool by_rank = optimal_by_independence(pair);
  if (by_rank != optimal_by_minors(pair))
    throw std::logic_error("optimality criteria disagree for " + pair.order().describe());
  return by_rank;
}

bool is_special(const EmbeddingPair& pair) {
  require_optimal(pair);
  const Classification cl = residue_classify(reduce(pair.a()));
  if (!std::holds_alternative<JordanClass>(cl.cls)) return false;
  const Mat3R b = conjugate(reduce(pair.b()), cl.conjugator);
  return !b(1, 0).is_zero() && b(1, 1) == b(0, 0) && b(0, 2).is_zero();
}

EmbeddingPair special_normal_form(const LocalOrder& order) {
  const RingPtr& ring = order.ring();
  const int a = order.a(), b = order.b();
  auto P = [&](int k) { return LocalElem::p_power(ring, k); };
  const LocalElem one = LocalElem::one(ring);
  Mat3L A = Mat3L::zero(ring), B = Mat3L::zero(ring);
  if (order.kind() == OrderKind::Split) {
    A(1, 2) = one;
    A(2, 2) = P(a);
    B(0, 0) = P(b);
    B(1, 0) = one;
  } else {
    const auto& alg = order.algebra();
    const LocalElem &a0 = alg.a0(), &a1 = alg.a1(), &a2 = alg.a2();
    const LocalElem c = a0 + a1 * a2;
    A(0, 0) = a2 * P(a);
    A(0, 1) = P(a + b);
    A(1, 1) = a2 * P(a);
    A(1, 2) = one;
    A(2, 0) = c * P(2 * a - b);
    A(2, 1) = (a1 - a2 * a2) * P(2 * a);
    A(2, 2) = -(a2 * P(a));
    // B'0 = A'0^2 p^(b-2a), written out since b - 2a <= 0.
    B(0, 0) = a2 * a2 * P(b);
    B(0, 1) = 2 * (a2 * P(2 * b));
    B(0, 2) = P(2 * b - a);
    B(1, 0) = c;
    B(1, 1) = a1 * P(b);
    B(2, 1) = c * P(a + b);
    B(2, 2) = a1 * P(b);
  }
  return EmbeddingPair::make(order, A, B);
}

std::string_view orbit_name(OrbitClass c) { return c == OrbitClass::Regular ? "regular" : "special"; }

OrbitClass classify_orbit(const EmbeddingPair& pair) {
  require_optimal(pair);
  const RegularPair reg = regular_rep(pair.order());
  const SolutionModule m = intertwiners(pair.a(), pair.b(), reg.a0, reg.b0);
  return unit_det_in_module(m) ? OrbitClass::Regular : OrbitClass::Special;
}

int embedding_number(const LocalOrder& order) {
  if (order.kind() == OrderKind::Split) return order.a() * order.b() == 0 ? 1 : 2;
  return order.b() == 2 * order.a() ? 1 : 2;
}

bool witness_verifies(const LocalOrder& order, const Mat3L& u) {
  if (!u.det().is_unit()) return false;
  const EmbeddingPair sp = special_normal_form(order);
  const RegularPair reg = regular_rep(order);
  return sp.a() * u == u * reg.a0 && sp.b() * u == u * reg.b0;
}

Mat3L regular_special_witness(const LocalOrder& order) {
  if (embedding_number(order) != 1)
    throw Error(Errc::NoWitnessExpected, order.describe() + " has two orbits; no conjugator exists");
  const RingPtr& ring = order.ring();
  const int a = order.a(), b = order.b();
  auto P = [&](int k) { return LocalElem::p_power(ring, k); };
  const LocalElem zero = LocalElem::zero(ring), one = LocalElem::one(ring);
  Mat3L u;
  if (order.kind() == OrderKind::Split) {
    // t1 = 1, t2 = t3 = 0 gives U = V with det -(p^a + p^b).
    u = Mat3L::from_entries({one, zero, P(b), zero, one, one, one, P(a), zero});
    if (!u.det().is_unit()) {
      // a = b = 0 and p = 2: t1 = t2 = t3 = 1/2.
      u = Mat3L::from_ints(ring, {{{1, 0, 1}, {1, 1, 1}, {1, 1, 0}}});
    }
  } else {
    const auto& alg = order.algebra();
    const LocalElem& a2 = alg.a2();
    const LocalElem c = alg.a0() + alg.a1() * a2;
    u = Mat3L::from_entries({one, a2 * P(a), a2 * a2 * P(2 * a), zero, zero, c, zero, c, zero});
  }
  if (!witness_verifies(order, u))
    throw std::logic_error("explicit conjugator fails to verify for " + order.describe());
  return u;
}

SinertConjugator sinert_conjugator(const LocalOrder& order, const LocalElem& d) {
  if (order.kind() != OrderKind::Inert) throw Error(Errc::InvalidParameters, "U_d is defined for inert orders");
  const RingPtr& ring = order.ring();
  require_same_ring(ring, d.ring());
  const int a = order.a(), b = order.b(), N = ring->precision();
  const int shift = 2 * a - b;
  auto P = [&](const RingPtr& r, int k) { return LocalElem::p_power(r, k); };
  const auto& alg = order.algebra();
  const LocalElem &a0 = alg.a0(), &a1 = alg.a1(), &a2 = alg.a2();

  // g(x) = x^3 - a2 p^a x^2 - a1 p^(2a) x - a0 p^(3a)
  const LocalElem g = d * d * d - a2 * P(ring, a) * d * d - a1 * P(ring, 2 * a) * d - a0 * P(ring, 3 * a);
  if (g.is_zero()) throw Error(Errc::ParameterOutOfRange, "g(d) vanishes at this precision");
  const int v = g.valuation().value();
  if (v < shift) throw Error(Errc::ParameterOutOfRange, "v(g(d)) < 2a - b");
  const LocalElem delta = d - a2 * P(ring, a);
  if (!delta.is_zero() && delta.valuation().value() < shift)
    throw Error(Errc::ParameterOutOfRange, "p^(b-2a)(d - a2 p^a) is not integral");
  const int lost = std::max(v, shift);
  if (N - lost < 1) throw Error(Errc::ParameterOutOfRange, "no precision left after division");

  SinertConjugator out;
  out.ring = ring->with_precision(N - lost);
  out.v = v;
  const RingPtr& R = out.ring;
  auto low = [&](const LocalElem& x) { return x.change_precision(R); };
  out.h = low(g.divide_by_p_power(v));
  const LocalElem hinv = out.h.inverse();
  const LocalElem e = low(delta.divide_by_p_power(shift));
  const LocalElem dd = low(d), c = low(a0 + a1 * a2), b1 = low(a1), b2 = low(a2);
  const LocalElem zero = LocalElem::zero(R), one = LocalElem::one(R);
  const LocalElem dl = low(delta);

  out.u_d = Mat3L::from_entries({one, 2 * (dd * e * hinv), e * hinv,  //
                                 zero, -(c * hinv), zero,              //
                                 zero, -(c * dl * hinv), -(c * hinv)});
  out.a_d = Mat3L::from_entries({dd, P(R, v - shift), zero,  //
                                 zero, dd, one,              //
                                 -(out.h * P(R, shift)), b1 * P(R, 2 * a) + 2 * (b2 * P(R, a) * dd) - 3 * (dd * dd),
                                 b2 * P(R, a) - 2 * dd});
  Mat3L sp = Mat3L::zero(R);
  sp(0, 0) = b2 * P(R, a);
  sp(0, 1) = P(R, a + b);
  sp(1, 1) = b2 * P(R, a);
  sp(1, 2) = one;
  sp(2, 0) = c * P(R, shift);
  sp(2, 1) = (b1 - b2 * b2) * P(R, 2 * a);
  sp(2, 2) = -(b2 * P(R, a));
  out.a0_special = sp;
  out.det_matches = out.u_d.det() == c * c * hinv * hinv;
  out.conjugation_matches = out.u_d.det().is_unit() && sp * out.u_d == out.u_d * out.a_d;
  return out;
}

Z3Set local_norm_set(const LocalOrder& order) {
  if (order.kind() == OrderKind::Split) return Z3Set::all();
  return Z3Set::of({0, order.a() + order.b()});
}

NormCoset translate_norm_set(const Z3Set& s, int v) { return NormCoset{s, 0}.translate(v); }

}  // namespace optemb
