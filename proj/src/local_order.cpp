#include "optemb/local_order.hpp"

#include "optemb/howell.hpp"

namespace optemb {

namespace {

bool residue_cubic_has_root(const RingPtr& ring, const ResidueElem& a0, const ResidueElem& a1,
                            const ResidueElem& a2) {
  ResiduePoly f{-a0, -a1, -a2, ResidueElem::one(ring)};
  return poly_has_root(f, ring);
}

using Coord3 = std::array<LocalElem, 3>;

}  // namespace

std::string_view kind_name(OrderKind k) { return k == OrderKind::Split ? "split" : "inert"; }

OrderKind parse_kind(std::string_view s) {
  if (s == "split") return OrderKind::Split;
  if (s == "inert") return OrderKind::Inert;
  throw Error(Errc::InvalidParameters, "kind must be split or inert, got '" + std::string(s) + "'");
}

CubicAlgebra CubicAlgebra::split(const RingPtr& ring) {
  const LocalElem z = LocalElem::zero(ring);
  return CubicAlgebra(OrderKind::Split, ring, {z, z, z});
}

CubicAlgebra CubicAlgebra::inert(const LocalElem& a0, const LocalElem& a1, const LocalElem& a2) {
  require_same_ring(a0.ring(), a1.ring());
  require_same_ring(a0.ring(), a2.ring());
  if (residue_cubic_has_root(a0.ring(), a0.reduce(), a1.reduce(), a2.reduce()))
    throw Error(Errc::InvalidParameters, "x^3 - a2 x^2 - a1 x - a0 is reducible over the residue field");
  return CubicAlgebra(OrderKind::Inert, a0.ring(), {a0, a1, a2});
}

std::array<LocalElem, 3> CubicAlgebra::multiply(const Coord3& x, const Coord3& y) const {
  // alpha^3 = a2 alpha^2 + a1 alpha + a0
  // alpha^4 = (a1 + a2^2) alpha^2 + (a0 + a1 a2) alpha + a0 a2
  std::array<LocalElem, 5> prod;
  for (auto& e : prod) e = LocalElem::zero(ring_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i + j] += x[i] * y[j];
  const LocalElem& c3 = prod[3];
  const LocalElem& c4 = prod[4];
  return {prod[0] + c3 * a0() + c4 * a0() * a2(), prod[1] + c3 * a1() + c4 * (a0() + a1() * a2()),
          prod[2] + c3 * a2() + c4 * (a1() + a2() * a2())};
}

std::string CubicAlgebra::minpoly_string() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    std::string c = a_[i].to_string();
    for (auto& ch : c)
      if (ch == ',') ch = ':';
    s += c;
  }
  return s;
}

CubicAlgebra CubicAlgebra::with_ring(const RingPtr& ring) const {
  if (kind_ == OrderKind::Split) return split(ring);
  return inert(a_[0].change_precision(ring), a_[1].change_precision(ring), a_[2].change_precision(ring));
}

LocalOrder LocalOrder::make(const CubicAlgebra& algebra, int a, int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidParameters, "exponents a and b must be non-negative");
  if (algebra.kind() == OrderKind::Inert && !(a <= b && b <= 2 * a))
    throw Error(Errc::InvalidParameters, "inert orders need a <= b <= 2a (got a=" + std::to_string(a) +
                                             ", b=" + std::to_string(b) + ")");
  return LocalOrder(algebra, a, b);
}

std::string LocalOrder::describe() const {
  std::string s = std::string(kind_name(kind())) + "(a=" + std::to_string(a_) + ",b=" + std::to_string(b_);
  if (kind() == OrderKind::Inert) s += ",minpoly=" + algebra_.minpoly_string();
  return s + ")";
}

StructureConstants structure_constants(const LocalOrder& order) {
  const RingPtr& ring = order.ring();
  const int a = order.a(), b = order.b();
  auto P = [&](int k) { return LocalElem::p_power(ring, k); };
  const LocalElem zero = LocalElem::zero(ring), one = LocalElem::one(ring);
  StructureConstants sc;
  for (int j = 0; j < 3; ++j) {
    Coord3 ej{zero, zero, zero};
    ej[j] = one;
    sc.table[0][j] = ej;
    sc.table[j][0] = ej;
  }
  if (order.kind() == OrderKind::Split) {
    sc.table[1][1] = {zero, P(a), zero};
    sc.table[2][2] = {zero, zero, P(b)};
    sc.table[1][2] = {zero, zero, zero};
  } else {
    const auto& alg = order.algebra();
    const LocalElem &a0 = alg.a0(), &a1 = alg.a1(), &a2 = alg.a2();
    sc.table[1][1] = {zero, zero, P(2 * a - b)};
    sc.table[1][2] = {a0 * P(a + b), a1 * P(b), a2 * P(a)};
    sc.table[2][2] = {a0 * a2 * P(2 * b), (a0 + a1 * a2) * P(2 * b - a), (a1 + a2 * a2) * P(b)};
  }
  sc.table[2][1] = sc.table[1][2];
  return sc;
}

RegularPair regular_rep(const LocalOrder& order) {
  const StructureConstants sc = structure_constants(order);
  RegularPair out;
  for (int which = 1; which <= 2; ++which) {
    Mat3L m;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) m(i, j) = sc.product(which, j)[i];
    (which == 1 ? out.a0 : out.b0) = m;
  }
  return out;
}

int disc_exponent(const LocalOrder& order) { return 2 * (order.a() + order.b()); }

Valuation gram_disc_exponent(const LocalOrder& order) {
  const RingPtr& ring = order.ring();
  if (ring->precision() <= disc_exponent(order))
    throw Error(Errc::PrecisionTooLow, "trace form needs precision above 2(a+b)");
  const StructureConstants sc = structure_constants(order);
  const RegularPair rep = regular_rep(order);
  const std::array<LocalElem, 3> tr{LocalElem::from_int(ring, 3), rep.a0.trace(), rep.b0.trace()};
  Mat3L gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LocalElem t = LocalElem::zero(ring);
      for (int k = 0; k < 3; ++k) t += sc.product(i, j)[k] * tr[k];
      gram(i, j) = t;
    }
  return gram.det().valuation();
}

int default_precision(int a, int b) { return 2 * (a + b) + 6; }

int division_embedding_number(const LocalOrder& order) {
  return order.kind() == OrderKind::Inert && order.a() == 0 && order.b() == 0 ? 1 : 0;
}

InertNormalization normalize_inert_order(const CubicAlgebra& algebra, const std::array<Coord3, 3>& basis) {
  if (algebra.kind() != OrderKind::Inert)
    throw Error(Errc::InvalidParameters, "normalization applies to orders in the unramified field");
  const RingPtr& ring = algebra.ring();
  const int N = ring->precision();
  std::vector<LVec> rows;
  for (const auto& v : basis) rows.emplace_back(v.begin(), v.end());
  const HowellForm S = howell_form(rows, 3, ring);
  const LocalElem zero = LocalElem::zero(ring), one = LocalElem::one(ring);
  if (!S.contains({one, zero, zero})) throw Error(Errc::NotAnOrder, "span does not contain 1");
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Coord3 prod = algebra.multiply(basis[i], basis[j]);
      if (!S.contains(LVec(prod.begin(), prod.end())))
        throw Error(Errc::NotAnOrder, "span is not closed under multiplication");
    }

  // S = R + (S meet R alpha + R alpha^2), and the second summand is the
  // projection L onto the alpha, alpha^2 coordinates.
  std::vector<LVec> proj;
  for (const auto& v : basis) proj.push_back({v[1], v[2]});
  const HowellForm L = howell_form(proj, 2, ring);
  if (L.pivot_columns() != std::vector<int>{0, 1})
    throw Error(Errc::PrecisionTooLow, "projected lattice is not of full rank at this precision");
  int a = N;
  for (const auto& r : L.rows())
    for (const auto& e : r)
      if (!e.is_zero()) a = std::min(a, e.valuation().value());
  // Index of L in R^2 is a + b.
  const int b = L.pivot_valuation(0) + L.pivot_valuation(1) - a;
  if (N <= 2 * (a + b)) throw Error(Errc::PrecisionTooLow, "precision must exceed 2(a+b)");
  if (!(a <= b && b <= 2 * a))
    throw Error(Errc::InvalidParameters, "recovered exponents violate a <= b <= 2a (a=" + std::to_string(a) +
                                             ", b=" + std::to_string(b) + ")");

  InertNormalization out;
  out.a = a;
  out.b = b;
  const LVec* gen = nullptr;
  for (const auto& r : L.rows()) {
    int v = N;
    for (const auto& e : r)
      if (!e.is_zero()) v = std::min(v, e.valuation().value());
    if (v == a) {
      gen = &r;
      break;
    }
  }
  const RingPtr low = ring->with_precision(N - a);
  out.u = (*gen)[0].divide_by_p_power(a).change_precision(low);
  out.v = (*gen)[1].divide_by_p_power(a).change_precision(low);

  // s = p^a alpha', z = s^2 / p^(2a-b) = p^b alpha'^2.
  const Coord3 s{zero, (*gen)[0], (*gen)[1]};
  const Coord3 s2 = algebra.multiply(s, s);
  const int shift = 2 * a - b;
  const RingPtr check = ring->with_precision(N - 2 * a);
  auto at_check = [&](const LocalElem& x) { return x.change_precision(check); };
  std::vector<LVec> candidate{{at_check(one), at_check(zero), at_check(zero)},
                              {at_check(s[0]), at_check(s[1]), at_check(s[2])}};
  LVec z;
  for (const auto& e : s2) z.push_back(at_check(e.divide_by_p_power(shift)));
  candidate.push_back(z);
  std::vector<LVec> original;
  for (const auto& v : basis) original.push_back({at_check(v[0]), at_check(v[1]), at_check(v[2])});
  out.verified = howell_form(candidate, 3, check) == howell_form(original, 3, check);
  return out;
}

std::vector<std::array<LocalElem, 3>> irreducible_residue_cubics(const RingPtr& ring, std::size_t limit) {
  const u64 q = ring->residue_field_size();
  std::vector<std::array<LocalElem, 3>> out;
  for (u64 i2 = 0; i2 < q; ++i2)
    for (u64 i1 = 0; i1 < q; ++i1)
      for (u64 i0 = 0; i0 < q; ++i0) {
        ResidueElem a0 = ResidueElem::from_index(ring, i0), a1 = ResidueElem::from_index(ring, i1),
                    a2 = ResidueElem::from_index(ring, i2);
        if (residue_cubic_has_root(ring, a0, a1, a2)) continue;
        out.push_back({a0.lift(), a1.lift(), a2.lift()});
        if (out.size() >= limit) return out;
      }
  return out;
}

}  // namespace optemb
