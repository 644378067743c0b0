#include <doctest.h>

#include <random>

#include "optemb/embedding.hpp"
#include "optemb/error.hpp"

using namespace optemb;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an optemb::Error");
  return Errc::ParseError;
}

LocalOrder split_order(u64 p, int a, int b, int N = 0) {
  return LocalOrder::make(CubicAlgebra::split(Ring::make(p, 1, N ? N : default_precision(a, b))), a, b);
}

// x^3 - x - 1 over Z/2^N.
LocalOrder inert_order(int a, int b, int N = 0) {
  auto r = Ring::make(2, 1, N ? N : default_precision(a, b));
  auto n = [&](std::int64_t v) { return LocalElem::from_int(r, v); };
  return LocalOrder::make(CubicAlgebra::inert(n(1), n(1), n(0)), a, b);
}

EmbeddingPair regular_pair(const LocalOrder& o) {
  const RegularPair reg = regular_rep(o);
  return EmbeddingPair::make(o, reg.a0, reg.b0);
}

}  // namespace

TEST_CASE("pair validation") {
  const LocalOrder o = split_order(2, 1, 1);
  const RegularPair reg = regular_rep(o);
  CHECK_NOTHROW(EmbeddingPair::make(o, reg.a0, reg.b0));
  CHECK(code_of([&] { EmbeddingPair::make(o, reg.a0, reg.b0 + Mat3L::identity(o.ring())); }) ==
        Errc::NotAHomomorphism);
  const Mat3L other = Mat3L::identity(Ring::make(3, 1, 4));
  CHECK(code_of([&] { EmbeddingPair::make(o, other, other); }) == Errc::SpecMismatch);
}

TEST_CASE("optimality") {
  const LocalOrder o = split_order(2, 1, 1, 4);
  const EmbeddingPair reg = regular_pair(o);
  CHECK(is_optimal(reg));
  CHECK(optimal_by_independence(reg));
  CHECK(optimal_by_minors(reg));

  const auto& r = o.ring();
  const EmbeddingPair diag = EmbeddingPair::make(o, Mat3L::from_ints(r, {{{0, 0, 0}, {0, 2, 0}, {0, 0, 0}}}),
                                                 Mat3L::from_ints(r, {{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}}));
  CHECK_FALSE(is_optimal(diag));
  CHECK_FALSE(optimal_by_independence(diag));
  CHECK_FALSE(optimal_by_minors(diag));
  CHECK(code_of([&] { classify_orbit(diag); }) == Errc::NotOptimal);
  CHECK(code_of([&] { is_special(diag); }) == Errc::NotOptimal);
}

TEST_CASE("special normal forms") {
  const LocalOrder s = split_order(2, 1, 1);
  const auto& r = s.ring();
  const EmbeddingPair sp = special_normal_form(s);
  CHECK(sp.a() == Mat3L::from_ints(r, {{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}}}));
  CHECK(sp.b() == Mat3L::from_ints(r, {{{2, 0, 0}, {1, 0, 0}, {0, 0, 0}}}));
  CHECK(is_optimal(sp));
  CHECK(is_special(sp));

  const LocalOrder i11 = inert_order(1, 1);
  const EmbeddingPair isp = special_normal_form(i11);
  // Corner entries carry p^(2a-b) = 2 and p^(2a) = 4.
  const Mat3L ap = isp.a();
  CHECK(ap == Mat3L::from_ints(i11.ring(), {{{0, 4, 0}, {0, 0, 1}, {2, 4, 0}}}));
  // A'0 is a root of x^3 - 4x - 8.
  const Mat3L I = Mat3L::identity(i11.ring());
  CHECK((ap * ap * ap - 4 * ap - 8 * I).is_zero());
  // B'0 = A'0^2 p^(b-2a) needs b >= 2a to be read off directly.
  const LocalOrder i12 = inert_order(1, 2);
  const EmbeddingPair isp12 = special_normal_form(i12);
  CHECK(isp12.b() == isp12.a() * isp12.a());
  CHECK_FALSE(is_special(isp12));

  const LocalOrder i00 = inert_order(0, 0);
  CHECK(classify_orbit(special_normal_form(i00)) == OrbitClass::Regular);
}

TEST_CASE("orbits and embedding numbers") {
  CHECK(embedding_number(split_order(2, 1, 1)) == 2);
  CHECK(embedding_number(split_order(3, 0, 2)) == 1);
  CHECK(embedding_number(inert_order(2, 4)) == 1);
  CHECK(embedding_number(inert_order(2, 3)) == 2);

  CHECK(classify_orbit(regular_pair(split_order(2, 1, 1))) == OrbitClass::Regular);
  CHECK(classify_orbit(special_normal_form(split_order(2, 1, 1))) == OrbitClass::Special);
  CHECK(classify_orbit(special_normal_form(split_order(3, 0, 2))) == OrbitClass::Regular);
  CHECK(classify_orbit(special_normal_form(inert_order(1, 1))) == OrbitClass::Special);
  CHECK(orbit_name(OrbitClass::Special) == "special");
}

TEST_CASE("orbit data is conjugation invariant") {
  std::mt19937_64 rng(3141);
  for (const LocalOrder& o : {split_order(2, 1, 1), split_order(3, 1, 2), inert_order(1, 1), inert_order(1, 2)}) {
    for (const EmbeddingPair& base : {regular_pair(o), special_normal_form(o)}) {
      const bool sp = is_special(base);
      const OrbitClass orbit = classify_orbit(base);
      CHECK(sp == (orbit == OrbitClass::Special));
      for (int i = 0; i < 10; ++i) {
        const EmbeddingPair c = base.conjugated(random_gl3(o.ring(), rng));
        CHECK(is_optimal(c));
        CHECK(optimal_by_independence(c) == optimal_by_minors(c));
        CHECK(is_special(c) == sp);
        CHECK(classify_orbit(c) == orbit);
      }
    }
  }
}

TEST_CASE("explicit conjugators between the normal forms") {
  const LocalOrder s00 = split_order(2, 0, 0);
  CHECK(regular_special_witness(s00) == Mat3L::from_ints(s00.ring(), {{{1, 0, 1}, {1, 1, 1}, {1, 1, 0}}}));
  const LocalOrder s02 = split_order(3, 0, 2);
  CHECK(regular_special_witness(s02) == Mat3L::from_ints(s02.ring(), {{{1, 0, 9}, {0, 1, 1}, {1, 1, 0}}}));
  const LocalOrder i12 = inert_order(1, 2);
  CHECK(regular_special_witness(i12) == Mat3L::from_ints(i12.ring(), {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}));
  for (const LocalOrder& o : {s00, s02, i12, inert_order(2, 4), inert_order(0, 0)})
    CHECK(witness_verifies(o, regular_special_witness(o)));
  CHECK(code_of([] { regular_special_witness(split_order(2, 1, 1)); }) == Errc::NoWitnessExpected);
}

TEST_CASE("conjugators U_d") {
  const LocalOrder o = inert_order(1, 1);
  const auto& r = o.ring();
  const LocalElem zero = LocalElem::zero(r);

  // a2 = 0 here, so d = a2 p^a is d = 0.
  const SinertConjugator s0 = sinert_conjugator(o, zero);
  CHECK(s0.v == 3);
  CHECK(s0.det_matches);
  CHECK(s0.conjugation_matches);

  const SinertConjugator s1 = sinert_conjugator(o, LocalElem::from_int(r, 2));
  CHECK(s1.det_matches);
  CHECK(s1.conjugation_matches);

  // For x^3 - x^2 + 1 the choice d = a2 p^a leaves the upper-left block trivial and A_d = A'0.
  auto n = [&](std::int64_t v) { return LocalElem::from_int(r, v); };
  const LocalOrder g = LocalOrder::make(CubicAlgebra::inert(n(-1), n(0), n(1)), 1, 1);
  const SinertConjugator sg = sinert_conjugator(g, n(2));
  CHECK(sg.det_matches);
  CHECK(sg.conjugation_matches);
  CHECK(sg.a_d == change_precision(special_normal_form(g).a(), sg.ring));

  CHECK(code_of([&] { sinert_conjugator(split_order(2, 1, 1), zero); }) == Errc::InvalidParameters);
  // d a unit gives v(g(d)) = 0 < 2a - b = 1.
  const LocalOrder i23 = inert_order(2, 3);
  CHECK(code_of([&] { sinert_conjugator(i23, LocalElem::one(i23.ring())); }) == Errc::ParameterOutOfRange);
  CHECK(code_of([&] { sinert_conjugator(i23, LocalElem::one(r)); }) == Errc::SpecMismatch);
}

TEST_CASE("norm-class sets") {
  CHECK(local_norm_set(split_order(2, 1, 1)) == Z3Set::all());
  CHECK(local_norm_set(inert_order(1, 1)) == Z3Set::of({0, 2}));
  CHECK(local_norm_set(inert_order(1, 2)) == Z3Set::of({0}));
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 2 * a; ++b) {
      const LocalOrder o = inert_order(a, b);
      CHECK(mod3(a + b) == mod3(disc_exponent(o) / 2));
    }

  CHECK(translate_norm_set(Z3Set::of({0}), 1).elements() == Z3Set::of({1}));
  CHECK(translate_norm_set(Z3Set::of({0, 2}), 1).elements() == Z3Set::of({0, 1}));
  const NormCoset c = translate_norm_set(Z3Set::of({0, 2}), 2);
  CHECK(c.translate(-2).elements() == Z3Set::of({0, 2}));
  CHECK(c.translate(1).shift == 0);
}
