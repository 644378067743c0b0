#include <doctest.h>

#include <random>

#include "optemb/embedding.hpp"
#include "optemb/error.hpp"
#include "optemb/howell.hpp"
#include "optemb/similarity.hpp"

using namespace optemb;

namespace {

using Rows = std::array<std::array<std::int64_t, 3>, 3>;

ResiduePoly rpoly(const RingPtr& r, std::initializer_list<std::int64_t> c) {
  ResiduePoly out;
  for (auto v : c) out.push_back(ResidueElem::from_int(r, v));
  return poly_trim(out);
}

Mat3R unit_matrix(const RingPtr& r, int i, int j) {
  Mat3R m = Mat3R::zero(r);
  m(i, j) = ResidueElem::one(r);
  return m;
}

}  // namespace

TEST_CASE("determinants and inverses") {
  auto z16 = Ring::make(2, 1, 4);
  CHECK(Mat3L::identity(z16).det() == LocalElem::one(z16));
  const Mat3L d = Mat3L::from_ints(z16, {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  CHECK(d.det() == LocalElem::from_int(z16, 2));
  CHECK_FALSE(d.det().is_unit());
  CHECK_THROWS_AS(inverse(d), Error);

  const Mat3L u = Mat3L::from_ints(z16, {{{1, 0, 1}, {1, 1, 1}, {1, 1, 0}}});
  CHECK(u.det() == LocalElem::from_int(z16, -1));
  CHECK(u * inverse(u) == Mat3L::identity(z16));
  CHECK(inverse(u) * u == Mat3L::identity(z16));
  CHECK(u * u.adjugate() == Mat3L::scalar(u.det()));
}

TEST_CASE("characteristic and minimal polynomials") {
  auto f2 = Ring::make(2, 1, 1);
  const Mat3R id = Mat3R::identity(f2);
  CHECK(char_poly(id) == rpoly(f2, {1, 1, 1, 1}));  // (x+1)^3
  CHECK(min_poly(id) == rpoly(f2, {1, 1}));

  const Mat3R cyc = Mat3R::from_ints(f2, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
  CHECK(char_poly(cyc) == rpoly(f2, {1, 0, 0, 1}));
  CHECK(min_poly(cyc) == rpoly(f2, {1, 0, 0, 1}));
  CHECK_FALSE((cyc * cyc + cyc + id).is_zero());

  auto f3 = Ring::make(3, 1, 1);
  const Mat3R jb = Mat3R::from_ints(f3, {{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}});
  CHECK(min_poly(jb) == rpoly(f3, {1, -2, 1}));
}

TEST_CASE("residue classification examples") {
  auto f2 = Ring::make(2, 1, 1);
  auto zero = residue_classify(Mat3R::zero(f2));
  CHECK(to_string(zero.cls) == "Scalar(0)");
  CHECK(zero.conjugator == Mat3R::identity(f2));

  auto two = residue_classify(Mat3R::from_ints(f2, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}}));
  CHECK(std::holds_alternative<TwoEigenClass>(two.cls));
  CHECK(to_string(two.cls) == "TwoEigen(1;0)");

  auto comp = residue_classify(Mat3R::from_ints(f2, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}));
  CHECK(to_string(comp.cls) == "Companion(1;0;0)");

  auto f3 = Ring::make(3, 1, 1);
  auto jor = residue_classify(Mat3R::from_ints(f3, {{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}));
  CHECK(to_string(jor.cls) == "Jordan(1)");
}

TEST_CASE("exhaustive classification over F2") {
  auto f2 = Ring::make(2, 1, 1);
  for (int bits = 0; bits < 512; ++bits) {
    Mat3R m = Mat3R::zero(f2);
    for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = ResidueElem::from_int(f2, (bits >> k) & 1);
    const Classification c = residue_classify(m);
    CHECK(conjugate(m, c.conjugator) == canonical_matrix(c.cls));
    const auto [q, r] = poly_divmod(char_poly(m), min_poly(m));
    CHECK(r.empty());
  }
}

TEST_CASE("classification is invariant under random conjugation") {
  std::mt19937_64 rng(3141);
  for (auto ring : {Ring::make(3, 1, 1), Ring::make(2, 2, 1, {1, 1}), Ring::make(5, 1, 1)}) {
    for (int i = 0; i < 200; ++i) {
      Mat3R m = Mat3R::zero(ring);
      for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = ResidueElem::random(ring, rng);
      const auto c = residue_classify(m);
      const Mat3R v = random_gl3_residue(ring, rng);
      CHECK(residue_classify(conjugate(m, v)).cls == c.cls);
    }
  }
}

TEST_CASE("minor selection determinants") {
  auto f2 = Ring::make(2, 1, 1);
  const Mat3R id = Mat3R::identity(f2), e21 = unit_matrix(f2, 1, 0), e31 = unit_matrix(f2, 2, 0);
  CHECK(minor_select_det(id, e21, e31, {{{0, 0}, {1, 0}, {2, 0}}}) == ResidueElem::one(f2));
  CHECK(minor_select_det(id, e21, e31, {{{1, 0}, {1, 0}, {1, 0}}}).is_zero());

  // Split (1,1) at p = 3: the special pair reduces to E23 and E21, so the
  // positions 11, 23, 21 give a unit minor and a column of I, A, B zeros kills
  // the minor on 12, 22, 32.
  auto ring = Ring::make(3, 1, 6);
  const auto sp = special_normal_form(LocalOrder::make(CubicAlgebra::split(ring), 1, 1));
  const Mat3R a = reduce(sp.a()), b = reduce(sp.b());
  CHECK_FALSE(minor_select_det(Mat3R::identity(ring), a, b, {{{0, 0}, {1, 2}, {1, 0}}}).is_zero());
  CHECK(minor_select_det(Mat3R::identity(ring), a, b, {{{0, 1}, {1, 1}, {2, 1}}}).is_zero());
}

TEST_CASE("howell form and solution modules") {
  auto z4 = Ring::make(2, 1, 2);
  const SolutionModule m = solve_homogeneous({{LocalElem::from_int(z4, 2)}}, 1, z4);
  REQUIRE(m.generators().size() == 1);
  CHECK(m.generators()[0][0] == LocalElem::from_int(z4, 2));

  const SolutionModule free2 = solve_homogeneous({}, 2, z4);
  REQUIRE(free2.generators().size() == 2);
  CHECK(free2.generators()[0] == LVec{LocalElem::one(z4), LocalElem::zero(z4)});
  CHECK(free2.generators()[1] == LVec{LocalElem::zero(z4), LocalElem::one(z4)});

  // Canonical: generating sets of the same module give the same form.
  auto z8 = Ring::make(2, 1, 3);
  auto n = [&](std::int64_t v) { return LocalElem::from_int(z8, v); };
  const auto h1 = howell_form({{n(2), n(4)}, {n(0), n(2)}}, 2, z8);
  const auto h2 = howell_form({{n(2), n(6)}, {n(2), n(0)}, {n(4), n(4)}}, 2, z8);
  CHECK(h1 == h2);
}

TEST_CASE("random system over Z/8 against exhaustive enumeration") {
  auto z8 = Ring::make(2, 1, 3);
  std::mt19937_64 rng(3141);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<LVec> sys(4, LVec(6, LocalElem::zero(z8)));
    for (auto& row : sys)
      for (auto& e : row) e = LocalElem::random(z8, rng);
    const SolutionModule m = solve_homogeneous(sys, 6, z8);
    for (const auto& g : m.generators())
      for (const auto& row : sys) {
        LocalElem acc = LocalElem::zero(z8);
        for (int j = 0; j < 6; ++j) acc += row[j] * g[j];
        CHECK(acc.is_zero());
      }
    // |module| = prod 8 / p^{pivot valuation}
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < m.generators().size(); ++i) expected *= 8u >> m.basis().pivot_valuation(i);
    std::uint64_t count = 0;
    bool all_in = true;
    for (int code = 0; code < (1 << 18); ++code) {
      std::int64_t x[6];
      for (int j = 0; j < 6; ++j) x[j] = (code >> (3 * j)) & 7;
      bool solves = true;
      for (const auto& row : sys) {
        std::uint64_t acc = 0;
        for (int j = 0; j < 6; ++j) acc += row[j].coeff(0) * static_cast<std::uint64_t>(x[j]);
        if (acc % 8 != 0) {
          solves = false;
          break;
        }
      }
      if (!solves) continue;
      ++count;
      LVec v;
      for (int j = 0; j < 6; ++j) v.push_back(LocalElem::from_int(z8, x[j]));
      all_in = all_in && m.contains(v);
    }
    CHECK(all_in);
    CHECK(count == expected);
  }
}

TEST_CASE("intertwiner modules") {
  auto ring = Ring::make(3, 1, 8);
  const LocalOrder split11 = LocalOrder::make(CubicAlgebra::split(ring), 1, 1);
  const RegularPair reg = regular_rep(split11);
  const SolutionModule self = intertwiners(reg.a0, reg.b0, reg.a0, reg.b0);
  CHECK(self.contains(vec9(Mat3L::identity(ring))));
  CHECK(self.contains(vec9(reg.a0)));
  CHECK(self.contains(vec9(reg.b0)));

  // Split a = b = 1, p = 3: the lattice {V (t1 E + t2 A0 + t3 B0)} that is
  // integral is spanned by X, Y, Z below (coordinates t1 + 3 t3, t1 + 3 t2,
  // t2 + t3 of the displayed U).
  const auto sp = special_normal_form(split11);
  const SolutionModule inter = intertwiners(sp.a(), sp.b(), reg.a0, reg.b0);
  const Mat3L X = Mat3L::from_ints(ring, {{{1, 0, 3}, {0, 0, 1}, {0, 0, 0}}});
  const Mat3L Y = Mat3L::from_ints(ring, {{{0, 0, 0}, {0, 1, 0}, {1, 3, 0}}});
  const Mat3L Z = Mat3L::from_ints(ring, {{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}});
  for (const auto& g : {X, Y, Z}) CHECK(inter.contains(vec9(g)));
  // Conversely every solution mod 3^8 agrees with the lattice mod 3^4.
  const RingPtr low = ring->with_precision(4);
  const SolutionModule lattice_low = module_of({change_precision(X, low), change_precision(Y, low), change_precision(Z, low)});
  for (const auto& g : inter.generators()) CHECK(lattice_low.contains(vec9(change_precision(mat_from_vec9(g), low))));
  CHECK_FALSE(unit_det_in_module(inter).has_value());
}

TEST_CASE("unit determinant search") {
  auto z16 = Ring::make(2, 1, 4);
  const auto found = unit_det_in_span({Mat3L::identity(z16)});
  REQUIRE(found.has_value());
  CHECK(*found == Mat3L::identity(z16));
  CHECK_FALSE(unit_det_in_span({Mat3L::from_ints(z16, {{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}})}).has_value());

  auto ring = Ring::make(2, 1, 10);
  const LocalOrder split11 = LocalOrder::make(CubicAlgebra::split(ring), 1, 1);
  const RegularPair reg = regular_rep(split11);
  const auto sp = special_normal_form(split11);
  CHECK_FALSE(unit_det_in_module(intertwiners(sp.a(), sp.b(), reg.a0, reg.b0)).has_value());

  std::vector<Mat3L> five;
  for (int k = 0; k < 5; ++k) {
    Mat3L e = Mat3L::zero(z16);
    e(k / 3, k % 3) = LocalElem::one(z16);
    five.push_back(e);
  }
  try {
    unit_det_in_span(five);
    FAIL("expected TooManyGenerators");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyGenerators);
  }
}

TEST_CASE("intertwiner search finds known conjugators") {
  std::mt19937_64 rng(3141);
  auto ring = Ring::make(5, 2, 9, {2, 1});
  const auto cubic = irreducible_residue_cubics(ring, 1).front();
  for (const LocalOrder& order : {LocalOrder::make(CubicAlgebra::split(ring), 1, 2),
                                  LocalOrder::make(CubicAlgebra::inert(cubic[0], cubic[1], cubic[2]), 1, 1)}) {
    const RegularPair reg = regular_rep(order);
    for (int i = 0; i < 10; ++i) {
      const Mat3L v = random_gl3(ring, rng);
      const Mat3L a = conjugate(reg.a0, v), b = conjugate(reg.b0, v);
      const auto u = unit_det_in_module(intertwiners(a, b, reg.a0, reg.b0));
      REQUIRE(u.has_value());
      CHECK(conjugate(a, *u) == reg.a0);
      CHECK(conjugate(b, *u) == reg.b0);
    }
  }
}
