#include <doctest.h>

#include "optemb/error.hpp"
#include "optemb/local_order.hpp"

using namespace optemb;

namespace {

using Coord = std::array<LocalElem, 3>;

Coord coord(const RingPtr& r, std::int64_t x, std::int64_t y, std::int64_t z) {
  return {LocalElem::from_int(r, x), LocalElem::from_int(r, y), LocalElem::from_int(r, z)};
}

CubicAlgebra inert_alg(const RingPtr& r, std::int64_t a0, std::int64_t a1, std::int64_t a2) {
  return CubicAlgebra::inert(LocalElem::from_int(r, a0), LocalElem::from_int(r, a1), LocalElem::from_int(r, a2));
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an optemb::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("structure constants") {
  auto r = Ring::make(2, 1, 12);
  const auto split12 = structure_constants(LocalOrder::make(CubicAlgebra::split(r), 1, 2));
  CHECK(split12.product(1, 1) == coord(r, 0, 2, 0));
  CHECK(split12.product(2, 2) == coord(r, 0, 0, 4));
  CHECK(split12.product(1, 2) == coord(r, 0, 0, 0));

  // x^3 - x - 1: a2 = 0, a1 = 1, a0 = 1.
  const CubicAlgebra f = inert_alg(r, 1, 1, 0);
  const auto max = structure_constants(LocalOrder::make(f, 0, 0));
  CHECK(max.product(1, 1) == coord(r, 0, 0, 1));
  CHECK(max.product(1, 2) == coord(r, 1, 1, 0));

  const auto o12 = structure_constants(LocalOrder::make(f, 1, 2));
  CHECK(o12.product(1, 1) == coord(r, 0, 0, 1));
  CHECK(o12.product(1, 2) == coord(r, 8, 4, 0));
  CHECK(o12.product(2, 1) == o12.product(1, 2));
  CHECK(o12.product(0, 2) == coord(r, 0, 0, 1));
}

TEST_CASE("regular representations") {
  auto r = Ring::make(2, 1, 8);
  const RegularPair s11 = regular_rep(LocalOrder::make(CubicAlgebra::split(r), 1, 1));
  CHECK(s11.a0 == Mat3L::from_ints(r, {{{0, 0, 0}, {1, 2, 0}, {0, 0, 0}}}));
  CHECK(s11.b0 == Mat3L::from_ints(r, {{{0, 0, 0}, {0, 0, 0}, {1, 0, 2}}}));

  auto r12 = Ring::make(2, 1, 12);
  const CubicAlgebra f = inert_alg(r12, 1, 1, 0);
  CHECK(regular_rep(LocalOrder::make(f, 0, 0)).a0 == Mat3L::from_ints(r12, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}));
  CHECK(regular_rep(LocalOrder::make(f, 1, 2)).a0 == Mat3L::from_ints(r12, {{{0, 0, 8}, {1, 0, 4}, {0, 1, 0}}}));
}

TEST_CASE("regular representation reproduces the structure constants") {
  for (u64 p : {2, 3, 5}) {
    auto r = Ring::make_default(p, 2, 14);
    const auto cubic = irreducible_residue_cubics(r, 1).front();
    for (const auto& alg : {CubicAlgebra::split(r), CubicAlgebra::inert(cubic[0], cubic[1], cubic[2])})
      for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 2}, {2, 3}}) {
        const LocalOrder o = LocalOrder::make(alg, a, b);
        const auto sc = structure_constants(o);
        const RegularPair reg = regular_rep(o);
        for (int j = 0; j < 3; ++j) {
          CHECK(reg.a0.column(j) == sc.product(1, j));
          CHECK(reg.b0.column(j) == sc.product(2, j));
          CHECK(sc.product(0, j) == sc.product(j, 0));
          CHECK(sc.product(1, j) == sc.product(j, 1));
        }
        CHECK(reg.a0 * reg.b0 == reg.b0 * reg.a0);
      }
  }
}

TEST_CASE("discriminants") {
  auto r = Ring::make(2, 1, 16);
  const CubicAlgebra f = inert_alg(r, 1, 1, 0);
  CHECK(disc_exponent(LocalOrder::make(f, 0, 0)) == 0);
  CHECK(disc_exponent(LocalOrder::make(f, 1, 2)) == 6);
  CHECK(disc_exponent(LocalOrder::make(CubicAlgebra::split(r), 2, 0)) == 4);
  CHECK(gram_disc_exponent(LocalOrder::make(CubicAlgebra::split(r), 2, 0)) == Valuation::exact(4));
  CHECK(gram_disc_exponent(LocalOrder::make(f, 1, 2)) == Valuation::exact(6));
  auto low = Ring::make(2, 1, 6);
  CHECK(code_of([&] { gram_disc_exponent(LocalOrder::make(inert_alg(low, 1, 1, 0), 1, 2)); }) ==
        Errc::PrecisionTooLow);
  CHECK(default_precision(1, 2) == 12);
}

TEST_CASE("order validation") {
  auto r = Ring::make(2, 1, 16);
  const CubicAlgebra f = inert_alg(r, 1, 1, 0);
  CHECK(code_of([&] { LocalOrder::make(f, 2, 5); }) == Errc::InvalidParameters);
  CHECK(code_of([&] { LocalOrder::make(f, 2, 1); }) == Errc::InvalidParameters);
  CHECK(code_of([&] { LocalOrder::make(CubicAlgebra::split(r), -1, 0); }) == Errc::InvalidParameters);
  // x^3 - x^2 - x - 1 has the root 1 mod 2.
  CHECK(code_of([&] { inert_alg(r, 1, 1, 1); }) == Errc::InvalidParameters);
  CHECK(LocalOrder::make(f, 1, 2).describe() == "inert(a=1,b=2,minpoly=1,1,0)");
}

TEST_CASE("irreducible residue cubics") {
  auto f2 = Ring::make(2, 1, 4);
  const auto c2 = irreducible_residue_cubics(f2, 100);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0][2].is_zero());  // x^3 + x + 1 comes first
  CHECK(irreducible_residue_cubics(Ring::make(3, 1, 2), 100).size() == 8);
  CHECK(irreducible_residue_cubics(Ring::make_default(2, 2, 2), 100).size() == 20);
}

TEST_CASE("recovering (a, b) from a basis") {
  auto r = Ring::make(2, 1, 16);
  const CubicAlgebra f = inert_alg(r, 1, 1, 0);
  const auto n = normalize_inert_order(f, {coord(r, 1, 0, 0), coord(r, 0, 2, 0), coord(r, 0, 0, 4)});
  CHECK(n.a == 1);
  CHECK(n.b == 2);
  CHECK(n.verified);
  // Another basis of the same order.
  const auto m = normalize_inert_order(f, {coord(r, 1, 0, 0), coord(r, 0, 2, 4), coord(r, 1, 0, 4)});
  CHECK(m.a == 1);
  CHECK(m.b == 2);
  CHECK(code_of([&] { normalize_inert_order(f, {coord(r, 1, 0, 0), coord(r, 0, 1, 0), coord(r, 0, 0, 2)}); }) ==
        Errc::NotAnOrder);
  CHECK(code_of([&] { normalize_inert_order(f, {coord(r, 2, 0, 0), coord(r, 0, 1, 0), coord(r, 0, 0, 1)}); }) ==
        Errc::NotAnOrder);
}

TEST_CASE("division algebra embedding numbers") {
  auto r = Ring::make(3, 1, 10);
  const auto cubic = irreducible_residue_cubics(r, 1).front();
  const CubicAlgebra f = CubicAlgebra::inert(cubic[0], cubic[1], cubic[2]);
  CHECK(division_embedding_number(LocalOrder::make(f, 0, 0)) == 1);
  CHECK(division_embedding_number(LocalOrder::make(f, 1, 1)) == 0);
  CHECK(division_embedding_number(LocalOrder::make(CubicAlgebra::split(r), 0, 0)) == 0);
}
