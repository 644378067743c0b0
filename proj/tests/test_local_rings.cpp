#include <doctest.h>

#include <random>

#include "optemb/error.hpp"
#include "optemb/local_ring.hpp"

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

ResiduePoly rpoly(const RingPtr& r, std::initializer_list<std::int64_t> c) {
  ResiduePoly out;
  for (auto v : c) out.push_back(ResidueElem::from_int(r, v));
  return poly_trim(out);
}

}  // namespace

TEST_CASE("ring construction") {
  auto z16 = Ring::make(2, 1, 4);
  CHECK(z16->modulus() == 16);
  CHECK(z16->describe() == "Z/2^4");
  auto w = Ring::make(2, 3, 2, {1, 1, 0});
  CHECK(w->degree() == 3);
  CHECK(w->residue_field_size() == 8);
  // x^2 + x + 2 = x(x + 1) mod 2
  CHECK(code_of([] { Ring::make(2, 2, 2, {2, 1}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { Ring::make(4, 1, 2); }) == Errc::NotPrime);
  CHECK(code_of([] { Ring::make(2, 4, 2, {1, 1, 0, 0}); }) == Errc::InvalidRing);
  CHECK(code_of([] { Ring::make(2, 1, 70); }) == Errc::InvalidRing);
}

TEST_CASE("arithmetic examples") {
  auto z16 = Ring::make(2, 1, 4);
  auto n = [&](std::int64_t v) { return LocalElem::from_int(z16, v); };
  CHECK(n(9) + n(9) == n(2));
  CHECK(n(3) * n(11) == n(1));
  CHECK(-n(1) == n(15));
  CHECK(n(3).pow(4) == n(1));

  auto w = Ring::make(2, 3, 2, {1, 1, 0});
  LocalElem x(w, {0, 1, 0}), x2(w, {0, 0, 1});
  CHECK((x * x2).coeffs() == Coeffs{3, 3, 0});  // x^3 = -x - 1
  CHECK_THROWS_AS(n(1) + LocalElem::one(w), Error);
}

TEST_CASE("valuation") {
  auto z16 = Ring::make(2, 1, 4);
  CHECK(LocalElem::from_int(z16, 12).valuation() == Valuation::exact(2));
  CHECK(LocalElem::zero(z16).valuation() == Valuation::at_least_precision());
  auto r8 = Ring::make(2, 2, 3, {1, 1});
  CHECK(LocalElem(r8, {4, 2, 0}).valuation() == Valuation::exact(1));
  CHECK_THROWS_AS(LocalElem::zero(z16).valuation().value(), Error);
}

TEST_CASE("units and inverses") {
  auto z16 = Ring::make(2, 1, 4);
  CHECK(LocalElem::from_int(z16, 3).is_unit());
  CHECK(LocalElem::from_int(z16, 3).inverse() == LocalElem::from_int(z16, 11));
  CHECK_FALSE(LocalElem::from_int(z16, 6).is_unit());
  CHECK(code_of([&] { LocalElem::from_int(z16, 6).inverse(); }) == Errc::NotAUnit);

  // In (Z/4)[x]/(x^3+x+1): x (3x^2 + 3) = 3(x^3 + x) = -3 = 1.
  auto w = Ring::make(2, 3, 2, {1, 1, 0});
  LocalElem x(w, {0, 1, 0});
  const LocalElem inv = x.inverse();
  CHECK(inv.coeffs() == Coeffs{3, 0, 3});
  CHECK(x * inv == LocalElem::one(w));
  CHECK(inv * x == LocalElem::one(w));
}

TEST_CASE("reduction and lifting") {
  auto z16 = Ring::make(2, 1, 4);
  CHECK(LocalElem::from_int(z16, 13).reduce() == ResidueElem::one(z16));
  CHECK(ResidueElem::one(z16).lift() == LocalElem::one(z16));
  auto w = Ring::make(2, 3, 2, {1, 1, 0});
  CHECK(LocalElem(w, {2, 1, 0}).reduce() == ResidueElem(w, {0, 1, 0}));
  std::mt19937_64 rng(3141);
  for (int i = 0; i < 50; ++i) {
    const ResidueElem r = ResidueElem::random(w, rng);
    CHECK(r.lift().reduce() == r);
  }
}

TEST_CASE("hensel roots") {
  auto z16 = Ring::make(2, 1, 4);
  auto n = [&](std::int64_t v) { return LocalElem::from_int(z16, v); };
  const LocalPoly omega = {n(6), n(-1), n(1)};
  CHECK(hensel_root(omega, ResidueElem::zero(z16)) == n(10));
  CHECK(hensel_root(omega, ResidueElem::one(z16)) == n(7));
  CHECK(hensel_root({n(-5), n(1)}, ResidueElem::one(z16)) == n(5));
  CHECK(code_of([&] { hensel_root({n(0), n(0), n(1)}, ResidueElem::zero(z16)); }) == Errc::NotSimpleRoot);
  CHECK(code_of([&] { hensel_root(omega, ResidueElem::zero(Ring::make(3, 1, 2))); }) == Errc::SpecMismatch);

  auto big = Ring::make(5, 2, 9, {2, 1});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    // (t - r)(t - s) with r != s mod 5 has r as a simple root.
    const LocalElem r = LocalElem::random(big, rng);
    LocalElem s = LocalElem::random(big, rng);
    if (r.reduce() == s.reduce()) s += LocalElem::one(big);
    const LocalPoly poly = {r * s, -(r + s), LocalElem::one(big)};
    const LocalElem root = hensel_root(poly, r.reduce());
    CHECK(root == r);
    CHECK(poly_eval(poly, root).is_zero());
  }
}

TEST_CASE("residue polynomials") {
  auto f2 = Ring::make(2, 1, 1);
  CHECK(poly_gcd(rpoly(f2, {1, 0, 1}), rpoly(f2, {1, 1})) == rpoly(f2, {1, 1}));
  CHECK(poly_roots(rpoly(f2, {1, 1, 0, 1}), f2).empty());
  CHECK_FALSE(poly_has_root(rpoly(f2, {1, 1, 0, 1}), f2));
  CHECK_FALSE(poly_is_squarefree(rpoly(f2, {1, 0, 1})));  // (x+1)^2
  CHECK(poly_is_squarefree(rpoly(f2, {1, 1, 0, 1})));

  auto f8 = Ring::make(2, 3, 1, {1, 1, 0});
  const auto roots = poly_roots(rpoly(f8, {1, 1, 0, 1}), f8);
  CHECK(roots.size() == 3);
  CHECK(poly_has_root(rpoly(f8, {1, 1, 0, 1}), f8));
  for (const auto& r : roots) CHECK(poly_eval(rpoly(f8, {1, 1, 0, 1}), r).is_zero());

  auto [q, rem] = poly_divmod(rpoly(f2, {1, 0, 0, 1}), rpoly(f2, {1, 1}));
  CHECK(rem.empty());
  CHECK(poly_mul(q, rpoly(f2, {1, 1})) == rpoly(f2, {1, 0, 0, 1}));
}

TEST_CASE("first irreducible modulus") {
  CHECK(first_irreducible_modulus(2, 3) == std::vector<u64>{1, 1, 0});
  CHECK(first_irreducible_modulus(3, 2) == std::vector<u64>{1, 0});
  CHECK(Ring::make_default(2, 2, 3)->modulus_poly() == Coeffs{1, 1, 0});
}

TEST_CASE("ring axioms and valuation properties at a fixed seed") {
  std::mt19937_64 rng(3141);
  for (auto ring : {Ring::make(2, 1, 8), Ring::make(3, 2, 5, {1, 0}), Ring::make(2, 3, 6, {1, 1, 0}),
                    Ring::make(5, 3, 4, {1, 1, 0})}) {
    const int N = ring->precision();
    for (int i = 0; i < 200; ++i) {
      const LocalElem x = LocalElem::random(ring, rng), y = LocalElem::random(ring, rng),
                      z = LocalElem::random(ring, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero() && !y.is_zero()) {
        const int s = x.valuation().value() + y.valuation().value();
        if (s < N) CHECK((x * y).valuation() == Valuation::exact(s));
      }
      if (x.is_unit()) {
        CHECK(x * x.inverse() == LocalElem::one(ring));
        CHECK(x.inverse() * x == LocalElem::one(ring));
      }
    }
  }
}
