#include <doctest.h>

#include <algorithm>
#include <random>

#include "optemb/error.hpp"
#include "optemb/q23_example.hpp"

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

std::string value_of(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.values())
    if (k == key) return v;
  return "<absent>";
}

// x + y omega with odd-denominator rational coefficients, integral at both primes over 2.
QuadElem random_integral(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(0, 3);
  const long dens[] = {1, 3, 5, 7};
  const QuadElem x(mpq_class(num(rng), dens[den(rng)]), 0);
  const QuadElem y(mpq_class(num(rng), dens[den(rng)]), 0);
  return x + y * QuadElem::omega();
}

}  // namespace

TEST_CASE("quadratic arithmetic") {
  const QuadElem w = QuadElem::omega();
  CHECK(w.norm() == 6);
  CHECK(w.trace() == 1);
  CHECK(QuadElem::sqrt_radicand().trace() == 0);
  CHECK((w * w - w + 6).is_zero());
  CHECK(w.conj() == QuadElem(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(w.is_integral());
  CHECK_FALSE(QuadElem(mpq_class(1, 2), 0).is_integral());
  CHECK(w.to_string() == "(1+sqrt(-23))/2");
  CHECK((4 * QuadElem::sqrt_radicand()).to_string() == "4*sqrt(-23)");
  CHECK(w.u() == 1);
  CHECK(w.v() == 1);
  CHECK(w.d() == 2);
  CHECK(QuadElem::from_parts(2, 2, 4) == w);
  CHECK(w / w == QuadElem(1));
  CHECK(code_of([&] { w / QuadElem(0); }) == Errc::DivisionByZero);
  CHECK(code_of([] { QuadElem::from_parts(1, 1, 0); }) == Errc::DivisionByZero);
}

TEST_CASE("the global embedding of O_K") {
  CHECK(verify_alpha().all_pass());
  CHECK(verify_beta().all_pass());
  CHECK(value_of(verify_beta(), "trace_form_det") == "1");

  QMat3 bad = q23::phi_alpha();
  bad(0, 1) = bad(0, 1) + 1;
  CHECK_FALSE(verify_alpha(bad).passed("alpha_minpoly"));
  CHECK_FALSE(verify_alpha(QMat3::identity()).passed("alpha_minpoly"));

  const QMat3 beta1 = q23::phi_beta() + QMat3::identity();
  const CheckReport r = verify_beta(q23::phi_alpha(), beta1);
  CHECK_FALSE(r.passed("beta_formula"));
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("completion at p") {
  const QuadElem w = QuadElem::omega();
  auto n16 = [](std::int64_t v) { return LocalElem::from_int(Ring::make(2, 1, 4), v); };
  CHECK(complete_at_two(w, 4) == n16(10));
  CHECK(complete_at_two(QuadElem::sqrt_radicand(), 4) == n16(3));
  CHECK(complete_at_two(QuadElem(mpq_class(1, 3), 0), 4) == n16(11));
  CHECK(complete_at_two(w, 4, 1) == n16(7));
  // omega lies in p, its conjugate does not.
  CHECK(valuation_at_two(w) == 1);
  CHECK(valuation_at_two(w.conj()) == 0);
  CHECK(valuation_at_two(w, 1) == 0);
  CHECK(valuation_at_two(4 * QuadElem::sqrt_radicand()) == 2);

  CHECK(code_of([] { complete_at_two(QuadElem(mpq_class(1, 2), 0), 8); }) == Errc::NotIntegralAtPrime);
  CHECK(code_of([&] { complete_at_two(w, 8, 2); }) == Errc::InvalidParameters);
  CHECK(code_of([&] { complete_at_two(w, 0); }) == Errc::InvalidParameters);
  // 1/omega is integral at the conjugate prime only.
  const QuadElem inv = QuadElem(1) / w;
  CHECK(code_of([&] { complete_at_two(inv, 8); }) == Errc::NotIntegralAtPrime);
  CHECK(complete_at_two(inv, 8, 1) * complete_at_two(w, 8, 1) == LocalElem::one(Ring::make(2, 1, 8)));
}

TEST_CASE("completion is a ring homomorphism") {
  std::mt19937_64 rng(3141);
  for (int i = 0; i < 200; ++i) {
    const QuadElem x = random_integral(rng), y = random_integral(rng);
    for (int root : {0, 1}) {
      CHECK(complete_at_two(x + y, 12, root) == complete_at_two(x, 12, root) + complete_at_two(y, 12, root));
      CHECK(complete_at_two(x * y, 12, root) == complete_at_two(x, 12, root) * complete_at_two(y, 12, root));
    }
  }
}

TEST_CASE("the local embedding of S2") {
  const CheckReport r = verify_s2_local(10);
  CHECK(r.all_pass());
  CHECK(value_of(r, "s2_orbit") == "regular");
  CHECK(value_of(r, "v_det_calw_inverse") == "2");
  CHECK(value_of(r, "det_calw_inverse") == "4*sqrt(-23)");
  CHECK(value_of(r, "reduced_norm") == "2*sqrt(-23)");
  CHECK(value_of(r, "v_reduced_norm") == "1");

  QMat3 w = q23::w_p();
  w(0, 0) = QuadElem(mpq_class(1, 4), 0);
  CHECK_FALSE(verify_s2_local(10, 0, w).passed("s2_norm_valuation"));

  CHECK(code_of([] { verify_s2_local(7); }) == Errc::PrecisionTooLow);

  for (int N : {8, 12, 16}) {
    const CheckReport rn = verify_s2_local(N);
    CHECK(rn.all_pass());
    CHECK(value_of(rn, "s2_orbit") == value_of(r, "s2_orbit"));
    CHECK(value_of(rn, "s2_local_order") == value_of(r, "s2_local_order"));
  }
}

TEST_CASE("selectivity of S1 and S2") {
  const ExampleOutcome ex = run_example(OPTEMB_DATA_DIR);
  CHECK(ex.report.all_pass());
  CHECK(ex.report.passed("s1_config_agrees"));
  CHECK(ex.report.passed("s2_config_agrees"));
  CHECK(ex.s1.D == Z3Set::of({0}));
  CHECK(ex.s1.fraction() == "1/3");
  CHECK(ex.s1.admitted.size() == 1);
  CHECK(ex.s2.D == Z3Set::of({0, 2}));
  CHECK(ex.s2.vhat == 1);
  CHECK(ex.s2.fraction() == "2/3");
  CHECK(ex.s2.admitted == std::vector<std::string>{"O2", "O1"});

  const ExampleOutcome conj = run_example("", 10, 1);
  CHECK(conj.report.all_pass());
  CHECK(value_of(conj.report, "warn") != "<absent>");
  CHECK(conj.s2.admitted == ex.s2.admitted);

  // Permuting the rho' labels permutes the admitted sets the same way.
  SelectivityContext c = q23::s2_context();
  for (auto& t : c.types) t.label = t.label == "O1" ? "O3" : t.label == "O3" ? "O1" : t.label;
  auto adm = verdict(c).admitted;
  std::sort(adm.begin(), adm.end());
  CHECK(adm == std::vector<std::string>{"O2", "O3"});
}
