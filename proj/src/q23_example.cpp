#include "optemb/q23_example.hpp"

#include <algorithm>

#include "optemb/embedding.hpp"
#include "optemb/error.hpp"

namespace optemb {

void CheckReport::append(const CheckReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  values_.insert(values_.end(), other.values_.begin(), other.values_.end());
}

bool CheckReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.second; });
}

bool CheckReport::passed(const std::string& key) const {
  for (const auto& [k, ok] : checks_)
    if (k == key) return ok;
  return false;
}

std::vector<std::string> CheckReport::failed() const {
  std::vector<std::string> out;
  for (const auto& [k, ok] : checks_)
    if (!ok) out.push_back(k);
  return out;
}

namespace q23 {

QMat3 phi_alpha() {
  return QMat3::from_parts({{{0, -10, 0}, {1, -15, 0}, {0, 0, 16}}}, {{{0, 0, 7}, {0, 0, 10}, {0, 1, 0}}});
}

QMat3 phi_beta() {
  return QMat3::from_parts({{{0, 0, 117}, {0, 0, 167}, {1, 16, 0}}}, {{{0, 7, 0}, {0, 10, 0}, {0, 0, -12}}});
}

QMat3 phi_p_2alpha() { return QMat3::from_parts({{{0, 0, -4}, {1, 0, 0}, {0, 2, 2}}}, {}); }

QMat3 phi_p_2alpha2() { return QMat3::from_parts({{{0, -4, -4}, {0, 0, -2}, {1, 2, 2}}}, {}); }

QMat3 calw_inverse() {
  return QMat3::from_parts({{{1, 0, -20}, {0, 2, -30}, {0, 0, 0}}}, {{{0, 0, 0}, {0, 0, 0}, {0, 0, 2}}});
}

QMat3 w_p() {
  QMat3 w = QMat3::identity();
  w(0, 0) = QuadElem(mpq_class(1, 2), 0);
  return w;
}

namespace {

SelectivityContext base_context() {
  SelectivityContext ctx;
  // Cl(R) = <[p]> of order 3 and Art([p]) = sigma; p pbar = (2) is principal.
  ctx.primes = {{"p", 1, Splitting::Inert, false}, {"pbar", 2, Splitting::Inert, false}};
  ctx.vhat = {{"p", 1}};
  ctx.types = {{"O1", 1}, {"O2", 0}, {"O3", 2}};
  return ctx;
}

}  // namespace

SelectivityContext s1_context() { return base_context(); }

SelectivityContext s2_context() {
  SelectivityContext ctx = base_context();
  ctx.sqrt_disc = {{"p", 2}};  // disc S2 = p^4
  return ctx;
}

}  // namespace q23

CheckReport verify_alpha(const QMat3& alpha, const QMat3& beta) {
  CheckReport r;
  const QMat3 a2 = alpha * alpha;
  r.check("alpha_minpoly", (a2 * alpha - a2 + QMat3::identity()).is_zero());
  r.check("alpha_beta_commute", alpha * beta == beta * alpha);
  return r;
}

CheckReport verify_beta(const QMat3& alpha, const QMat3& beta) {
  CheckReport r;
  const QMat3 id = QMat3::identity();
  const QuadElem s = QuadElem::sqrt_radicand();
  const QMat3 formula = (QuadElem(1) / s) * (alpha * alpha + QuadElem(15) * alpha + QuadElem(10) * id);
  r.check("beta_formula", formula == beta);
  const QMat3 b2 = beta * beta;
  r.check("beta_minpoly", (b2 * beta + (QuadElem(2) * s) * b2 - QuadElem(29) * beta + s * id).is_zero());
  r.check("entries_integral", alpha.all_integral() && beta.all_integral());

  const QMat3 basis[3] = {id, alpha, beta};
  QMat3 gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gram(i, j) = (basis[i] * basis[j]).trace();
  const QuadElem det = gram.det();
  r.value("trace_form_det", det.to_string());
  // Units of R are exactly the integral elements of norm 1.
  r.check("trace_form_unit", det.is_integral() && det.norm() == 1);
  return r;
}

namespace {

LocalElem from_mpz(const RingPtr& ring, const mpz_class& z) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(ring->precision()));
  return LocalElem::from_int(ring, static_cast<std::int64_t>(r.get_ui()));
}

// Image of omega: the root of t^2 - t + 6 congruent to `root` mod 2.
LocalElem omega_image(const RingPtr& ring, int root) {
  const LocalPoly poly = {LocalElem::from_int(ring, 6), LocalElem::from_int(ring, -1), LocalElem::one(ring)};
  return hensel_root(poly, ResidueElem::from_int(ring, root));
}

// Image of the integral numerator u + v sqrt(-23) at precision M.
LocalElem numerator_image(const QuadElem& x, int M, int root) {
  const RingPtr ring = Ring::make(2, 1, M);
  const LocalElem s = 2 * omega_image(ring, root) - LocalElem::one(ring);
  return from_mpz(ring, x.u()) + from_mpz(ring, x.v()) * s;
}

void check_root(int root) {
  if (root != 0 && root != 1) throw Error(Errc::InvalidParameters, "root must be 0 or 1");
}

int two_adic_valuation(const mpz_class& z) { return static_cast<int>(mpz_scan1(z.get_mpz_t(), 0)); }

}  // namespace

LocalElem complete_at_two(const QuadElem& x, int N, int root) {
  check_root(root);
  if (N < 1 || N > 40) throw Error(Errc::InvalidParameters, "completion precision must lie in [1, 40]");
  const mpz_class d = x.d();
  const int e = two_adic_valuation(d);
  if (N + e > 60) throw Error(Errc::InvalidParameters, "denominator has too large a power of 2");
  const LocalElem num = numerator_image(x, N + e, root);
  if (!num.is_zero() && num.valuation().value() < e)
    throw Error(Errc::NotIntegralAtPrime, x.to_string() + " is not integral at the selected prime over 2");
  const mpz_class odd = d >> e;
  const LocalElem q = num.divide_by_p_power(e) * from_mpz(num.ring(), odd).inverse();
  return LocalElem::from_int(Ring::make(2, 1, N), static_cast<std::int64_t>(q.coeff(0)));
}

int valuation_at_two(const QuadElem& x, int root) {
  check_root(root);
  if (x.is_zero()) throw Error(Errc::InvalidParameters, "valuation of zero");
  const mpz_class u = x.u(), v = x.v();
  const mpz_class n = u * u + 23 * v * v;
  // The conjugate numerator is integral, so v(num) <= v_2(N(num)).
  const int M = two_adic_valuation(n) + 1;
  if (M > 60) throw Error(Errc::InvalidParameters, "numerator too divisible by 2");
  return numerator_image(x, M, root).valuation().value() - two_adic_valuation(x.d());
}

namespace {

Mat3L complete_matrix(const QMat3& m, int N, int root) {
  std::array<LocalElem, 9> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[3 * i + j] = complete_at_two(m(i, j), N, root);
  return Mat3L::from_entries(e);
}

}  // namespace

CheckReport verify_s2_local(int N, int root, const QMat3& w) {
  if (N < 8) throw Error(Errc::PrecisionTooLow, "the S2 check needs precision at least 8");
  check_root(root);
  CheckReport r;
  const RingPtr ring = Ring::make(2, 1, N);
  auto c = [&](std::int64_t v) { return LocalElem::from_int(ring, v); };

  // (i) x^3 - x^2 + 1 is irreducible mod 2; S2 at p is R + 2 alpha R + 2 alpha^2 R.
  const CubicAlgebra alg = CubicAlgebra::inert(c(-1), c(0), c(1));
  const InertNormalization norm =
      normalize_inert_order(alg, {{{c(1), c(0), c(0)}, {c(0), c(2), c(0)}, {c(0), c(0), c(2)}}});
  r.value("s2_local_order", "inert(" + std::to_string(norm.a) + "," + std::to_string(norm.b) + ")");
  r.check("s2_order_recomputed", norm.verified && norm.a == 1 && norm.b == 1);
  const LocalOrder order = LocalOrder::make(alg, norm.a, norm.b);
  const Mat3L a = complete_matrix(q23::phi_p_2alpha(), N, root);
  const Mat3L b = complete_matrix(q23::phi_p_2alpha2(), N, root);
  const RegularPair reg = regular_rep(order);
  r.check("s2_regular_representation", a == reg.a0 && b == reg.b0);
  try {
    const EmbeddingPair pair = EmbeddingPair::make(order, a, b);
    r.check("s2_homomorphism", true);
    const bool optimal = is_optimal(pair);
    r.check("s2_optimal", optimal);
    if (optimal) r.value("s2_orbit", std::string(orbit_name(classify_orbit(pair))));
  } catch (const Error& e) {
    r.check("s2_homomorphism", false);
    r.value("s2_error", e.what());
  }

  // (ii) calw^{-1} phi_p(x) = phi(x) calw^{-1}, for x = 2 alpha and 2 alpha^2.
  const QMat3 cw = q23::calw_inverse();
  const QMat3 pa = q23::phi_alpha();
  const QMat3 lhs1 = cw * q23::phi_p_2alpha(), rhs1 = QuadElem(2) * pa * cw;
  const QMat3 lhs2 = cw * q23::phi_p_2alpha2(), rhs2 = QuadElem(2) * pa * pa * cw;
  r.check("s2_conjugation_exact", lhs1 == rhs1 && lhs2 == rhs2);
  bool completed = false;
  try {
    completed = complete_matrix(lhs1, N, root) == complete_matrix(rhs1, N, root) &&
                complete_matrix(lhs2, N, root) == complete_matrix(rhs2, N, root);
  } catch (const Error&) {
  }
  r.check("s2_conjugation_completed", completed);

  // (iii) N_r(W calw^{-1}) = 2 sqrt(-23), of valuation 1 at p.
  const QuadElem det_cw = cw.det();
  r.value("det_calw_inverse", det_cw.to_string());
  r.value("v_det_calw_inverse", std::to_string(valuation_at_two(det_cw, root)));
  const QuadElem nr = w.det() * det_cw;
  r.value("reduced_norm", nr.to_string());
  const QuadElem expected = QuadElem(2) * QuadElem::sqrt_radicand();
  r.check("s2_norm_value", nr == expected);
  const int v = nr.is_zero() ? -1 : valuation_at_two(nr, root);
  r.value("v_reduced_norm", std::to_string(v));
  r.check("s2_norm_valuation", v == 1);
  const PrimeDatum* p = q23::s2_context().find_prime("p");
  r.value("vhat_contribution", std::to_string(mod3(static_cast<long long>(v) * p->rho)));
  return r;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

void report_verdict(CheckReport& r, const std::string& tag, const Verdict& v) {
  r.value(tag + "_D", v.D.to_string());
  r.value(tag + "_selective", v.selective ? "true" : "false");
  r.value(tag + "_fraction", v.fraction());
  r.value(tag + "_vhat", std::to_string(v.vhat));
  r.value(tag + "_admitted", join(v.admitted));
}

void compare_file(CheckReport& r, const std::string& key, const std::string& path, const SelectivityContext& ctx) {
  try {
    r.check(key, format_context(read_context(path)) == format_context(ctx));
  } catch (const Error& e) {
    r.check(key, false);
    r.value(key + "_error", e.what());
  }
}

}  // namespace

ExampleOutcome run_example(const std::string& data_dir, int N, int root) {
  check_root(root);
  ExampleOutcome out;
  CheckReport& r = out.report;
  r.value("completion_root", root == 0 ? "0" : "1");
  r.value("completion_prime", root == 0 ? "p" : "pbar");
  if (root == 1)
    r.value("warn", "root 1 completes at the conjugate prime pbar; the v-hat datum stays attached to p");

  const SelectivityContext s1 = q23::s1_context();
  const SelectivityContext s2 = q23::s2_context();
  if (!data_dir.empty()) {
    compare_file(r, "s1_config_agrees", data_dir + "/q23_s1.cfg", s1);
    compare_file(r, "s2_config_agrees", data_dir + "/q23_s2.cfg", s2);
  }
  r.check("contexts_clean", validate(s1).empty() && validate(s2).empty());

  // The S2 v-hat datum is the valuation of N_r(W calw^{-1}) at p.
  const QuadElem nr = q23::w_p().det() * q23::calw_inverse().det();
  r.check("s2_vhat_from_local", s2.vhat == std::vector<std::pair<std::string, long long>>{
                                              {"p", valuation_at_two(nr, root)}});
  r.check("s2_local_precision_ok", verify_s2_local(N, root).all_pass());

  out.s1 = verdict(s1);
  out.s2 = verdict(s2);
  report_verdict(r, "s1", out.s1);
  report_verdict(r, "s2", out.s2);
  r.value("s2_translated_D", out.s2.D.shifted(out.s2.vhat).to_string());

  r.check("s1_D_trivial", out.s1.D == Z3Set::of({0}));
  r.check("s1_fraction", out.s1.selective && out.s1.fraction() == "1/3");
  r.check("s1_single_type", out.s1.admitted.size() == 1);
  r.check("s2_D", out.s2.D == Z3Set::of({0, 2}));
  r.check("s2_vhat", out.s2.vhat == 1);
  r.check("s2_translated_D", out.s2.D.shifted(out.s2.vhat) == Z3Set::of({0, 1}));
  r.check("s2_fraction", out.s2.selective && out.s2.fraction() == "2/3");
  r.check("s2_admitted", out.s2.admitted == std::vector<std::string>{"O2", "O1"});
  return out;
}

}  // namespace optemb
