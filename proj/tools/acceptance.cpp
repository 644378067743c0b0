// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "optemb/embedding.hpp"
#include "optemb/error.hpp"
#include "optemb/q23_example.hpp"
#include "optemb/similarity.hpp"
#include "optemb/sweep.hpp"

#ifndef OPTEMB_DATA_DIR
#define OPTEMB_DATA_DIR "data"
#endif

using namespace optemb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int n, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.ok && s > budget_s) {
    o.ok = false;
    o.detail = "over the " + std::to_string(static_cast<int>(budget_s)) + " s budget; " + o.detail;
  }
  std::printf("criterion %d %s (%.2f s) %s\n", n, o.ok ? "PASS" : "FAIL", s, o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

// Shared by criteria 3, 4 and 6: every cell, 100 conjugations each.
const std::vector<CellResult>& full_sweep() {
  static const std::vector<CellResult> results = [] {
    SweepOptions opts;
    opts.conjugates = 100;
    return run_sweep(opts);
  }();
  return results;
}

std::string cell_name(const CellResult& c) { return c.line().substr(0, c.line().find(" closed=")); }

Outcome criterion1() {
  Outcome o;
  const ExampleOutcome ex = run_example(OPTEMB_DATA_DIR);
  o.require(ex.report.all_pass(), "example checks failed");
  o.require(ex.s1.D == Z3Set::of({0}), "D(S1)");
  o.require(ex.s1.fraction() == "1/3", "S1 fraction");
  o.require(ex.s1.admitted.size() == 1, "S1 admitted count");
  o.require(ex.s2.D == Z3Set::of({0, 2}), "D(S2)");
  o.require(ex.s2.vhat == 1, "vhat(S2)");
  o.require(ex.s2.D.shifted(ex.s2.vhat) == Z3Set::of({0, 1}), "vhat + D(S2)");
  o.require(ex.s2.admitted == std::vector<std::string>{"O2", "O1"}, "S2 admitted types");
  const CheckReport local = verify_s2_local(10);
  o.require(local.all_pass(), "local S2 checks");
  if (o.ok) o.detail = "D(S1)={0} 1/3; D(S2)={0,2} vhat=1 admitted=O2,O1";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const CheckReport a = verify_alpha(), b = verify_beta();
  for (const char* k : {"alpha_minpoly", "alpha_beta_commute"}) o.require(a.passed(k), k);
  for (const char* k : {"beta_formula", "beta_minpoly", "entries_integral", "trace_form_unit"}) o.require(b.passed(k), k);
  if (o.ok) o.detail = "alpha and beta identities exact, trace-form determinant a unit";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& cells = full_sweep();
  int verified = 0;
  std::map<std::string, std::set<std::string>> minpolys;
  for (const auto& c : cells) {
    o.require(c.closed == c.oracle, "closed form disagrees: " + cell_name(c));
    if (c.closed == 1) {
      o.require(c.witness == "verified", "witness: " + cell_name(c));
      verified += c.witness == "verified";
    }
    if (c.cell.kind == OrderKind::Inert)
      minpolys["p=" + std::to_string(c.cell.p) + " f=" + std::to_string(c.cell.f) + " a=" + std::to_string(c.cell.a) +
               " b=" + std::to_string(c.cell.b)]
          .insert(c.minpoly);
  }
  for (const auto& [k, s] : minpolys) o.require(s.size() >= 2, "fewer than two minpolys at " + k);
  o.require(!cells.empty(), "empty sweep");
  if (o.ok)
    o.detail = std::to_string(cells.size()) + " cells agree, " + std::to_string(verified) + " witnesses verified";
  return o;
}

// Orders at a shared precision so that pairs of different orders can be compared.
LocalOrder make_order(const RingPtr& r, OrderKind kind, int a, int b) {
  if (kind == OrderKind::Split) return LocalOrder::make(CubicAlgebra::split(r), a, b);
  const auto c = irreducible_residue_cubics(r, 1).front();
  return LocalOrder::make(CubicAlgebra::inert(c[0], c[1], c[2]), a, b);
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(3141);
  int pairs = 0, optimal = 0, rejected = 0;
  auto check_pair = [&](const EmbeddingPair& pr, bool expect_optimal, const std::string& what) {
    const bool ind = optimal_by_independence(pr), minors = optimal_by_minors(pr);
    o.require(ind == minors, "criteria (2') and (3') disagree: " + what);
    o.require(ind == expect_optimal, "unexpected optimality: " + what);
    ++pairs;
    (ind ? optimal : rejected) += 1;
  };
  for (u64 p : {2, 3, 5})
    for (int f : {1, 2})
      for (OrderKind kind : {OrderKind::Split, OrderKind::Inert})
        for (int a = 0; a <= 2; ++a)
          for (int b = a; b <= 2 * a; ++b) {
            const int a2 = a + 1, b2 = kind == OrderKind::Split ? b + 1 : b + 2;
            const RingPtr r = Ring::make_default(p, f, default_precision(a2, b2));
            const LocalOrder small = make_order(r, kind, a, b), big = make_order(r, kind, a2, b2);
            const std::string what = small.describe() + " p=" + std::to_string(p) + " f=" + std::to_string(f);
            const RegularPair reg = regular_rep(small);
            const EmbeddingPair regular = EmbeddingPair::make(small, reg.a0, reg.b0);
            const EmbeddingPair special = special_normal_form(small);
            const LocalElem pi = LocalElem::p_power(r, 1);
            const LocalElem pi_b = LocalElem::p_power(r, b2 - b);
            for (int i = 0; i < 4; ++i) {
              const Mat3L u = random_gl3(r, rng);
              check_pair(regular.conjugated(u), true, what + " regular");
              check_pair(special.conjugated(u), true, what + " special");
              // e2 -> p e2 and e3 -> p^(b2-b) e3 carry `small` onto `big`; the image is never optimal.
              const EmbeddingPair scaled = regular.conjugated(u);
              check_pair(EmbeddingPair::make(big, pi * scaled.a(), pi_b * scaled.b()), false, what + " scaled");
              const EmbeddingPair scaled_sp = special.conjugated(u);
              check_pair(EmbeddingPair::make(big, pi * scaled_sp.a(), pi_b * scaled_sp.b()), false,
                         what + " scaled special");
            }
          }
  o.require(pairs >= 1000, "only " + std::to_string(pairs) + " pairs");

  int invariance_cells = 0;
  for (const auto& c : full_sweep()) {
    bool inv = true;
    for (const auto& f : c.failures) inv = inv && f != "conjugation_invariance";
    o.require(inv, "conjugation invariance: " + cell_name(c));
    invariance_cells += inv;
  }
  if (o.ok)
    o.detail = std::to_string(pairs) + " pairs (" + std::to_string(optimal) + " optimal, " + std::to_string(rejected) +
               " rejected); invariance over 100 conjugations in " + std::to_string(invariance_cells) + " cells";
  return o;
}

Outcome classify_all(u64 q, int& classes) {
  Outcome o;
  const RingPtr r = Ring::make(q, 1, 1);
  int total = 1;
  for (int k = 0; k < 9; ++k) total *= static_cast<int>(q);
  // For 3x3 matrices over a field the pair (char poly, min poly) determines the similarity class.
  std::map<std::string, std::string> invariants_of;
  for (int code = 0; code < total; ++code) {
    Mat3R m = Mat3R::zero(r);
    int c = code;
    for (int k = 0; k < 9; ++k, c /= static_cast<int>(q))
      m(k / 3, k % 3) = ResidueElem::from_int(r, c % static_cast<int>(q));
    const Classification cl = residue_classify(m);
    const Mat3R canon = canonical_matrix(cl.cls);
    o.require(conjugate(m, cl.conjugator) == canon, "conjugator fails for code " + std::to_string(code));
    o.require(residue_classify(canon).cls == cl.cls, "canonical matrix reclassifies differently");
    std::string inv;
    for (const auto& poly : {char_poly(m), min_poly(m)}) {
      for (const auto& e : poly) inv += e.to_string() + ",";
      inv += "|";
    }
    const std::string name = to_string(cl.cls);
    auto [it, fresh] = invariants_of.emplace(name, inv);
    o.require(fresh || it->second == inv, "one class name covers two similarity classes: " + name);
  }
  std::set<std::string> distinct;
  for (const auto& [name, inv] : invariants_of) distinct.insert(inv);
  o.require(distinct.size() == invariants_of.size(), "two class names share one similarity class");
  classes = static_cast<int>(invariants_of.size());
  const int expected = static_cast<int>(q * q * q + q * q + q);
  o.require(classes == expected, "expected " + std::to_string(expected) + " classes, saw " + std::to_string(classes));
  return o;
}

Outcome criterion5() {
  int c2 = 0, c3 = 0;
  Outcome o = classify_all(2, c2);
  if (!o.ok) return o;
  o = classify_all(3, c3);
  if (o.ok) o.detail = "512 matrices in " + std::to_string(c2) + " classes, 19683 in " + std::to_string(c3);
  return o;
}

Outcome criterion6() {
  Outcome o;
  int inert = 0;
  for (const auto& c : full_sweep()) {
    const LocalOrder order = c.cell.order();
    const int disc = disc_exponent(order);
    o.require(disc == 2 * (c.cell.a + c.cell.b), "disc_exponent: " + cell_name(c));
    o.require(gram_disc_exponent(order) == Valuation::exact(disc), "gram discriminant: " + cell_name(c));
    const Z3Set norms = local_norm_set(order);
    if (c.cell.kind == OrderKind::Inert) {
      ++inert;
      o.require(norms == Z3Set::of({0, mod3(disc / 2)}), "norm set: " + cell_name(c));
    } else {
      o.require(norms.is_all(), "split norm set: " + cell_name(c));
    }
  }
  if (o.ok) o.detail = "discriminant identity in all cells, norm sets in " + std::to_string(inert) + " inert cells";
  return o;
}

Outcome criterion7() {
  Outcome o;
  SweepOptions opts;
  opts.kinds = {OrderKind::Inert};
  std::mt19937_64 rng(3141);
  int cells = 0, samples = 0, skipped = 0;
  for (const SweepCell& cell : sweep_cells(opts)) {
    const LocalOrder order = cell.order();
    const RingPtr& r = order.ring();
    const int a = cell.a, b = cell.b;
    // d = a2 p^a + p^(2a-b) t keeps p^(b-2a)(d - a2 p^a) integral.
    const LocalElem base = order.algebra().a2() * LocalElem::p_power(r, a);
    const LocalElem step = LocalElem::p_power(r, 2 * a - b);
    std::set<Coeffs> seen;
    int attempts = 0;
    while (static_cast<int>(seen.size()) < 50 && attempts < 5000) {
      ++attempts;
      const LocalElem d = base + step * LocalElem::random(r, rng);
      if (seen.count(d.coeffs())) continue;
      try {
        const SinertConjugator s = sinert_conjugator(order, d);
        o.require(s.det_matches, "det U_d at " + order.describe() + " d=" + d.to_string());
        o.require(s.conjugation_matches, "U_d conjugation at " + order.describe() + " d=" + d.to_string());
        seen.insert(d.coeffs());
      } catch (const Error& e) {
        if (e.code() != Errc::ParameterOutOfRange) throw;
        ++skipped;
      }
    }
    o.require(seen.size() >= 50, "fewer than 50 admissible d at " + order.describe());
    ++cells;
    samples += static_cast<int>(seen.size());
  }
  if (o.ok)
    o.detail = std::to_string(samples) + " values of d over " + std::to_string(cells) + " inert cells (" +
               std::to_string(skipped) + " out of range)";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, 1, criterion1);
  all &= run_criterion(2, 1, criterion2);
  all &= run_criterion(3, 300, criterion3);
  all &= run_criterion(4, 120, criterion4);
  all &= run_criterion(5, 60, criterion5);
  all &= run_criterion(6, 300, criterion6);
  all &= run_criterion(7, 60, criterion7);
  std::printf("acceptance %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
