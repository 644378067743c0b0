#pragma once

#include <string>
#include <utility>
#include <vector>

#include "optemb/local_ring.hpp"
#include "optemb/quadratic.hpp"
#include "optemb/selectivity.hpp"

namespace optemb {

/// Ordered named checks plus informational values. A failed check is data,
/// not an exception.
class CheckReport {
 public:
  void check(std::string key, bool ok) { checks_.emplace_back(std::move(key), ok); }
  void value(std::string key, std::string v) { values_.emplace_back(std::move(key), std::move(v)); }
  void append(const CheckReport& other);

  bool all_pass() const;
  bool passed(const std::string& key) const;  // false when absent
  std::vector<std::string> failed() const;
  const std::vector<std::pair<std::string, bool>>& checks() const noexcept { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const noexcept { return values_; }

 private:
  std::vector<std::pair<std::string, bool>> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
};

/// Data of F = Q(sqrt(-23)) with K = F(alpha), alpha^3 = alpha^2 - 1, and
/// p = (2, omega) where omega = (1 + sqrt(-23))/2.
namespace q23 {

QMat3 phi_alpha();
QMat3 phi_beta();
/// phi_p(2 alpha) and phi_p(2 alpha^2), the local embedding of S2 at p.
QMat3 phi_p_2alpha();
QMat3 phi_p_2alpha2();
/// The inverse of the local change of basis carrying phi_p to phi.
QMat3 calw_inverse();
/// diag(1/2, 1, 1): O2 at p is W^{-1} M3(R_p) W.
QMat3 w_p();

SelectivityContext s1_context();
SelectivityContext s2_context();

}  // namespace q23

/// phi(alpha)^3 - phi(alpha)^2 + I = 0 and [phi(alpha), phi(beta)] = 0.
CheckReport verify_alpha(const QMat3& alpha = q23::phi_alpha(), const QMat3& beta = q23::phi_beta());

/// beta = (alpha^2 + 15 alpha + 10)/sqrt(-23), the cubic relation of beta,
/// integrality of both matrices, and a unit trace-form determinant on
/// {1, alpha, beta}.
CheckReport verify_beta(const QMat3& alpha = q23::phi_alpha(), const QMat3& beta = q23::phi_beta());

/// Image in Z/2^N of an element integral at the prime selected by `root`:
/// omega goes to the root of t^2 - t + 6 congruent to `root` mod 2. Root 0
/// selects p = (2, omega), root 1 its conjugate. Throws NotIntegralAtPrime,
/// InvalidParameters for a root outside {0, 1} or N outside [1, 40].
LocalElem complete_at_two(const QuadElem& x, int N, int root = 0);

/// Valuation at the prime selected by `root`; x must be nonzero.
int valuation_at_two(const QuadElem& x, int root = 0);

/// The local picture of S2 = R + p O_K at p: the displayed pair is an optimal
/// embedding of the inert order with (a, b) recomputed from the basis 1,
/// 2 alpha, 2 alpha^2; the change of basis carries it to phi; and
/// N_r(W calw^{-1}) has valuation 1. Requires N >= 8.
CheckReport verify_s2_local(int N, int root = 0, const QMat3& w = q23::w_p());

struct ExampleOutcome {
  CheckReport report;
  Verdict s1, s2;
};

/// Verdicts for S1 = O_K and S2 with the expected conclusions asserted as
/// checks. When `data_dir` is nonempty, q23_s1.cfg and q23_s2.cfg there are
/// parsed and compared with the built-in contexts.
ExampleOutcome run_example(const std::string& data_dir = "", int N = 10, int root = 0);

}  // namespace optemb
