#pragma once

#include <optional>
#include <vector>

#include "optemb/mat3.hpp"

namespace optemb {

using LVec = std::vector<LocalElem>;

/// Howell form of a submodule of (W/p^N)^n. Rows are in echelon form, each
/// pivot is exactly p^k, entries above a pivot are reduced modulo p^k, and
/// every module element vanishing on the first c columns is a combination of
/// rows whose pivot lies beyond c. The form is unique, so equality of
/// modules is equality of forms.
class HowellForm {
 public:
  HowellForm(RingPtr ring, int ncols, std::vector<LVec> rows, std::vector<int> pivot_cols);

  const RingPtr& ring() const noexcept { return ring_; }
  int ncols() const noexcept { return ncols_; }
  const std::vector<LVec>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivot_columns() const noexcept { return pivots_; }
  /// Valuation of the pivot of row i.
  int pivot_valuation(std::size_t i) const;

  bool contains(const LVec& v) const;
  friend bool operator==(const HowellForm& x, const HowellForm& y);

 private:
  RingPtr ring_;
  int ncols_;
  std::vector<LVec> rows_;
  std::vector<int> pivots_;
};

HowellForm howell_form(const std::vector<LVec>& rows, int ncols, const RingPtr& ring);

/// Solutions of a homogeneous linear system over W/p^N.
class SolutionModule {
 public:
  explicit SolutionModule(HowellForm basis) : basis_(std::move(basis)) {}
  const HowellForm& basis() const noexcept { return basis_; }
  const std::vector<LVec>& generators() const noexcept { return basis_.rows(); }
  bool contains(const LVec& v) const { return basis_.contains(v); }
  friend bool operator==(const SolutionModule& x, const SolutionModule& y) { return x.basis_ == y.basis_; }

 private:
  HowellForm basis_;
};

/// {x : system * x = 0} for x in (W/p^N)^ncols.
SolutionModule solve_homogeneous(const std::vector<LVec>& system, int ncols, const RingPtr& ring);

LVec vec9(const Mat3L& m);
Mat3L mat_from_vec9(const LVec& v);

/// {U : A U = U A0 and B U = U B0}, i.e. U^{-1} A U = A0 for invertible U.
SolutionModule intertwiners(const Mat3L& a, const Mat3L& b, const Mat3L& a0, const Mat3L& b0);

/// Module generated by the given matrices.
SolutionModule module_of(const std::vector<Mat3L>& gens);

/// First combination sum lift(c_i) g_i with unit determinant, scanning the
/// coefficient tuples c over the residue field in lexicographic order (first
/// generator most significant, elements ordered by index). Generators whose
/// reductions are dependent are dropped first. Throws TooManyGenerators when
/// more than 4 independent reductions remain.
std::optional<Mat3L> unit_det_in_module(const SolutionModule& m);
std::optional<Mat3L> unit_det_in_span(const std::vector<Mat3L>& gens);

}  // namespace optemb
