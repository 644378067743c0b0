#include "optemb/mat3.hpp"

namespace optemb {

Mat3R reduce(const Mat3L& m) {
  Mat3R r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(i, j).reduce();
  return r;
}

Mat3L lift(const Mat3R& m) {
  Mat3L r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(i, j).lift();
  return r;
}

Mat3L inverse(const Mat3L& m) {
  LocalElem d = m.det();
  if (!d.is_unit()) throw Error(Errc::SingularAtPrecision, "determinant " + d.to_string() + " is not a unit");
  return d.inverse() * m.adjugate();
}

Mat3R inverse(const Mat3R& m) {
  ResidueElem d = m.det();
  if (d.is_zero()) throw Error(Errc::SingularAtPrecision, "singular residue matrix");
  return d.inverse() * m.adjugate();
}

Mat3L conjugate(const Mat3L& m, const Mat3L& u) { return inverse(u) * m * u; }
Mat3R conjugate(const Mat3R& m, const Mat3R& u) { return inverse(u) * m * u; }

Mat3L random_gl3(const RingPtr& ring, std::mt19937_64& rng) {
  for (;;) {
    Mat3L u;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u(i, j) = LocalElem::random(ring, rng);
    if (u.det().is_unit()) return u;
  }
}

Mat3R random_gl3_residue(const RingPtr& ring, std::mt19937_64& rng) {
  for (;;) {
    Mat3R u;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u(i, j) = ResidueElem::random(ring, rng);
    if (!u.det().is_zero()) return u;
  }
}

Mat3L change_precision(const Mat3L& m, const RingPtr& target) {
  Mat3L r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(i, j).change_precision(target);
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<RVec>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    ResidueElem inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      ResidueElem factor = rows[k][c];
      for (int j = 0; j < ncols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RVec> residue_kernel(const std::vector<RVec>& rows, int ncols, const RingPtr& ring) {
  std::vector<RVec> work = rows;
  std::vector<int> pivots = rref(work, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RVec v(ncols, ResidueElem::zero(ring));
    v[free] = ResidueElem::one(ring);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int residue_rank(const std::vector<RVec>& rows, int ncols, const RingPtr&) {
  std::vector<RVec> work = rows;
  return static_cast<int>(rref(work, ncols).size());
}

}  // namespace optemb
