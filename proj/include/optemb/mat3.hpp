#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "optemb/local_ring.hpp"

namespace optemb {

/// Dense 3x3 matrix over LocalElem or ResidueElem, row-major, all entries in
/// one ring.
template <class E>
class Mat3 {
 public:
  Mat3() = default;

  static Mat3 zero(const RingPtr& ring) {
    Mat3 m;
    for (auto& e : m.e_) e = E::zero(ring);
    return m;
  }
  static Mat3 identity(const RingPtr& ring) {
    Mat3 m = zero(ring);
    for (int i = 0; i < 3; ++i) m(i, i) = E::one(ring);
    return m;
  }
  static Mat3 scalar(const E& x) {
    Mat3 m = zero(x.ring());
    for (int i = 0; i < 3; ++i) m(i, i) = x;
    return m;
  }
  static Mat3 from_ints(const RingPtr& ring, const std::array<std::array<std::int64_t, 3>, 3>& v) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = E::from_int(ring, v[i][j]);
    return m;
  }
  static Mat3 from_entries(const std::array<E, 9>& entries) {
    Mat3 m;
    m.e_ = entries;
    for (const auto& e : entries) require_same_ring(e.ring(), entries[0].ring());
    return m;
  }

  E& operator()(int i, int j) { return e_[3 * i + j]; }
  const E& operator()(int i, int j) const { return e_[3 * i + j]; }
  const std::array<E, 9>& entries() const noexcept { return e_; }
  const RingPtr& ring() const noexcept { return e_[0].ring(); }

  friend Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = x.e_[k] + y.e_[k];
    return r;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = x.e_[k] - y.e_[k];
    return r;
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
    return r;
  }
  friend Mat3 operator*(const E& s, const Mat3& x) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = s * x.e_[k];
    return r;
  }
  friend Mat3 operator*(std::int64_t s, const Mat3& x) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = s * x.e_[k];
    return r;
  }
  Mat3 operator-() const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.e_[k] = -e_[k];
    return r;
  }
  friend bool operator==(const Mat3& x, const Mat3& y) {
    for (int k = 0; k < 9; ++k)
      if (!(x.e_[k] == y.e_[k])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : e_)
      if (!e.is_zero()) return false;
    return true;
  }

  E trace() const { return e_[0] + e_[4] + e_[8]; }

  E det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  Mat3 adjugate() const {
    const Mat3& m = *this;
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        // cofactor of (j, i)
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        r(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
    }
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Mat3 pow(unsigned e) const {
    Mat3 r = identity(ring());
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  std::array<E, 3> column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
  std::array<E, 3> apply(const std::array<E, 3>& v) const {
    std::array<E, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    return out;
  }
  static Mat3 from_columns(const std::array<E, 3>& c0, const std::array<E, 3>& c1, const std::array<E, 3>& c2) {
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
      m(i, 0) = c0[i];
      m(i, 1) = c1[i];
      m(i, 2) = c2[i];
    }
    return m;
  }

  /// Rows joined by ';', entries by ' '.
  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
      if (i) s += "; ";
      for (int j = 0; j < 3; ++j) {
        if (j) s += " ";
        s += (*this)(i, j).to_string();
      }
    }
    return s + "]";
  }

 private:
  std::array<E, 9> e_;
};

using Mat3L = Mat3<LocalElem>;
using Mat3R = Mat3<ResidueElem>;

Mat3R reduce(const Mat3L& m);
Mat3L lift(const Mat3R& m);
/// Throws SingularAtPrecision unless det is a unit.
Mat3L inverse(const Mat3L& m);
/// Throws SingularAtPrecision on a singular matrix.
Mat3R inverse(const Mat3R& m);
/// U^{-1} M U.
Mat3L conjugate(const Mat3L& m, const Mat3L& u);
Mat3R conjugate(const Mat3R& m, const Mat3R& u);
/// Uniform entries, resampled until the determinant is a unit.
Mat3L random_gl3(const RingPtr& ring, std::mt19937_64& rng);
Mat3R random_gl3_residue(const RingPtr& ring, std::mt19937_64& rng);
/// Same coefficients read in a ring of another precision.
Mat3L change_precision(const Mat3L& m, const RingPtr& target);

// Linear algebra over the residue field on explicit row lists.
using RVec = std::vector<ResidueElem>;
/// Basis of {x : rows * x = 0}, with x of length ncols.
std::vector<RVec> residue_kernel(const std::vector<RVec>& rows, int ncols, const RingPtr& ring);
int residue_rank(const std::vector<RVec>& rows, int ncols, const RingPtr& ring);

}  // namespace optemb
