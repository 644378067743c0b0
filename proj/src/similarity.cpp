#include "optemb/similarity.hpp"

#include <stdexcept>

namespace optemb {

namespace {

using Vec3 = std::array<ResidueElem, 3>;

Vec3 unit_vector(const RingPtr& ring, int k) {
  Vec3 v{ResidueElem::zero(ring), ResidueElem::zero(ring), ResidueElem::zero(ring)};
  v[k] = ResidueElem::one(ring);
  return v;
}

Vec3 axpy(const ResidueElem& s, const Vec3& x, const Vec3& y) {
  return {s * x[0] + y[0], s * x[1] + y[1], s * x[2] + y[2]};
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::vector<RVec> as_rows(const Mat3R& m) {
  std::vector<RVec> rows;
  for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

std::vector<Vec3> kernel3(const Mat3R& m) {
  std::vector<Vec3> out;
  for (const auto& v : residue_kernel(as_rows(m), 3, m.ring())) out.push_back({v[0], v[1], v[2]});
  return out;
}

bool independent(const std::vector<Vec3>& vs) {
  std::vector<RVec> rows;
  for (const auto& v : vs) rows.push_back({v[0], v[1], v[2]});
  return residue_rank(rows, 3, vs.front()[0].ring()) == static_cast<int>(vs.size());
}

Mat3R companion_conjugator(const Mat3R& m, const CompanionClass& c) {
  // V = (v1, v2, v3) with v3 = w, v2 = Mw - zw, v1 = Mv2 - yw.
  const RingPtr& ring = m.ring();
  const u64 q = ring->residue_field_size();
  auto try_vector = [&](const Vec3& w, Mat3R& out) {
    Vec3 v2 = axpy(-c.z, w, m.apply(w));
    Vec3 v1 = axpy(-c.y, w, m.apply(v2));
    out = Mat3R::from_columns(v1, v2, w);
    return !out.det().is_zero();
  };
  Mat3R v;
  for (int k = 2; k >= 0; --k)
    if (try_vector(unit_vector(ring, k), v)) return v;
  for (u64 i = 0; i < q; ++i)
    for (u64 j = 0; j < q; ++j)
      for (u64 k = 0; k < q; ++k) {
        Vec3 w{ResidueElem::from_index(ring, i), ResidueElem::from_index(ring, j), ResidueElem::from_index(ring, k)};
        if (try_vector(w, v)) return v;
      }
  throw std::logic_error("no cyclic vector for a matrix with cubic minimal polynomial");
}

}  // namespace

std::string class_name(const SimilarityClass& c) {
  switch (c.index()) {
    case 0: return "Scalar";
    case 1: return "TwoEigen";
    case 2: return "Jordan";
    default: return "Companion";
  }
}

std::string to_string(const SimilarityClass& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return "Scalar(" + v.x.to_string() + ")";
        if constexpr (std::is_same_v<T, TwoEigenClass>)
          return "TwoEigen(" + v.x.to_string() + ";" + v.y.to_string() + ")";
        if constexpr (std::is_same_v<T, JordanClass>) return "Jordan(" + v.x.to_string() + ")";
        if constexpr (std::is_same_v<T, CompanionClass>)
          return "Companion(" + v.x.to_string() + ";" + v.y.to_string() + ";" + v.z.to_string() + ")";
      },
      c);
}

bool operator==(const SimilarityClass& a, const SimilarityClass& b) {
  if (a.index() != b.index()) return false;
  return canonical_matrix(a) == canonical_matrix(b);
}

Mat3R canonical_matrix(const SimilarityClass& c) {
  return std::visit(
      [](const auto& v) -> Mat3R {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ScalarClass>) {
          return Mat3R::scalar(v.x);
        } else if constexpr (std::is_same_v<T, TwoEigenClass>) {
          Mat3R m = Mat3R::scalar(v.x);
          m(2, 2) = v.y;
          return m;
        } else if constexpr (std::is_same_v<T, JordanClass>) {
          Mat3R m = Mat3R::scalar(v.x);
          m(1, 2) = ResidueElem::one(v.x.ring());
          return m;
        } else {
          const RingPtr& ring = v.x.ring();
          Mat3R m = Mat3R::zero(ring);
          m(0, 1) = ResidueElem::one(ring);
          m(1, 2) = ResidueElem::one(ring);
          m(2, 0) = v.x;
          m(2, 1) = v.y;
          m(2, 2) = v.z;
          return m;
        }
      },
      c);
}

ResiduePoly char_poly(const Mat3R& m) {
  const RingPtr& ring = m.ring();
  ResidueElem minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                       m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  return {-m.det(), minors, -m.trace(), ResidueElem::one(ring)};
}

ResiduePoly min_poly(const Mat3R& m) {
  const RingPtr& ring = m.ring();
  std::vector<Mat3R> powers{Mat3R::identity(ring)};
  for (int d = 1; d <= 3; ++d) {
    powers.push_back(powers.back() * m);
    // Columns are vec(M^0..M^d); a kernel vector is a dependency.
    std::vector<RVec> rows(9);
    for (int k = 0; k < 9; ++k)
      for (int i = 0; i <= d; ++i) rows[k].push_back(powers[i].entries()[k]);
    auto ker = residue_kernel(rows, d + 1, ring);
    if (ker.empty()) continue;
    // d is minimal, so the kernel is a line with nonzero top coefficient.
    RVec v = ker.front();
    ResidueElem inv = v[d].inverse();
    for (auto& c : v) c *= inv;
    return v;
  }
  throw std::logic_error("minimal polynomial degree exceeds 3");
}

Classification residue_classify(const Mat3R& m) {
  const RingPtr& ring = m.ring();
  ResiduePoly mp = min_poly(m);
  const int deg = static_cast<int>(mp.size()) - 1;
  if (deg == 1) return {ScalarClass{-mp[0]}, Mat3R::identity(ring)};
  if (deg == 3) {
    ResiduePoly cp = char_poly(m);
    CompanionClass c{-cp[0], -cp[1], -cp[2]};
    return {c, companion_conjugator(m, c)};
  }
  // Degree 2: the minimal polynomial splits as (t-x)(t-y) with x the
  // eigenvalue of multiplicity 2, so Tr = 2x + y and x + y = -c1.
  const ResidueElem x = m.trace() + mp[1];
  const ResidueElem y = -mp[1] - x;
  const Mat3R nx = m - Mat3R::scalar(x);
  if (!(x == y)) {
    auto kx = kernel3(nx);
    auto ky = kernel3(m - Mat3R::scalar(y));
    if (kx.size() != 2 || ky.size() != 1) throw std::logic_error("eigenspace dimensions inconsistent");
    return {TwoEigenClass{x, y}, Mat3R::from_columns(kx[0], kx[1], ky[0])};
  }
  // Jordan: N = M - x has rank 1 and N^2 = 0. v3 with N v3 != 0, v2 = N v3,
  // v1 in ker N independent of v2.
  Vec3 v3{};
  for (int k = 0; k < 3; ++k) {
    v3 = unit_vector(ring, k);
    if (!is_zero(nx.apply(v3))) break;
  }
  Vec3 v2 = nx.apply(v3);
  for (const auto& v1 : kernel3(nx)) {
    if (independent({v1, v2})) return {JordanClass{x}, Mat3R::from_columns(v1, v2, v3)};
  }
  throw std::logic_error("Jordan conjugator construction failed");
}

}  // namespace optemb
