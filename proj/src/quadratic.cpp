#include "optemb/quadratic.hpp"

#include "optemb/error.hpp"

namespace optemb {

QuadElem QuadElem::from_parts(const mpz_class& u, const mpz_class& v, const mpz_class& d) {
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  return QuadElem(mpq_class(u, d), mpq_class(v, d));
}

mpz_class QuadElem::d() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), r_.get_den_mpz_t(), s_.get_den_mpz_t());
  return l;
}

mpz_class QuadElem::u() const {
  mpq_class t = r_ * d();
  return t.get_num();
}

mpz_class QuadElem::v() const {
  mpq_class t = s_ * d();
  return t.get_num();
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  const mpq_class n = y.norm();
  if (n == 0) throw Error(Errc::DivisionByZero, "division by zero in Q(sqrt(-23))");
  QuadElem t = x * y.conj();
  return QuadElem(t.r_ / n, t.s_ / n);
}

bool QuadElem::is_integral() const {
  // -23 = 1 mod 4: integral iff 2r, 2s are integers of equal parity.
  const mpq_class r2 = 2 * r_, s2 = 2 * s_;
  if (r2.get_den() != 1 || s2.get_den() != 1) return false;
  mpz_class diff = r2.get_num() - s2.get_num();
  return mpz_even_p(diff.get_mpz_t()) != 0;
}

std::string QuadElem::to_string() const {
  const mpz_class uu = u(), vv = v(), dd = d();
  std::string num;
  if (vv == 0) {
    num = uu.get_str();
  } else {
    std::string rad = (vv == 1 ? "" : vv == -1 ? "-" : vv.get_str() + "*") + std::string("sqrt(-23)");
    if (uu == 0) {
      num = rad;
    } else {
      num = uu.get_str() + (vv > 0 ? "+" : "") + rad;
    }
  }
  if (dd == 1) return num;
  const bool compound = uu != 0 && vv != 0;
  return (compound ? "(" + num + ")" : num) + "/" + dd.get_str();
}

QMat3 QMat3::identity() {
  QMat3 m;
  for (int i = 0; i < 3; ++i) m.e_[i][i] = QuadElem(1);
  return m;
}

QMat3 QMat3::from_parts(const std::array<std::array<long, 3>, 3>& rational,
                        const std::array<std::array<long, 3>, 3>& radical) {
  QMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.e_[i][j] = QuadElem(mpq_class(rational[i][j]), mpq_class(radical[i][j]));
  return m;
}

QMat3 operator+(const QMat3& x, const QMat3& y) {
  QMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = x.e_[i][j] + y.e_[i][j];
  return r;
}

QMat3 operator-(const QMat3& x, const QMat3& y) {
  QMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = x.e_[i][j] - y.e_[i][j];
  return r;
}

QMat3 operator*(const QMat3& x, const QMat3& y) {
  QMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.e_[i][j] = x.e_[i][0] * y.e_[0][j] + x.e_[i][1] * y.e_[1][j] + x.e_[i][2] * y.e_[2][j];
  return r;
}

QMat3 operator*(const QuadElem& s, const QMat3& x) {
  QMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e_[i][j] = s * x.e_[i][j];
  return r;
}

bool operator==(const QMat3& x, const QMat3& y) { return x.e_ == y.e_; }

QuadElem QMat3::det() const {
  const auto& m = e_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool QMat3::is_zero() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool QMat3::all_integral() const {
  for (const auto& row : e_)
    for (const auto& x : row)
      if (!x.is_integral()) return false;
  return true;
}

std::string QMat3::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < 3; ++j) s += (j ? " " : "") + e_[i][j].to_string();
  }
  return s + "]";
}

}  // namespace optemb
