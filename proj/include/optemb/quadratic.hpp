#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace optemb {

/// Element r + s sqrt(-23) of Q(sqrt(-23)), with r, s exact rationals.
class QuadElem {
 public:
  static constexpr long kRadicand = -23;

  QuadElem() = default;
  QuadElem(long n) : r_(n) {}  // NOLINT(google-explicit-constructor)
  QuadElem(mpq_class r, mpq_class s) : r_(std::move(r)), s_(std::move(s)) {
    r_.canonicalize();
    s_.canonicalize();
  }
  /// (u + v sqrt(-23)) / d; throws DivisionByZero when d = 0.
  static QuadElem from_parts(const mpz_class& u, const mpz_class& v, const mpz_class& d);
  static QuadElem sqrt_radicand() { return QuadElem(0, 1); }
  /// (1 + sqrt(-23)) / 2, generator of the ring of integers.
  static QuadElem omega() { return QuadElem(mpq_class(1, 2), mpq_class(1, 2)); }

  const mpq_class& rational_part() const noexcept { return r_; }
  const mpq_class& radical_part() const noexcept { return s_; }
  /// Lowest-terms presentation (u + v sqrt(-23)) / d with d > 0.
  mpz_class u() const;
  mpz_class v() const;
  mpz_class d() const;

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y) { return {x.r_ + y.r_, x.s_ + y.s_}; }
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return {x.r_ - y.r_, x.s_ - y.s_}; }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    return {x.r_ * y.r_ + kRadicand * x.s_ * y.s_, x.r_ * y.s_ + x.s_ * y.r_};
  }
  /// Throws DivisionByZero.
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  QuadElem operator-() const { return {-r_, -s_}; }
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.r_ == y.r_ && x.s_ == y.s_; }

  QuadElem conj() const { return {r_, -s_}; }
  mpq_class norm() const { return r_ * r_ - kRadicand * s_ * s_; }
  mpq_class trace() const { return 2 * r_; }
  bool is_zero() const { return r_ == 0 && s_ == 0; }
  /// Member of Z[(1 + sqrt(-23))/2].
  bool is_integral() const;
  /// e.g. "7*sqrt(-23)", "(1+sqrt(-23))/2", "-4".
  std::string to_string() const;

 private:
  mpq_class r_{0}, s_{0};
};

/// 3x3 matrix over Q(sqrt(-23)).
class QMat3 {
 public:
  QMat3() = default;
  static QMat3 identity();
  /// Entries given as rational and radical integer parts.
  static QMat3 from_parts(const std::array<std::array<long, 3>, 3>& rational,
                          const std::array<std::array<long, 3>, 3>& radical);

  QuadElem& operator()(int i, int j) { return e_[i][j]; }
  const QuadElem& operator()(int i, int j) const { return e_[i][j]; }

  friend QMat3 operator+(const QMat3& x, const QMat3& y);
  friend QMat3 operator-(const QMat3& x, const QMat3& y);
  friend QMat3 operator*(const QMat3& x, const QMat3& y);
  friend QMat3 operator*(const QuadElem& s, const QMat3& x);
  friend bool operator==(const QMat3& x, const QMat3& y);

  QuadElem trace() const { return e_[0][0] + e_[1][1] + e_[2][2]; }
  QuadElem det() const;
  bool is_zero() const;
  bool all_integral() const;
  std::string to_string() const;

 private:
  std::array<std::array<QuadElem, 3>, 3> e_{};
};

}  // namespace optemb
