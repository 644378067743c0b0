#include "optemb/local_ring.hpp"

#include <algorithm>
#include <sstream>

#include "arith.hpp"

namespace optemb {

using namespace detail;

namespace {

FpPoly modulus_fp_poly(const Ring& ring) {
  FpPoly h(ring.modulus_poly().begin(), ring.modulus_poly().begin() + ring.degree());
  h.push_back(1);
  return h;
}

bool fp_has_root(const FpPoly& h, u64 p) {
  // gcd(x^p - x, h) != 1
  FpPoly xp = fp_powmod(FpPoly{0, 1}, p, h, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = submod(xp[1], 1, p);
  fp_trim(xp);
  FpPoly g = fp_gcd(xp, h, p);
  return g.size() > 1;
}

}  // namespace

Ring::Ring(u64 p, int f, int N, Coeffs h, u64 pN) : p_(p), f_(f), N_(N), h_(h), pN_(pN) {}

RingPtr Ring::make(u64 p, int f, int N, std::vector<u64> h_low) {
  if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (f < 1 || f > kMaxDegree)
    throw Error(Errc::InvalidRing, "residue degree must be in [1, 3], got " + std::to_string(f));
  if (N < 1) throw Error(Errc::InvalidRing, "precision must be >= 1");
  u64 pN = 1;
  constexpr u64 kLimit = u64{1} << 62;
  for (int i = 0; i < N; ++i) {
    if (pN > kLimit / p) throw Error(Errc::InvalidRing, "p^N must stay below 2^62");
    pN *= p;
  }
  if (h_low.empty() && f == 1) h_low = {0};
  if (static_cast<int>(h_low.size()) != f)
    throw Error(Errc::InvalidRing, "modulus needs exactly f lower coefficients");
  Coeffs h{};
  for (int i = 0; i < f; ++i) h[i] = h_low[i] % p;
  auto ring = std::shared_ptr<const Ring>(new Ring(p, f, N, h, pN));
  // For degree <= 3 a polynomial without roots is irreducible.
  if (f >= 2 && fp_has_root(modulus_fp_poly(*ring), p))
    throw Error(Errc::ReducibleModulus, "modulus has a root modulo " + std::to_string(p));
  return ring;
}

RingPtr Ring::make_default(u64 p, int f, int N) {
  if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return make(p, f, N, first_irreducible_modulus(p, f));
}

u64 Ring::p_power(int k) const {
  if (k < 0 || k > N_) throw Error(Errc::InvalidParameters, "p-power exponent out of range");
  u64 r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

u64 Ring::residue_field_size() const {
  u64 q = 1;
  for (int i = 0; i < f_; ++i) {
    if (q > (u64{1} << 40) / p_) throw Error(Errc::InvalidParameters, "residue field too large to enumerate");
    q *= p_;
  }
  return q;
}

RingPtr Ring::with_precision(int N) const {
  return make(p_, f_, N, std::vector<u64>(h_.begin(), h_.begin() + f_));
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "Z/" << p_ << "^" << N_;
  if (f_ == 1) return os.str();
  std::ostringstream full;
  full << "(" << os.str() << ")[x]/(x^" << f_;
  for (int i = f_ - 1; i >= 0; --i) {
    if (h_[i] == 0) continue;
    full << "+";
    if (i == 0) {
      full << h_[i];
    } else {
      if (h_[i] != 1) full << h_[i];
      full << "x";
      if (i > 1) full << "^" << i;
    }
  }
  full << ")";
  return full.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(Errc::SpecMismatch, "operands live in different rings");
}

std::vector<u64> first_irreducible_modulus(u64 p, int f) {
  if (f == 1) return {0};
  if (f < 1 || f > Ring::kMaxDegree) throw Error(Errc::InvalidRing, "residue degree must be in [1, 3]");
  for (u64 idx = 0;; ++idx) {
    FpPoly h;
    u64 t = idx;
    for (int i = 0; i < f; ++i) {
      h.push_back(t % p);
      t /= p;
    }
    if (t != 0) break;
    h.push_back(1);
    if (!fp_has_root(h, p)) return std::vector<u64>(h.begin(), h.begin() + f);
  }
  throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

// ---------------------------------------------------------------- Valuation

int Valuation::value() const {
  if (!is_exact()) throw Error(Errc::PrecisionTooLow, "valuation is not determined at this precision");
  return k_;
}

std::string Valuation::to_string() const {
  return is_exact() ? "Exact(" + std::to_string(k_) + ")" : "AtLeastPrecision";
}

// ---------------------------------------------------------------- LocalElem

LocalElem::LocalElem(RingPtr ring, const Coeffs& c) : ring_(std::move(ring)) {
  const u64 m = ring_->modulus();
  for (int i = 0; i < Ring::kMaxDegree; ++i) {
    if (i >= ring_->degree()) {
      if (c[i] != 0) throw Error(Errc::InvalidParameters, "coefficient beyond the residue degree");
      continue;
    }
    c_[i] = c[i] % m;
  }
}

LocalElem LocalElem::from_int(const RingPtr& ring, std::int64_t v) {
  return LocalElem(ring, Coeffs{reduce_signed(v, ring->modulus()), 0, 0});
}

LocalElem LocalElem::from_signed(const RingPtr& ring, const std::vector<std::int64_t>& c) {
  if (static_cast<int>(c.size()) > ring->degree())
    throw Error(Errc::InvalidParameters, "too many coefficients for the residue degree");
  Coeffs out{};
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = reduce_signed(c[i], ring->modulus());
  return LocalElem(ring, out);
}

LocalElem LocalElem::p_power(const RingPtr& ring, int k) {
  if (k < 0) throw Error(Errc::InvalidParameters, "negative p-power");
  if (k >= ring->precision()) return zero(ring);
  return LocalElem(ring, Coeffs{ring->p_power(k), 0, 0});
}

LocalElem LocalElem::random(const RingPtr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ring->modulus() - 1);
  Coeffs c{};
  for (int i = 0; i < ring->degree(); ++i) c[i] = dist(rng);
  return LocalElem(ring, c);
}

LocalElem operator+(const LocalElem& x, const LocalElem& y) {
  require_same_ring(x.ring_, y.ring_);
  const u64 m = x.ring_->modulus();
  LocalElem r = x;
  for (int i = 0; i < x.ring_->degree(); ++i) r.c_[i] = addmod(x.c_[i], y.c_[i], m);
  return r;
}

LocalElem operator-(const LocalElem& x, const LocalElem& y) {
  require_same_ring(x.ring_, y.ring_);
  const u64 m = x.ring_->modulus();
  LocalElem r = x;
  for (int i = 0; i < x.ring_->degree(); ++i) r.c_[i] = submod(x.c_[i], y.c_[i], m);
  return r;
}

LocalElem operator*(const LocalElem& x, const LocalElem& y) {
  require_same_ring(x.ring_, y.ring_);
  const Ring& R = *x.ring_;
  LocalElem r = x;
  r.c_ = gr_mul(x.c_, y.c_, R.modulus(), R.degree(), R.modulus_poly());
  return r;
}

LocalElem operator*(std::int64_t k, const LocalElem& x) {
  const u64 m = x.ring_->modulus();
  const u64 km = reduce_signed(k, m);
  LocalElem r = x;
  for (int i = 0; i < x.ring_->degree(); ++i) r.c_[i] = mulmod(km, x.c_[i], m);
  return r;
}

LocalElem LocalElem::operator-() const {
  LocalElem r = *this;
  const u64 m = ring_->modulus();
  for (int i = 0; i < ring_->degree(); ++i) r.c_[i] = submod(0, c_[i], m);
  return r;
}

bool operator==(const LocalElem& x, const LocalElem& y) {
  require_same_ring(x.ring_, y.ring_);
  return x.c_ == y.c_;
}

LocalElem LocalElem::pow(u64 e) const {
  LocalElem result = one(ring_);
  LocalElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Valuation LocalElem::valuation() const {
  if (is_zero()) return Valuation::at_least_precision();
  int k = ring_->precision();
  for (int i = 0; i < ring_->degree(); ++i)
    if (c_[i] != 0) k = std::min(k, p_valuation(c_[i], ring_->p()));
  return Valuation::exact(k);
}

bool LocalElem::is_unit() const {
  for (int i = 0; i < ring_->degree(); ++i)
    if (c_[i] % ring_->p() != 0) return true;
  return false;
}

LocalElem LocalElem::inverse() const {
  if (!is_unit()) throw Error(Errc::NotAUnit, to_string() + " is not a unit");
  LocalElem u = reduce().inverse().lift();
  const LocalElem two = from_int(ring_, 2);
  // Newton: each step doubles the number of correct p-adic digits.
  for (int correct = 1; correct < ring_->precision(); correct *= 2) u = u * (two - *this * u);
  return u;
}

LocalElem LocalElem::divide_by_p_power(int k) const {
  if (k < 0 || k > ring_->precision()) throw Error(Errc::InvalidParameters, "p-power exponent out of range");
  const u64 pk = ring_->p_power(k);
  Coeffs q{};
  for (int i = 0; i < ring_->degree(); ++i) {
    if (c_[i] % pk != 0) throw Error(Errc::InvalidParameters, "element is not divisible by p^" + std::to_string(k));
    q[i] = c_[i] / pk;
  }
  return LocalElem(ring_, q);
}

LocalElem LocalElem::reduce_mod_p_power(int k) const {
  if (k >= ring_->precision()) return *this;
  const u64 pk = ring_->p_power(k);
  Coeffs q{};
  for (int i = 0; i < ring_->degree(); ++i) q[i] = c_[i] % pk;
  return LocalElem(ring_, q);
}

LocalElem LocalElem::change_precision(const RingPtr& target) const {
  if (target->p() != ring_->p() || target->degree() != ring_->degree() ||
      target->modulus_poly() != ring_->modulus_poly())
    throw Error(Errc::SpecMismatch, "precision change requires the same p, f and modulus");
  return LocalElem(target, c_);
}

ResidueElem LocalElem::reduce() const {
  Coeffs r{};
  for (int i = 0; i < ring_->degree(); ++i) r[i] = c_[i] % ring_->p();
  return ResidueElem(ring_, r);
}

std::string LocalElem::to_string() const {
  std::string s;
  for (int i = 0; i < ring_->degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s;
}

// -------------------------------------------------------------- ResidueElem

ResidueElem::ResidueElem(RingPtr ring, const Coeffs& c) : ring_(std::move(ring)) {
  for (int i = 0; i < Ring::kMaxDegree; ++i) {
    if (i >= ring_->degree()) {
      if (c[i] != 0) throw Error(Errc::InvalidParameters, "coefficient beyond the residue degree");
      continue;
    }
    c_[i] = c[i] % ring_->p();
  }
}

ResidueElem ResidueElem::from_int(const RingPtr& ring, std::int64_t v) {
  return ResidueElem(ring, Coeffs{reduce_signed(v, ring->p()), 0, 0});
}

ResidueElem ResidueElem::from_index(const RingPtr& ring, u64 index) {
  Coeffs c{};
  for (int i = 0; i < ring->degree(); ++i) {
    c[i] = index % ring->p();
    index /= ring->p();
  }
  return ResidueElem(ring, c);
}

ResidueElem ResidueElem::random(const RingPtr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ring->p() - 1);
  Coeffs c{};
  for (int i = 0; i < ring->degree(); ++i) c[i] = dist(rng);
  return ResidueElem(ring, c);
}

u64 ResidueElem::index() const {
  u64 idx = 0;
  for (int i = ring_->degree() - 1; i >= 0; --i) idx = idx * ring_->p() + c_[i];
  return idx;
}

ResidueElem operator+(const ResidueElem& x, const ResidueElem& y) {
  require_same_ring(x.ring_, y.ring_);
  ResidueElem r = x;
  for (int i = 0; i < x.ring_->degree(); ++i) r.c_[i] = addmod(x.c_[i], y.c_[i], x.ring_->p());
  return r;
}

ResidueElem operator-(const ResidueElem& x, const ResidueElem& y) {
  require_same_ring(x.ring_, y.ring_);
  ResidueElem r = x;
  for (int i = 0; i < x.ring_->degree(); ++i) r.c_[i] = submod(x.c_[i], y.c_[i], x.ring_->p());
  return r;
}

ResidueElem operator*(const ResidueElem& x, const ResidueElem& y) {
  require_same_ring(x.ring_, y.ring_);
  const Ring& R = *x.ring_;
  ResidueElem r = x;
  r.c_ = gr_mul(x.c_, y.c_, R.p(), R.degree(), R.modulus_poly());
  return r;
}

ResidueElem operator*(std::int64_t k, const ResidueElem& x) {
  return ResidueElem::from_int(x.ring(), k) * x;
}

ResidueElem ResidueElem::operator-() const { return zero(ring_) - *this; }

bool operator==(const ResidueElem& x, const ResidueElem& y) {
  require_same_ring(x.ring_, y.ring_);
  return x.c_ == y.c_;
}

ResidueElem ResidueElem::pow(u64 e) const {
  ResidueElem result = one(ring_);
  ResidueElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ResidueElem ResidueElem::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in the residue field");
  const u64 p = ring_->p();
  if (ring_->degree() == 1) return ResidueElem(ring_, Coeffs{powmod(c_[0], p - 2, p), 0, 0});
  FpPoly a(c_.begin(), c_.begin() + ring_->degree());
  fp_trim(a);
  FpPoly inv = fp_invmod(a, modulus_fp_poly(*ring_), p);
  Coeffs out{};
  for (std::size_t i = 0; i < inv.size(); ++i) out[i] = inv[i];
  return ResidueElem(ring_, out);
}

LocalElem ResidueElem::lift() const { return LocalElem(ring_, c_); }

std::string ResidueElem::to_string() const {
  std::string s;
  for (int i = 0; i < ring_->degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s;
}

// -------------------------------------------------------------- Polynomials

LocalElem hensel_root(const LocalPoly& poly, const ResidueElem& seed) {
  const RingPtr& ring = seed.ring();
  ResiduePoly reduced;
  for (const auto& c : poly) reduced.push_back(c.reduce());
  if (!poly_eval(reduced, seed).is_zero())
    throw Error(Errc::NotSimpleRoot, "seed is not a root modulo p");
  if (poly_eval(poly_derivative(reduced), seed).is_zero())
    throw Error(Errc::NotSimpleRoot, "seed is a multiple root modulo p");
  const LocalPoly deriv = poly_derivative(poly);
  LocalElem r = seed.lift();
  for (int correct = 1; correct < ring->precision(); correct *= 2)
    r = r - poly_eval(poly, r) * poly_eval(deriv, r).inverse();
  if (!poly_eval(poly, r).is_zero()) throw Error(Errc::NotSimpleRoot, "Newton iteration did not converge");
  return r;
}

ResiduePoly poly_trim(ResiduePoly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

ResiduePoly poly_add(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.empty()) return poly_trim(b);
  if (b.empty()) return poly_trim(a);
  ResiduePoly out(std::max(a.size(), b.size()), ResidueElem::zero(a.front().ring()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(out);
}

ResiduePoly poly_sub(const ResiduePoly& a, const ResiduePoly& b) {
  ResiduePoly nb;
  for (const auto& c : b) nb.push_back(-c);
  return poly_add(a, nb);
}

ResiduePoly poly_mul(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.empty() || b.empty()) return {};
  ResiduePoly out(a.size() + b.size() - 1, ResidueElem::zero(a.front().ring()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

std::pair<ResiduePoly, ResiduePoly> poly_divmod(const ResiduePoly& a, const ResiduePoly& b) {
  ResiduePoly d = poly_trim(b);
  if (d.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  ResiduePoly r = poly_trim(a);
  if (r.size() < d.size()) return {{}, r};
  const ResidueElem lead_inv = d.back().inverse();
  ResiduePoly q(r.size() - d.size() + 1, ResidueElem::zero(d.front().ring()));
  while (!r.empty() && r.size() >= d.size()) {
    ResidueElem c = r.back() * lead_inv;
    std::size_t shift = r.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

ResiduePoly poly_gcd(const ResiduePoly& a, const ResiduePoly& b) {
  ResiduePoly x = poly_trim(a), y = poly_trim(b);
  while (!y.empty()) {
    ResiduePoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    ResidueElem inv = x.back().inverse();
    for (auto& c : x) c *= inv;
  }
  return x;
}

ResiduePoly poly_powmod(const ResiduePoly& base, u64 e, const ResiduePoly& mod) {
  const RingPtr& ring = mod.front().ring();
  ResiduePoly result = poly_divmod(ResiduePoly{ResidueElem::one(ring)}, mod).second;
  ResiduePoly b = poly_divmod(base, mod).second;
  while (e) {
    if (e & 1) result = poly_divmod(poly_mul(result, b), mod).second;
    b = poly_divmod(poly_mul(b, b), mod).second;
    e >>= 1;
  }
  return result;
}

bool poly_is_squarefree(const ResiduePoly& a) {
  ResiduePoly t = poly_trim(a);
  if (t.size() <= 2) return true;
  return poly_gcd(t, poly_derivative(t)).size() == 1;
}

bool poly_has_root(const ResiduePoly& a, const RingPtr& ring) {
  ResiduePoly t = poly_trim(a);
  if (t.empty()) return true;
  if (t.size() == 1) return false;
  if (t.size() == 2) return true;
  // x^{p^f} computed as f successive p-th powers.
  ResiduePoly xq{ResidueElem::zero(ring), ResidueElem::one(ring)};
  for (int i = 0; i < ring->degree(); ++i) xq = poly_powmod(xq, ring->p(), t);
  ResiduePoly diff = poly_sub(xq, ResiduePoly{ResidueElem::zero(ring), ResidueElem::one(ring)});
  return poly_gcd(t, diff).size() > 1;
}

std::vector<ResidueElem> poly_roots(const ResiduePoly& a, const RingPtr& ring) {
  const u64 q = ring->residue_field_size();
  if (q > (u64{1} << 20)) throw Error(Errc::InvalidParameters, "residue field too large for root enumeration");
  std::vector<ResidueElem> roots;
  for (u64 i = 0; i < q; ++i) {
    ResidueElem x = ResidueElem::from_index(ring, i);
    if (poly_eval(a, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

std::string poly_to_string(const ResiduePoly& a) {
  ResiduePoly t = poly_trim(a);
  if (t.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i].is_zero()) continue;
    std::string c = t[i].to_string();
    if (t[i].ring()->degree() > 1) c = "(" + c + ")";
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += c;
    } else {
      if (!(t[i] == ResidueElem::one(t[i].ring()))) s += c + "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace optemb
