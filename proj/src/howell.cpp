#include "optemb/howell.hpp"

#include <algorithm>

namespace optemb {

namespace {

bool vec_is_zero(const LVec& v) {
  return std::all_of(v.begin(), v.end(), [](const LocalElem& x) { return x.is_zero(); });
}

void axpy_inplace(LVec& y, const LocalElem& s, const LVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= s * x[i];
}

LVec scale(const LocalElem& s, const LVec& x) {
  LVec out = x;
  for (auto& e : out) e = s * e;
  return out;
}

}  // namespace

HowellForm::HowellForm(RingPtr ring, int ncols, std::vector<LVec> rows, std::vector<int> pivot_cols)
    : ring_(std::move(ring)), ncols_(ncols), rows_(std::move(rows)), pivots_(std::move(pivot_cols)) {}

int HowellForm::pivot_valuation(std::size_t i) const { return rows_.at(i)[pivots_.at(i)].valuation().value(); }

bool HowellForm::contains(const LVec& v) const {
  if (static_cast<int>(v.size()) != ncols_) return false;
  LVec r = v;
  std::size_t next = 0;
  for (int c = 0; c < ncols_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      if (!r[c].is_zero()) {
        int k = pivot_valuation(next);
        if (r[c].valuation().value() < k) return false;
        axpy_inplace(r, r[c].divide_by_p_power(k), rows_[next]);
      }
      ++next;
    } else if (!r[c].is_zero()) {
      return false;
    }
  }
  return true;
}

bool operator==(const HowellForm& x, const HowellForm& y) {
  if (x.ncols_ != y.ncols_ || x.pivots_ != y.pivots_) return false;
  for (std::size_t i = 0; i < x.rows_.size(); ++i)
    for (int c = 0; c < x.ncols_; ++c)
      if (!(x.rows_[i][c] == y.rows_[i][c])) return false;
  return true;
}

HowellForm howell_form(const std::vector<LVec>& rows, int ncols, const RingPtr& ring) {
  std::vector<LVec> pool;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ncols) throw Error(Errc::InvalidParameters, "row length mismatch");
    if (!vec_is_zero(r)) pool.push_back(r);
  }
  std::vector<LVec> out;
  std::vector<int> pivots;
  const int N = ring->precision();
  for (int c = 0; c < ncols && !pool.empty(); ++c) {
    // Invariant: every pool row vanishes on columns < c.
    std::size_t best = pool.size();
    int best_k = N;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i][c].is_zero()) continue;
      int k = pool[i][c].valuation().value();
      if (k < best_k) {
        best_k = k;
        best = i;
      }
    }
    if (best == pool.size()) continue;
    LVec piv = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    piv = scale(piv[c].divide_by_p_power(best_k).inverse(), piv);
    for (auto& r : pool)
      if (!r[c].is_zero()) axpy_inplace(r, r[c].divide_by_p_power(best_k), piv);
    std::erase_if(pool, vec_is_zero);
    if (best_k > 0) {
      LVec ann = scale(LocalElem::p_power(ring, N - best_k), piv);
      if (!vec_is_zero(ann)) pool.push_back(std::move(ann));
    }
    out.push_back(std::move(piv));
    pivots.push_back(c);
  }
  for (std::size_t j = 0; j < out.size(); ++j) {
    const int c = pivots[j];
    const int k = out[j][c].valuation().value();
    for (std::size_t i = 0; i < j; ++i) {
      const LocalElem& e = out[i][c];
      LocalElem excess = e - e.reduce_mod_p_power(k);
      if (!excess.is_zero()) axpy_inplace(out[i], excess.divide_by_p_power(k), out[j]);
    }
  }
  return HowellForm(ring, ncols, std::move(out), std::move(pivots));
}

SolutionModule solve_homogeneous(const std::vector<LVec>& system, int ncols, const RingPtr& ring) {
  // Howell form of [S^T | I]: rows vanishing on the S^T part span the kernel.
  const int m = static_cast<int>(system.size());
  std::vector<LVec> aug;
  for (int j = 0; j < ncols; ++j) {
    LVec row(m + ncols, LocalElem::zero(ring));
    for (int i = 0; i < m; ++i) row[i] = system[i].at(j);
    row[m + j] = LocalElem::one(ring);
    aug.push_back(std::move(row));
  }
  HowellForm h = howell_form(aug, m + ncols, ring);
  std::vector<LVec> kernel;
  for (std::size_t i = 0; i < h.rows().size(); ++i)
    if (h.pivot_columns()[i] >= m) kernel.emplace_back(h.rows()[i].begin() + m, h.rows()[i].end());
  return SolutionModule(howell_form(kernel, ncols, ring));
}

LVec vec9(const Mat3L& m) { return LVec(m.entries().begin(), m.entries().end()); }

Mat3L mat_from_vec9(const LVec& v) {
  std::array<LocalElem, 9> e;
  std::copy(v.begin(), v.end(), e.begin());
  return Mat3L::from_entries(e);
}

SolutionModule intertwiners(const Mat3L& a, const Mat3L& b, const Mat3L& a0, const Mat3L& b0) {
  const RingPtr& ring = a.ring();
  require_same_ring(ring, b.ring());
  require_same_ring(ring, a0.ring());
  require_same_ring(ring, b0.ring());
  std::vector<LVec> system;
  for (const auto* pair : {&a, &b}) {
    const Mat3L& x = *pair;
    const Mat3L& x0 = pair == &a ? a0 : b0;
    // (X U - U X0)_{ij} = sum_k X_ik U_kj - sum_k U_ik X0_kj
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        LVec row(9, LocalElem::zero(ring));
        for (int k = 0; k < 3; ++k) {
          row[3 * k + j] += x(i, k);
          row[3 * i + k] -= x0(k, j);
        }
        system.push_back(std::move(row));
      }
    }
  }
  return solve_homogeneous(system, 9, ring);
}

SolutionModule module_of(const std::vector<Mat3L>& gens) {
  if (gens.empty()) throw Error(Errc::InvalidParameters, "module needs at least one generator");
  std::vector<LVec> rows;
  for (const auto& g : gens) rows.push_back(vec9(g));
  return SolutionModule(howell_form(rows, 9, gens.front().ring()));
}

namespace {

// Residue field arithmetic on element indices.
class FieldOps {
 public:
  explicit FieldOps(RingPtr ring) : ring_(std::move(ring)), p_(ring_->p()), q_(ring_->residue_field_size()) {
    if (ring_->degree() > 1 && q_ <= 256) {
      add_.resize(q_ * q_);
      mul_.resize(q_ * q_);
      for (u64 x = 0; x < q_; ++x) {
        ResidueElem ex = ResidueElem::from_index(ring_, x);
        for (u64 y = 0; y < q_; ++y) {
          ResidueElem ey = ResidueElem::from_index(ring_, y);
          add_[x * q_ + y] = static_cast<std::uint32_t>((ex + ey).index());
          mul_[x * q_ + y] = static_cast<std::uint32_t>((ex * ey).index());
        }
      }
      for (u64 x = 0; x < q_; ++x) neg_.push_back(static_cast<std::uint32_t>((-ResidueElem::from_index(ring_, x)).index()));
    }
  }

  u64 size() const { return q_; }
  u64 add(u64 x, u64 y) const {
    if (ring_->degree() == 1) return (x + y) % p_;
    if (!add_.empty()) return add_[x * q_ + y];
    return (ResidueElem::from_index(ring_, x) + ResidueElem::from_index(ring_, y)).index();
  }
  u64 sub(u64 x, u64 y) const {
    if (ring_->degree() == 1) return (x + p_ - y) % p_;
    if (!add_.empty()) return add_[x * q_ + neg_[y]];
    return (ResidueElem::from_index(ring_, x) - ResidueElem::from_index(ring_, y)).index();
  }
  u64 mul(u64 x, u64 y) const {
    if (ring_->degree() == 1) return static_cast<u64>(static_cast<unsigned __int128>(x) * y % p_);
    if (!mul_.empty()) return mul_[x * q_ + y];
    return (ResidueElem::from_index(ring_, x) * ResidueElem::from_index(ring_, y)).index();
  }

 private:
  RingPtr ring_;
  u64 p_, q_;
  std::vector<std::uint32_t> add_, mul_, neg_;
};

}  // namespace

std::optional<Mat3L> unit_det_in_span(const std::vector<Mat3L>& gens) {
  if (gens.empty()) return std::nullopt;
  const RingPtr& ring = gens.front().ring();
  std::vector<Mat3L> kept;
  std::vector<RVec> kept_rows;
  for (const auto& g : gens) {
    RVec row;
    for (const auto& e : g.entries()) row.push_back(e.reduce());
    kept_rows.push_back(row);
    if (residue_rank(kept_rows, 9, ring) == static_cast<int>(kept_rows.size())) {
      kept.push_back(g);
    } else {
      kept_rows.pop_back();
    }
  }
  const int d = static_cast<int>(kept.size());
  if (d > 4)
    throw Error(Errc::TooManyGenerators,
                std::to_string(d) + " residue-independent generators; at most 4 are searched");
  if (d == 0) return std::nullopt;

  const FieldOps F(ring);
  const u64 q = F.size();
  std::vector<std::array<u64, 9>> g(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < 9; ++k) g[i][k] = kept_rows[i][k].index();

  // Determinant is homogeneous, so only tuples whose first nonzero entry is 1
  // are tested. In lexicographic order those with more leading zeros come
  // first, and each is the lexicographically least of its projective class.
  std::vector<u64> c(d);
  for (int lead = d - 1; lead >= 0; --lead) {
    const int tail = d - 1 - lead;
    u64 count = 1;
    for (int i = 0; i < tail; ++i) count *= q;
    for (u64 t = 0; t < count; ++t) {
      std::fill(c.begin(), c.end(), 0);
      c[lead] = 1;
      u64 rest = t;
      for (int i = d - 1; i > lead; --i) {
        c[i] = rest % q;
        rest /= q;
      }
      std::array<u64, 9> m{};
      for (int i = lead; i < d; ++i) {
        if (c[i] == 0) continue;
        for (int k = 0; k < 9; ++k) m[k] = F.add(m[k], F.mul(c[i], g[i][k]));
      }
      u64 det = F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7])));
      det = F.sub(det, F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6]))));
      det = F.add(det, F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6]))));
      if (det == 0) continue;
      Mat3L u = Mat3L::zero(ring);
      for (int i = 0; i < d; ++i)
        if (c[i] != 0) u = u + ResidueElem::from_index(ring, c[i]).lift() * kept[i];
      return u;
    }
  }
  return std::nullopt;
}

std::optional<Mat3L> unit_det_in_module(const SolutionModule& m) {
  std::vector<Mat3L> gens;
  for (const auto& v : m.generators()) gens.push_back(mat_from_vec9(v));
  return unit_det_in_span(gens);
}

}  // namespace optemb
