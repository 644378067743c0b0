#include "optemb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "arith.hpp"
#include "optemb/embedding.hpp"
#include "optemb/error.hpp"

namespace optemb {

LocalOrder SweepCell::order() const {
  const RingPtr ring = Ring::make_default(p, f, default_precision(a, b));
  if (kind == OrderKind::Split) return LocalOrder::make(CubicAlgebra::split(ring), a, b);
  auto c = [&](u64 i) { return ResidueElem::from_index(ring, i).lift(); };
  return LocalOrder::make(CubicAlgebra::inert(c(minpoly[0]), c(minpoly[1]), c(minpoly[2])), a, b);
}

std::string CellResult::line() const {
  std::string s = "cell p=" + std::to_string(cell.p) + " f=" + std::to_string(cell.f) +
                  " kind=" + std::string(kind_name(cell.kind));
  if (!minpoly.empty()) s += " minpoly=" + minpoly;
  s += " a=" + std::to_string(cell.a) + " b=" + std::to_string(cell.b) + " closed=" + std::to_string(closed) +
       " oracle=" + std::to_string(oracle) + " agree=" + (agree() ? "true" : "false");
  if (!failures.empty()) {
    s += " failed=";
    for (std::size_t i = 0; i < failures.size(); ++i) s += (i ? "," : "") + failures[i];
  }
  return s;
}

std::vector<SweepCell> sweep_cells(const SweepOptions& opts) {
  auto wanted = [&](OrderKind k, int a, int b) {
    if (!opts.kinds.empty() && std::find(opts.kinds.begin(), opts.kinds.end(), k) == opts.kinds.end()) return false;
    return (opts.only_a < 0 || opts.only_a == a) && (opts.only_b < 0 || opts.only_b == b);
  };
  std::vector<SweepCell> cells;
  for (u64 p = 2; p <= opts.pmax; ++p) {
    if (!detail::is_prime_u64(p)) continue;
    for (int f = 1; f <= opts.fmax; ++f) {
      for (int a = 0; a <= opts.abmax; ++a)
        for (int b = 0; a + b <= opts.abmax; ++b)
          if (wanted(OrderKind::Split, a, b)) cells.push_back({p, f, OrderKind::Split, {}, a, b});

      const RingPtr r1 = Ring::make_default(p, f, 1);
      const auto cubics = irreducible_residue_cubics(r1, static_cast<std::size_t>(-1));
      std::vector<std::array<u64, 3>> chosen;
      auto idx = [](const std::array<LocalElem, 3>& c) {
        return std::array<u64, 3>{c[0].reduce().index(), c[1].reduce().index(), c[2].reduce().index()};
      };
      if (!cubics.empty()) chosen.push_back(idx(cubics.front()));
      for (const auto& c : cubics)
        if (!c[2].is_zero() && idx(c) != chosen.front()) {
          chosen.push_back(idx(c));
          break;
        }
      if (chosen.size() == 1 && cubics.size() > 1) chosen.push_back(idx(cubics[1]));
      for (const auto& mp : chosen)
        for (int a = 0; 2 * a <= opts.abmax; ++a)
          for (int b = a; b <= 2 * a && a + b <= opts.abmax; ++b)
            if (wanted(OrderKind::Inert, a, b)) cells.push_back({p, f, OrderKind::Inert, mp, a, b});
    }
  }
  return cells;
}

namespace {

int orbit_index(const EmbeddingPair& pair) { return classify_orbit(pair) == OrbitClass::Regular ? 0 : 1; }

}  // namespace

CellResult run_cell(const SweepCell& cell, int conjugates, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  CellResult res;
  res.cell = cell;
  try {
    const LocalOrder order = cell.order();
    if (cell.kind == OrderKind::Inert) res.minpoly = order.algebra().minpoly_string();
    res.closed = embedding_number(order);

    const RegularPair reg = regular_rep(order);
    const EmbeddingPair regular = EmbeddingPair::make(order, reg.a0, reg.b0);
    const EmbeddingPair special = special_normal_form(order);
    const int reg_orbit = orbit_index(regular), spc_orbit = orbit_index(special);
    if (reg_orbit != 0) res.failures.push_back("regular_not_regular");
    res.oracle = reg_orbit == spc_orbit ? 1 : 2;

    if (res.closed == 1) {
      try {
        res.witness = witness_verifies(order, regular_special_witness(order)) ? "verified" : "failed";
      } catch (const std::logic_error&) {
        res.witness = "failed";
      }
      if (res.witness == "failed") res.failures.push_back("witness");
    } else {
      res.witness = "absent";
    }

    const int disc = disc_exponent(order);
    if (disc != 2 * (cell.a + cell.b) || gram_disc_exponent(order) != Valuation::exact(disc))
      res.failures.push_back("discriminant");

    const Z3Set norms = local_norm_set(order);
    const bool norm_ok = cell.kind == OrderKind::Split
                             ? norms.is_all()
                             : norms == Z3Set::of({0, disc / 2});
    if (!norm_ok) res.failures.push_back("norm_set");

    const bool spc_pattern = is_special(special);
    if (spc_pattern != (spc_orbit == 1) || is_special(regular)) res.failures.push_back("special_pattern");

    if (conjugates > 0) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(cell.p), static_cast<std::uint32_t>(cell.f),
                        static_cast<std::uint32_t>(cell.kind), static_cast<std::uint32_t>(cell.minpoly[0]),
                        static_cast<std::uint32_t>(cell.minpoly[1]), static_cast<std::uint32_t>(cell.minpoly[2]),
                        static_cast<std::uint32_t>(cell.a), static_cast<std::uint32_t>(cell.b)};
      std::mt19937_64 rng(seq);
      bool invariant = true;
      for (int i = 0; i < conjugates && invariant; ++i) {
        const Mat3L u = random_gl3(order.ring(), rng);
        for (const auto* pair : {&regular, &special}) {
          const EmbeddingPair c = pair->conjugated(u);
          const int expect = pair == &regular ? reg_orbit : spc_orbit;
          const bool expect_special = pair == &regular ? false : spc_pattern;
          if (!is_optimal(c) || orbit_index(c) != expect || is_special(c) != expect_special) invariant = false;
        }
      }
      if (!invariant) res.failures.push_back("conjugation_invariance");
    }
  } catch (const std::exception&) {
    res.failures.push_back("exception");
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<CellResult> run_sweep(const SweepOptions& opts) {
  const std::vector<SweepCell> cells = sweep_cells(opts);
  std::vector<CellResult> results(cells.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) results[i] = run_cell(cells[i], opts.conjugates, opts.seed);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace optemb
