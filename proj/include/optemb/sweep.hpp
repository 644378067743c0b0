#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optemb/local_order.hpp"

namespace optemb {

/// One (p, f, kind, minpoly, a, b) cell of the closed-form versus oracle
/// comparison.
struct SweepCell {
  u64 p = 2;
  int f = 1;
  OrderKind kind = OrderKind::Split;
  /// Residue cubic coefficients (a0, a1, a2) as residue-field indices; unused
  /// for split cells.
  std::array<u64, 3> minpoly{};
  int a = 0, b = 0;

  /// The order at precision default_precision(a, b), default modulus.
  LocalOrder order() const;
};

struct CellResult {
  SweepCell cell;
  std::string minpoly;  // "a0,a1,a2", empty for split cells
  int closed = 0;       // embedding_number
  int oracle = 0;       // distinct orbits among the regular and special forms
  std::string witness;  // "verified", "absent", or "failed"
  /// Names of failed side checks; empty when every check passed.
  std::vector<std::string> failures;
  double seconds = 0;

  bool agree() const { return closed == oracle && failures.empty(); }
  /// "cell p=2 f=1 kind=split a=1 b=1 closed=2 oracle=2 agree=true"
  std::string line() const;
};

struct SweepOptions {
  u64 pmax = 5;
  int fmax = 2;
  int abmax = 6;
  unsigned jobs = 1;
  /// Random GL3 conjugations per cell for the invariance check.
  int conjugates = 0;
  std::uint64_t seed = 3141;
  /// Optional restrictions; empty means no restriction.
  std::vector<OrderKind> kinds;
  int only_a = -1, only_b = -1;
};

/// Split cells take every a, b >= 0 with a + b <= abmax; inert cells take
/// a <= b <= 2a with a + b <= abmax, for two residue cubics per (p, f): the
/// lexicographically first irreducible one and the first with a2 != 0.
std::vector<SweepCell> sweep_cells(const SweepOptions& opts);

/// Closed form against the intertwiner oracle, plus the proof witness, the
/// discriminant identity, the norm-set identity, the special pattern test and
/// conjugation invariance.
CellResult run_cell(const SweepCell& cell, int conjugates, std::uint64_t seed);

/// Results in the order of sweep_cells, independent of `jobs`.
std::vector<CellResult> run_sweep(const SweepOptions& opts);

}  // namespace optemb
