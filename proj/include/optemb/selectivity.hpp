#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "optemb/z3.hpp"

namespace optemb {

enum class Splitting { Split, Inert };

struct PrimeDatum {
  std::string label;
  int rho = 0;  // Artin image in Z/3; 0 is the identity
  Splitting splitting = Splitting::Inert;
  bool ramified = false;
};

struct TypeDatum {
  std::string label;
  int rho_prime = 0;
};

/// Declarative global data for one order S in F with cubic K/F.
struct SelectivityContext {
  std::vector<PrimeDatum> primes;
  /// Exact exponents k with p^k || sqrt(disc S).
  std::vector<std::pair<std::string, int>> sqrt_disc;
  bool algebra_is_matrix = true;
  bool K_unramified_everywhere = true;
  bool embedding_exists = true;
  /// False for non-Galois K/F, which is never selective.
  bool galois = true;
  std::vector<std::pair<std::string, long long>> vhat;
  std::vector<TypeDatum> types;

  /// nullptr when absent.
  const PrimeDatum* find_prime(const std::string& label) const;
};

struct Verdict {
  Z3Set D;
  bool selective = false;
  int fraction_num = 1, fraction_den = 1;
  int vhat = 0;
  std::vector<std::string> admitted;

  /// "1/3", "2/3" or "1".
  std::string fraction() const;
};

/// Findings: split primes with nonzero rho, duplicate labels, unresolved
/// references, and ramified primes under an unramified K.
std::vector<std::string> validate(const SelectivityContext& ctx);

/// {0} together with k * rho(p) over sqrt_disc. Throws InconsistentContext
/// for a split prime with rho != 0 and UnknownPrime for unresolved labels.
Z3Set selectivity_set(const SelectivityContext& ctx);

/// sum of valuation * rho(p) over vhat, mod 3. Throws UnknownPrime.
int vhat_element(const SelectivityContext& ctx);

/// Types with rho' in vhat + D, ordered by (rho', declaration order); every
/// type, in declaration order, when the context is not selective.
std::vector<std::string> admitted_types(const SelectivityContext& ctx);

/// Throws HypothesisViolated when embedding_exists is false.
Verdict verdict(const SelectivityContext& ctx);

/// Line-oriented grammar with sections [prime L], [order], [algebra],
/// [vhat], [type L]. Throws ParseError with the line number.
SelectivityContext parse_context(std::istream& in);
SelectivityContext read_context(const std::string& path);
std::string format_context(const SelectivityContext& ctx);

}  // namespace optemb
