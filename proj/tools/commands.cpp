#include "commands.hpp"

#include <random>
#include <sstream>

#include "optemb/embedding.hpp"
#include "optemb/error.hpp"
#include "optemb/matrix_io.hpp"
#include "optemb/q23_example.hpp"
#include "optemb/selectivity.hpp"
#include "optemb/sweep.hpp"

namespace optemb::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::InvalidParameters, "bad integer '" + s + "' in " + what);
}

RingPtr make_ring(const OrderFlags& fl, int N) {
  if (fl.modulus.empty()) return Ring::make_default(fl.p, fl.f, N);
  std::vector<u64> h;
  for (const auto& c : split(fl.modulus, ',')) {
    const long long v = to_int(c, "--modulus");
    if (v < 0) throw Error(Errc::InvalidParameters, "--modulus coefficients must be nonnegative");
    h.push_back(static_cast<u64>(v));
  }
  return Ring::make(fl.p, fl.f, N, h);
}

LocalElem parse_entry(const RingPtr& ring, const std::string& s) {
  std::vector<std::int64_t> c;
  for (const auto& part : split(s, ':')) c.push_back(to_int(part, "--minpoly"));
  if (static_cast<int>(c.size()) > ring->degree())
    throw Error(Errc::InvalidParameters, "--minpoly entry '" + s + "' has more than f coefficients");
  return LocalElem::from_signed(ring, c);
}

LocalOrder build_order(const OrderFlags& fl, const RingPtr& ring) {
  const OrderKind kind = parse_kind(fl.kind);
  if (kind == OrderKind::Split) {
    if (!fl.minpoly.empty()) throw Error(Errc::InvalidParameters, "--minpoly applies to inert orders only");
    return LocalOrder::make(CubicAlgebra::split(ring), fl.a, fl.b);
  }
  std::array<LocalElem, 3> c;
  if (fl.minpoly.empty()) {
    const auto cubics = irreducible_residue_cubics(ring, 1);
    if (cubics.empty()) throw Error(Errc::InvalidParameters, "no irreducible residue cubic");
    c = cubics.front();
  } else {
    const auto parts = split(fl.minpoly, ',');
    if (parts.size() != 3) throw Error(Errc::InvalidParameters, "--minpoly needs three entries a0,a1,a2");
    for (int i = 0; i < 3; ++i) c[i] = parse_entry(ring, parts[i]);
  }
  return LocalOrder::make(CubicAlgebra::inert(c[0], c[1], c[2]), fl.a, fl.b);
}

LocalOrder order_from_flags(const OrderFlags& fl) {
  if (fl.a < 0 || fl.b < 0) throw Error(Errc::InvalidParameters, "exponents a and b must be nonnegative");
  const int N = fl.precision > 0 ? fl.precision : default_precision(fl.a, fl.b);
  return build_order(fl, make_ring(fl, N));
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::ReducibleModulus:
    case Errc::InvalidRing:
    case Errc::SpecMismatch:
    case Errc::InvalidParameters:
    case Errc::PrecisionTooLow:
    case Errc::ParameterOutOfRange:
    case Errc::TooManyGenerators:
    case Errc::UnknownPrime:
    case Errc::InconsistentContext:
    case Errc::ParseError:
      return true;
    default:
      return false;
  }
}

const char* yes(bool b) { return b ? "true" : "false"; }

}  // namespace

void add_order_flags(CLI::App& cmd, OrderFlags& fl, bool with_ring) {
  if (with_ring) {
    cmd.add_option("--p", fl.p, "Residue characteristic")->capture_default_str();
    cmd.add_option("--f", fl.f, "Residue degree (1 to 3)")->capture_default_str();
    cmd.add_option("--modulus", fl.modulus, "Lower coefficients c0,...,c{f-1} of the monic modulus");
    cmd.add_option("--precision", fl.precision, "Precision N (default 2(a+b)+6)");
  }
  cmd.add_option("--kind", fl.kind, "split or inert")->capture_default_str();
  cmd.add_option("--a", fl.a, "Exponent a")->capture_default_str();
  cmd.add_option("--b", fl.b, "Exponent b")->capture_default_str();
  cmd.add_option("--minpoly", fl.minpoly, "a0,a1,a2 with alpha^3 = a2 alpha^2 + a1 alpha + a0");
}

void Report::print(std::ostream& os) const {
  for (const auto& [k, v] : lines) os << k << " = " << v << "\n";
}

int report_error(const std::exception& e, std::ostream& err) {
  err << "error = " << e.what() << "\n";
  if (const auto* oe = dynamic_cast<const Error*>(&e)) return is_input_error(oe->code()) ? kInputError : kCheckFailed;
  return kCheckFailed;
}

int cmd_local_count(const OrderFlags& fl, std::ostream& out) {
  const LocalOrder order = order_from_flags(fl);
  Report r;
  r.add("ring", order.ring()->describe());
  r.add("order", order.describe());
  const int m = embedding_number(order);
  r.add("m", std::to_string(m));
  r.add("norm_set", local_norm_set(order).to_string());
  r.add("disc_exponent", std::to_string(disc_exponent(order)));
  const Valuation gram = gram_disc_exponent(order);
  r.add("gram_disc_exponent", gram.is_exact() ? std::to_string(gram.value()) : gram.to_string());
  r.add("division_m", std::to_string(division_embedding_number(order)));
  bool ok = true;
  if (m == 1) {
    const bool v = witness_verifies(order, regular_special_witness(order));
    r.add("witness", v ? "verified" : "failed");
    ok = v;
  } else {
    r.add("witness", "absent");
  }
  r.print(out);
  return ok ? kOk : kCheckFailed;
}

int cmd_classify(const OrderFlags& fl, const std::string& path, std::ostream& out) {
  const MatrixFile file = read_matrix_file(path);
  if (file.matrices.size() != 2)
    throw Error(Errc::ParseError, "expected exactly 2 matrices (A then B), found " + std::to_string(file.matrices.size()));
  const LocalOrder order = build_order(fl, file.ring);
  Report r;
  r.add("ring", file.ring->describe());
  r.add("order", order.describe());
  try {
    const EmbeddingPair pair = EmbeddingPair::make(order, file.matrices[0], file.matrices[1]);
    r.add("homomorphism", "true");
    const bool optimal = is_optimal(pair);
    r.add("optimal", yes(optimal));
    if (optimal) {
      r.add("special", yes(is_special(pair)));
      r.add("orbit", std::string(orbit_name(classify_orbit(pair))));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotAHomomorphism) throw;
    r.add("homomorphism", "false");
    r.add("reason", e.what());
    r.print(out);
    return kCheckFailed;
  }
  r.print(out);
  return kOk;
}

int cmd_emit_pair(const OrderFlags& fl, const std::string& form, long long conjugate_seed, std::ostream& out) {
  const LocalOrder order = order_from_flags(fl);
  Mat3L a, b;
  if (form == "regular") {
    const RegularPair reg = regular_rep(order);
    a = reg.a0;
    b = reg.b0;
  } else if (form == "special") {
    const EmbeddingPair sp = special_normal_form(order);
    a = sp.a();
    b = sp.b();
  } else {
    throw Error(Errc::InvalidParameters, "--form must be regular or special");
  }
  if (conjugate_seed >= 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(conjugate_seed));
    const Mat3L u = random_gl3(order.ring(), rng);
    a = conjugate(a, u);
    b = conjugate(b, u);
  }
  out << "# " << order.describe() << " " << form << " pair\n" << format_matrix_file(order.ring(), {a, b});
  return kOk;
}

int cmd_oracle_compare(const SweepFlags& fl, std::ostream& out) {
  if (fl.pmax < 2) throw Error(Errc::InvalidParameters, "--pmax must be at least 2");
  if (fl.fmax < 1 || fl.fmax > Ring::kMaxDegree) throw Error(Errc::InvalidParameters, "--fmax must lie in [1, 3]");
  if (fl.abmax < 0) throw Error(Errc::InvalidParameters, "--abmax must be nonnegative");
  if (fl.conjugates < 0) throw Error(Errc::InvalidParameters, "--conjugates must be nonnegative");
  SweepOptions opts;
  opts.pmax = fl.pmax;
  opts.fmax = fl.fmax;
  opts.abmax = fl.abmax;
  opts.jobs = fl.jobs;
  opts.seed = fl.seed;
  opts.conjugates = fl.conjugates;
  if (!fl.kind.empty()) opts.kinds = {parse_kind(fl.kind)};
  opts.only_a = fl.a;
  opts.only_b = fl.b;
  const auto results = run_sweep(opts);
  bool all = true;
  double total = 0;
  for (const auto& c : results) {
    out << c.line();
    if (fl.timing) out << " seconds=" << c.seconds;
    out << "\n";
    all = all && c.agree();
    total += c.seconds;
  }
  out << "cells = " << results.size() << "\n";
  if (fl.timing) out << "seconds = " << total << "\n";
  out << "all_agree = " << yes(all) << "\n";
  return all ? kOk : kCheckFailed;
}

int cmd_selectivity(const std::string& path, bool strict, std::ostream& out) {
  const SelectivityContext ctx = read_context(path);
  const auto findings = validate(ctx);
  for (const auto& f : findings) out << "warn = " << f << "\n";
  if (!findings.empty() && strict) return kCheckFailed;
  const Verdict v = verdict(ctx);
  Report r;
  r.add("D", v.D.to_string());
  r.add("selective", yes(v.selective));
  r.add("fraction", v.fraction());
  r.add("vhat", std::to_string(v.vhat));
  r.add("translated_D", v.D.shifted(v.vhat).to_string());
  std::string adm;
  for (const auto& t : v.admitted) adm += (adm.empty() ? "" : ",") + t;
  r.add("admitted", adm);
  r.print(out);
  return kOk;
}

int cmd_example(int precision, int root, const std::string& data_dir, std::ostream& out) {
  CheckReport all;
  all.append(verify_alpha());
  all.append(verify_beta());
  all.append(verify_s2_local(precision, root));
  const ExampleOutcome ex = run_example(data_dir, precision, root);
  all.append(ex.report);
  out << "precision = " << precision << "\n";
  for (const auto& [k, v] : all.values()) out << k << " = " << v << "\n";
  for (const auto& [k, ok] : all.checks()) out << "check." << k << " = " << (ok ? "pass" : "fail") << "\n";
  const auto failed = all.failed();
  std::string list;
  for (const auto& k : failed) list += (list.empty() ? "" : ",") + k;
  if (!failed.empty()) out << "failed = " << list << "\n";
  out << "all_pass = " << yes(failed.empty()) << "\n";
  return failed.empty() ? kOk : kCheckFailed;
}

}  // namespace optemb::cli
