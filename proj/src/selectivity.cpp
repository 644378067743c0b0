#include "optemb/selectivity.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "optemb/error.hpp"

namespace optemb {

const PrimeDatum* SelectivityContext::find_prime(const std::string& label) const {
  for (const auto& p : primes)
    if (p.label == label) return &p;
  return nullptr;
}

std::string Verdict::fraction() const {
  if (fraction_num == fraction_den) return "1";
  return std::to_string(fraction_num) + "/" + std::to_string(fraction_den);
}

std::vector<std::string> validate(const SelectivityContext& ctx) {
  std::vector<std::string> findings;
  std::set<std::string> seen;
  for (const auto& p : ctx.primes) {
    if (!seen.insert(p.label).second) findings.push_back("duplicate prime label " + p.label);
    if (p.splitting == Splitting::Split && p.rho != 0)
      findings.push_back("split prime " + p.label + " has nonzero rho");
    if (p.ramified && ctx.K_unramified_everywhere)
      findings.push_back("prime " + p.label + " ramifies in K but K is declared unramified");
  }
  seen.clear();
  for (const auto& t : ctx.types)
    if (!seen.insert(t.label).second) findings.push_back("duplicate type label " + t.label);
  for (const auto& [label, k] : ctx.sqrt_disc)
    if (!ctx.find_prime(label)) findings.push_back("order factor references unknown prime " + label);
  for (const auto& [label, v] : ctx.vhat)
    if (!ctx.find_prime(label)) findings.push_back("vhat references unknown prime " + label);
  return findings;
}

namespace {

const PrimeDatum& resolve(const SelectivityContext& ctx, const std::string& label) {
  const PrimeDatum* p = ctx.find_prime(label);
  if (!p) throw Error(Errc::UnknownPrime, "unknown prime label " + label);
  return *p;
}

bool selective_conditions(const SelectivityContext& ctx, const Z3Set& D) {
  return ctx.K_unramified_everywhere && ctx.algebra_is_matrix && ctx.galois && !D.is_all();
}

}  // namespace

Z3Set selectivity_set(const SelectivityContext& ctx) {
  for (const auto& p : ctx.primes)
    if (p.splitting == Splitting::Split && p.rho != 0)
      throw Error(Errc::InconsistentContext, "split prime " + p.label + " must have rho = 0");
  Z3Set D = Z3Set::of({0});
  for (const auto& [label, k] : ctx.sqrt_disc) D.insert(static_cast<long long>(k) * resolve(ctx, label).rho);
  return D;
}

int vhat_element(const SelectivityContext& ctx) {
  long long acc = 0;
  for (const auto& [label, v] : ctx.vhat) acc += mod3(v) * resolve(ctx, label).rho;
  return mod3(acc);
}

std::vector<std::string> admitted_types(const SelectivityContext& ctx) {
  const Z3Set D = selectivity_set(ctx);
  std::vector<std::string> out;
  if (!selective_conditions(ctx, D)) {
    for (const auto& t : ctx.types) out.push_back(t.label);
    return out;
  }
  const Z3Set allowed = D.shifted(vhat_element(ctx));
  std::vector<const TypeDatum*> hits;
  for (const auto& t : ctx.types)
    if (allowed.contains(t.rho_prime)) hits.push_back(&t);
  std::stable_sort(hits.begin(), hits.end(),
                   [](const TypeDatum* x, const TypeDatum* y) { return mod3(x->rho_prime) < mod3(y->rho_prime); });
  for (const auto* t : hits) out.push_back(t->label);
  return out;
}

Verdict verdict(const SelectivityContext& ctx) {
  if (!ctx.embedding_exists)
    throw Error(Errc::HypothesisViolated, "the order admits no optimal embedding into any maximal order");
  Verdict v;
  v.D = selectivity_set(ctx);
  v.vhat = vhat_element(ctx);
  v.selective = selective_conditions(ctx, v.D);
  if (v.selective) {
    v.fraction_num = v.D.size();
    v.fraction_den = 3;
  }
  v.admitted = admitted_types(ctx);
  return v;
}

// ------------------------------------------------------------------ parsing

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& s, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

int parse_z3(const std::string& s, int line) {
  long long v = parse_int(s, line);
  if (v < 0 || v > 2) fail(line, "expected 0, 1 or 2, got '" + s + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  fail(line, "expected true or false, got '" + s + "'");
}

std::pair<std::string, long long> parse_label_int(const std::string& s, int line) {
  std::istringstream is(s);
  std::string label, num, extra;
  if (!(is >> label >> num) || (is >> extra)) fail(line, "expected '<label> <integer>'");
  return {label, parse_int(num, line)};
}

enum class Section { None, Prime, Order, Algebra, Vhat, Type };

}  // namespace

SelectivityContext parse_context(std::istream& in) {
  SelectivityContext ctx;
  Section section = Section::None;
  std::set<std::string> prime_keys;
  std::set<std::string> type_keys;
  auto close_section = [&](int line) {
    if (section == Section::Prime && (!prime_keys.count("rho") || !prime_keys.count("splitting")))
      fail(line, "prime " + ctx.primes.back().label + " needs rho and splitting");
    if (section == Section::Type && !type_keys.count("rho_prime"))
      fail(line, "type " + ctx.types.back().label + " needs rho_prime");
  };
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(no, "unterminated section header");
      close_section(no);
      std::istringstream hs(line.substr(1, line.size() - 2));
      std::string name, label, extra;
      hs >> name >> label >> extra;
      if (!extra.empty()) fail(no, "section header has trailing text");
      const bool labelled = name == "prime" || name == "type";
      if (labelled == label.empty()) fail(no, labelled ? "section needs a label" : "section takes no label");
      if (name == "prime") {
        section = Section::Prime;
        ctx.primes.push_back(PrimeDatum{label});
        prime_keys.clear();
      } else if (name == "type") {
        section = Section::Type;
        ctx.types.push_back(TypeDatum{label});
        type_keys.clear();
      } else if (name == "order") {
        section = Section::Order;
      } else if (name == "algebra") {
        section = Section::Algebra;
      } else if (name == "vhat") {
        section = Section::Vhat;
      } else {
        fail(no, "unknown section '" + name + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    switch (section) {
      case Section::None:
        fail(no, "key outside of any section");
      case Section::Prime: {
        PrimeDatum& p = ctx.primes.back();
        if (!prime_keys.insert(key).second) fail(no, "repeated key '" + key + "'");
        if (key == "rho") {
          p.rho = parse_z3(value, no);
        } else if (key == "splitting") {
          if (value == "split") p.splitting = Splitting::Split;
          else if (value == "inert") p.splitting = Splitting::Inert;
          else fail(no, "splitting must be split or inert");
        } else if (key == "ramified") {
          p.ramified = parse_bool(value, no);
        } else {
          fail(no, "unknown key '" + key + "' in prime section");
        }
        break;
      }
      case Section::Order: {
        if (key != "factor") fail(no, "unknown key '" + key + "' in order section");
        auto [label, k] = parse_label_int(value, no);
        if (k < 1) fail(no, "factor exponent must be at least 1");
        ctx.sqrt_disc.emplace_back(label, static_cast<int>(k));
        break;
      }
      case Section::Algebra:
        if (key == "matrix") ctx.algebra_is_matrix = parse_bool(value, no);
        else if (key == "unramified_K") ctx.K_unramified_everywhere = parse_bool(value, no);
        else if (key == "embedding_exists") ctx.embedding_exists = parse_bool(value, no);
        else if (key == "galois") ctx.galois = parse_bool(value, no);
        else fail(no, "unknown key '" + key + "' in algebra section");
        break;
      case Section::Vhat:
        if (key != "val") fail(no, "unknown key '" + key + "' in vhat section");
        ctx.vhat.push_back(parse_label_int(value, no));
        break;
      case Section::Type:
        if (!type_keys.insert(key).second) fail(no, "repeated key '" + key + "'");
        if (key != "rho_prime") fail(no, "unknown key '" + key + "' in type section");
        ctx.types.back().rho_prime = parse_z3(value, no);
        break;
    }
  }
  close_section(no);
  return ctx;
}

SelectivityContext read_context(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return parse_context(in);
}

std::string format_context(const SelectivityContext& ctx) {
  std::ostringstream os;
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& p : ctx.primes) {
    os << "[prime " << p.label << "]\n"
       << "rho = " << p.rho << "\n"
       << "splitting = " << (p.splitting == Splitting::Split ? "split" : "inert") << "\n"
       << "ramified = " << b(p.ramified) << "\n\n";
  }
  os << "[order]\n";
  for (const auto& [label, k] : ctx.sqrt_disc) os << "factor = " << label << " " << k << "\n";
  os << "\n[algebra]\n"
     << "matrix = " << b(ctx.algebra_is_matrix) << "\n"
     << "unramified_K = " << b(ctx.K_unramified_everywhere) << "\n"
     << "embedding_exists = " << b(ctx.embedding_exists) << "\n"
     << "galois = " << b(ctx.galois) << "\n\n[vhat]\n";
  for (const auto& [label, v] : ctx.vhat) os << "val = " << label << " " << v << "\n";
  for (const auto& t : ctx.types) os << "\n[type " << t.label << "]\nrho_prime = " << t.rho_prime << "\n";
  return os.str();
}

}  // namespace optemb
