#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace optemb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Flags describing one local order.
struct OrderFlags {
  unsigned long long p = 2;
  int f = 1;
  std::string modulus;  // "c0,...,c{f-1}"; empty selects the default
  std::string kind = "split";
  int a = 0, b = 0;
  std::string minpoly;  // "a0,a1,a2"; entries use ':' between coefficients when f > 1
  int precision = 0;    // 0 selects 2(a+b)+6
};

void add_order_flags(CLI::App& cmd, OrderFlags& flags, bool with_ring);

struct Report {
  std::vector<std::pair<std::string, std::string>> lines;
  void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
  void print(std::ostream& os) const;
};

int cmd_local_count(const OrderFlags& flags, std::ostream& out);
int cmd_classify(const OrderFlags& flags, const std::string& matrices, std::ostream& out);
int cmd_emit_pair(const OrderFlags& flags, const std::string& form, long long conjugate_seed, std::ostream& out);

struct SweepFlags {
  unsigned long long pmax = 5;
  int fmax = 2;
  int abmax = 6;
  unsigned jobs = 1;
  unsigned long long seed = 3141;
  int conjugates = 0;
  std::string kind;  // empty: both kinds
  int a = -1, b = -1;
  bool timing = false;
};
int cmd_oracle_compare(const SweepFlags& flags, std::ostream& out);

int cmd_selectivity(const std::string& config, bool strict, std::ostream& out);
int cmd_example(int precision, int root, const std::string& data_dir, std::ostream& out);

/// Prints "error = Name: message" and returns the exit code for the error.
int report_error(const std::exception& e, std::ostream& err);

}  // namespace optemb::cli
