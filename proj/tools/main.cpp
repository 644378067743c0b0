#include <iostream>

#include "commands.hpp"

#ifndef OPTEMB_DATA_DIR
#define OPTEMB_DATA_DIR "data"
#endif

using namespace optemb::cli;

int main(int argc, char** argv) {
  CLI::App app{"Optimal embeddings of cubic local orders into M3"};
  app.require_subcommand(1);

  OrderFlags count_flags;
  auto* count = app.add_subcommand("local-count", "Embedding number, norm-class set and discriminant of a local order");
  add_order_flags(*count, count_flags, true);

  OrderFlags classify_flags;
  std::string matrices;
  auto* classify = app.add_subcommand("classify", "Optimality, special pattern and orbit of a pair (A, B)");
  add_order_flags(*classify, classify_flags, false);
  classify->add_option("--matrices", matrices, "Matrix file holding A then B")->required();

  OrderFlags emit_flags;
  std::string form = "regular";
  long long conj_seed = -1;
  auto* emit = app.add_subcommand("emit-pair", "Write the regular or special pair of an order as a matrix file");
  add_order_flags(*emit, emit_flags, true);
  emit->add_option("--form", form, "regular or special")->capture_default_str();
  emit->add_option("--conjugate-seed", conj_seed, "Conjugate by a random GL3 element drawn from this seed");

  SweepFlags sweep;
  auto* oracle = app.add_subcommand("oracle-compare", "Closed-form embedding numbers against the intertwiner oracle");
  oracle->add_option("--pmax", sweep.pmax, "Largest prime")->capture_default_str();
  oracle->add_option("--fmax", sweep.fmax, "Largest residue degree")->capture_default_str();
  oracle->add_option("--abmax", sweep.abmax, "Bound on a+b")->capture_default_str();
  oracle->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  oracle->add_option("--seed", sweep.seed, "Seed for random conjugations")->capture_default_str();
  oracle->add_option("--conjugates", sweep.conjugates, "Random conjugations per cell")->capture_default_str();
  oracle->add_option("--kind", sweep.kind, "Restrict to split or inert cells");
  oracle->add_option("--a", sweep.a, "Restrict to this a");
  oracle->add_option("--b", sweep.b, "Restrict to this b");
  oracle->add_flag("--timing", sweep.timing, "Append per-cell timings (output is then not reproducible)");

  std::string config;
  bool strict = true;
  auto* sel = app.add_subcommand("selectivity", "Selectivity verdict for a global context file");
  sel->add_option("--config", config, "Context file")->required();
  sel->add_flag("--strict,!--no-strict", strict, "Treat validation findings as failures (default on)");

  int precision = 10, root = 0;
  std::string data_dir = OPTEMB_DATA_DIR;
  auto* example = app.add_subcommand("example", "Check the Q(sqrt(-23)) example end to end");
  example->add_option("--precision", precision, "Completion precision at 2 (at least 8)")->capture_default_str();
  example->add_option("--root", root, "Root of t^2 - t + 6 used for omega: 0 or 1")->capture_default_str();
  example->add_option("--data-dir", data_dir, "Directory with q23_s1.cfg and q23_s2.cfg")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*count) return cmd_local_count(count_flags, std::cout);
    if (*classify) return cmd_classify(classify_flags, matrices, std::cout);
    if (*emit) return cmd_emit_pair(emit_flags, form, conj_seed, std::cout);
    if (*oracle) return cmd_oracle_compare(sweep, std::cout);
    if (*sel) return cmd_selectivity(config, strict, std::cout);
    if (*example) return cmd_example(precision, root, data_dir, std::cout);
  } catch (const std::exception& e) {
    return report_error(e, std::cerr);
  }
  return kInputError;
}
