// Command-line front end; a thin wrapper over the C interface.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "galois/galois.h"

namespace {

struct Flags {
  std::string target;
  std::optional<std::string> subject;
  unsigned alphabet = 2;
  unsigned max_len = 5;
  std::optional<std::string> pred;
  std::optional<std::uint64_t> n;
  std::optional<std::string> input;
  std::string format = "text";
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
  bool timing = false;
};

void add_common(CLI::App* cmd, Flags& f, bool oracle) {
  cmd->add_option("--target", f.target, "order, spec, law or pair name")->required();
  cmd->add_option("--alphabet,-k", f.alphabet, "alphabet size k (elements 0..k-1)")->check(CLI::Range(1, 16));
  cmd->add_option("--max-len,-L", f.max_len, "maximum sequence length L");
  cmd->add_option("--pred", f.pred, "predicate bitmask, e.g. 0b01 (rightmost bit = element 0)");
  cmd->add_option("--n", f.n, "bound for take");
  cmd->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  if (oracle) cmd->add_option("--input", f.input, "comma-separated elements; zip takes \"xs;ys\"");
  cmd->add_option("--budget", f.budget, "cap on projected relation evaluations");
  cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--timing", f.timing, "report elapsed time (makes output run-dependent)");
}

int fail_usage(const std::string& message) {
  std::cerr << "galois: " << message << '\n';
  return 2;
}

#define TRY(call)                                                   \
  do {                                                              \
    if ((call) != GALOIS_OK) return fail_usage(galois_last_error()); \
  } while (0)

int execute(const std::string& command, const Flags& f) {
  galois_config* cfg = nullptr;
  TRY(galois_config_new(&cfg));
  struct Guard {
    galois_config* c;
    ~Guard() { galois_config_free(c); }
  } guard{cfg};

  TRY(galois_config_set_command(cfg, command.c_str()));
  TRY(galois_config_set_target(cfg, f.target.c_str()));
  TRY(galois_config_set_universe(cfg, f.alphabet, f.max_len));
  if (f.subject) TRY(galois_config_set_subject(cfg, f.subject->c_str()));
  if (f.pred) TRY(galois_config_set_pred(cfg, f.pred->c_str()));
  if (f.n) TRY(galois_config_set_n(cfg, *f.n));
  if (f.input) TRY(galois_config_set_input(cfg, f.input->c_str()));
  TRY(galois_config_set_format(cfg, f.format == "json" ? GALOIS_FORMAT_JSON : GALOIS_FORMAT_TEXT));
  TRY(galois_config_set_budget(cfg, f.budget));
  TRY(galois_config_set_workers(cfg, f.workers));
  TRY(galois_config_set_timing(cfg, f.timing ? 1 : 0));

  galois_report* report = nullptr;
  TRY(galois_run(cfg, &report));
  const int code = galois_report_exit_code(report);
  std::fputs(galois_report_output(report), stdout);
  if (*galois_report_error(report) != '\0') std::cerr << "galois: " << galois_report_error(report) << '\n';
  galois_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive small-scope checker for Galois connections over finite sequences", "galois"};
  app.set_version_flag("--version", std::string(galois_version()));
  app.require_subcommand(1);

  Flags flags;
  const char* commands[] = {"check-order", "check-spec", "check-gc", "check-laws", "find-counterexample", "oracle"};
  for (const char* name : commands) {
    auto* cmd = app.add_subcommand(name);
    add_common(cmd, flags, std::string(name) == "oracle");
    if (std::string(name) == "check-laws") cmd->add_option("--subject", flags.subject, "restrict to one subject");
  }
  app.add_subcommand("list-targets", "print registered orders, specs, laws and pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto* chosen = app.get_subcommands().front();
  if (chosen->get_name() == "list-targets") {
    std::fputs(galois_list_targets(), stdout);
    return 0;
  }
  return execute(chosen->get_name(), flags);
}
