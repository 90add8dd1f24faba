#include "prover/events.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Batch runner for proof scripts"};
  std::vector<std::string> files;
  prover::RunOptions opts;
  app.add_option("files", files, "Event files")->required()->check(CLI::ExistingFile);
  app.add_flag("--trace", opts.trace, "Print EVENT lines for every proof step");
  app.add_flag("--checkpoints", opts.checkpoints, "Print failed subgoals");
  app.add_option("--max-steps", opts.limits.max_steps, "Waterfall step limit per theorem")
      ->check(CLI::PositiveNumber);
  app.add_flag("--stop-on-failure", opts.stop_on_failure, "Stop at the first failure");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  prover::RunReport r = prover::run_files(files, opts);
  std::cout << prover::report(r, opts) << std::flush;
  for (const std::string& d : r.diagnostics) std::cerr << d << "\n";
  return r.exit_code;
}
