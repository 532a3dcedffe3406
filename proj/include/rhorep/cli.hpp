#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace rhorep::cli {

enum class Command { dims, matrices, twist, split_check, generic, hecke, verify_all };

struct RunConfig {
  Command command = Command::dims;
  int n = 3, l = 2, r = 4;
  std::string rep;    // V|W|N|N20|N21|SR depending on the command
  std::string check;  // hecke: minpoly|order|quotient42
  std::optional<std::string> word;
  std::optional<int> specialize;
  int max_n = 4, max_r = 5;
  std::string output;  // empty: stdout
  bool float_check = false;
};

/// Bad parameters; maps to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  int status = 0;  // 0 ok, 1 internal mismatch, 2 usage error
  nlohmann::json doc;
};

/// Validates the configuration and runs the command; never throws.
Outcome execute(const RunConfig& cfg);

/// execute() plus output: the document goes to cfg.output (atomically) or `out`.
int run(const RunConfig& cfg, std::ostream& out);

/// Worker count for sweeps: RHOREP_THREADS when set and positive, else hardware concurrency.
unsigned thread_budget();

}  // namespace rhorep::cli
