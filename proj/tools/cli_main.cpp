#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corings/commands.hpp"

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Options {
  std::string field = "q";
  std::uint64_t seed = 1;
  std::uint64_t budget = 64;
  std::uint64_t enum_cap = 1000000;
  std::string format = "text";
  std::string input;
  std::string command;
  std::vector<std::string> targets;
};

template <class F>
int run_session(F f, const Options& opt) {
  using namespace corings;
  SessionConfig cfg{opt.seed, opt.budget, opt.enum_cap};
  Registry<F> reg{f, {}, {}, {}};
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) {
      std::cerr << "error: cannot open '" << opt.input << "'\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      reg = parse_input(f, buf.str());
    } catch (const ParseError& ex) {
      std::cerr << "input error " << ex.what() << "\n";
      return 1;
    }
  }
  std::vector<Command> cmds;
  if (!opt.command.empty())
    cmds.push_back(Command{opt.command, opt.targets});
  else
    cmds = reg.commands;
  std::vector<CommandResult> results;
  try {
    results = run_commands(cmds, reg, cfg);
  } catch (const CommandError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  auto fmt = opt.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
  std::cout << emit_report(results, fmt, f, cfg);
  return exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact checks and solvers for corings and their comodules"};
  app.add_option("--field", opt.field, "ground field: q or fp:<prime>");
  app.add_option("--seed", opt.seed, "seed for randomized searches");
  app.add_option("--budget", opt.budget, "random trials before enumeration");
  app.add_option("--enum-cap", opt.enum_cap, "largest coefficient grid to enumerate");
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--input", opt.input, "structure file to load");
  app.add_option("command", opt.command, "subcommand; omitted runs the file's command list");
  app.add_option("targets", opt.targets, "structure names the subcommand acts on");
  CLI11_PARSE(app, argc, argv);

  if (opt.budget < 1) {
    std::cerr << "error: --budget must be at least 1\n";
    return 1;
  }
  if (!opt.command.empty()) {
    bool known = false;
    for (const auto& n : corings::command_names())
      if (n == opt.command) { known = true; break; }
    if (!known) {
      std::cerr << "error: unknown command '" << opt.command << "'\n";
      return 1;
    }
  }

  try {
    if (opt.field == "q") return run_session(corings::QField{}, opt);
    if (opt.field.rfind("fp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoull(opt.field.substr(3), &used);
        if (used != opt.field.size() - 3) p = 0;
      } catch (const std::exception&) {
        p = 0;
      }
      if (!is_prime(p)) {
        std::cerr << "error: --field fp:<p> needs a prime modulus\n";
        return 1;
      }
      return run_session(corings::FpField{p}, opt);
    }
    std::cerr << "error: --field must be q or fp:<prime>\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
