#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "common.hpp"
#include "hexalab/error.hpp"
#include "hexalab/io.hpp"

namespace cli {

std::string read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw hexalab::InputError("cannot read '" + arg + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ";") {
    if (c == ';' || c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

void emit(const Context& ctx, const std::string& command, const json& data, const std::string& csv) {
  std::string text;
  if (ctx.globals.format == "json") {
    json j;
    j["command"] = command;
    j["seed"] = ctx.globals.seed;
    j["threads"] = ctx.globals.threads;
    for (const auto& [k, v] : data.items()) j[k] = v;
    text = j.dump(2) + "\n";
  } else {
    text = "# hexalab " + command + " seed=" + std::to_string(ctx.globals.seed) +
           " threads=" + std::to_string(ctx.globals.threads) + "\n" + csv;
  }
  if (ctx.globals.out.empty()) {
    std::cout << text << std::flush;
  } else {
    std::ofstream f(ctx.globals.out, std::ios::binary);
    if (!f) throw hexalab::InputError("cannot write '" + ctx.globals.out + "'");
    f << text;
  }
}

std::string rat(const hexalab::Rational& r, std::int64_t denominator) {
  return denominator > 0 ? hexalab::render_over(r, denominator) : r.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace cli

int main(int argc, char** argv) {
  CLI::App app{"hexalab: exact experiments on metric measure spaces, interval tables, tilings and homometry"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Context ctx;
  ctx.globals.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", ctx.globals.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", ctx.globals.threads, "Worker threads (default: available cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", ctx.globals.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", ctx.globals.out, "Write output to this file instead of stdout");

  cli::register_space(app, ctx);
  cli::register_symbolic(app, ctx);
  cli::register_tiling(app, ctx);
  cli::register_zrel(app, ctx);
  cli::register_mc(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }
  if (!ctx.action) {
    std::cerr << app.help();
    return cli::kInputError;
  }
  try {
    return ctx.action();
  } catch (const hexalab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const hexalab::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
  } catch (const hexalab::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
  } catch (const hexalab::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return cli::kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return cli::kInputError;
}
