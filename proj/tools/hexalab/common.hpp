#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "hexalab/rational.hpp"

namespace cli {

using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string format = "csv";
  std::string out;
};

using Action = std::function<int()>;

struct Context {
  Globals globals;
  Action action;
};

/// Either inline JSON (leading '{') or a path to read.
std::string read_input(const std::string& arg);

/// Labels separated by ';' or whitespace.
std::vector<std::string> split_labels(const std::string& text);

/// Writes a result. JSON gets "command", "seed" and "threads" prepended to
/// `data`; CSV gets a '#' header line with the same fields before `csv`.
void emit(const Context& ctx, const std::string& command, const json& data, const std::string& csv);

std::string rat(const hexalab::Rational& r, std::int64_t denominator = 0);
std::string yes_no(bool b);

void register_space(CLI::App& app, Context& ctx);
void register_symbolic(CLI::App& app, Context& ctx);
void register_tiling(CLI::App& app, Context& ctx);
void register_zrel(CLI::App& app, Context& ctx);
void register_mc(CLI::App& app, Context& ctx);

}  // namespace cli
