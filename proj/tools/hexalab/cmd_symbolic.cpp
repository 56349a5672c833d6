#include "common.hpp"
#include "hexalab/error.hpp"
#include "hexalab/io.hpp"
#include "hexalab/symbolic.hpp"

namespace cli {

using namespace hexalab;

namespace {

struct SymbolicOptions {
  std::string table;
  bool group_check = false;
  std::string mode = "doubleprime";
  std::size_t trials = 1000;
  std::string group;
  std::string subset;
  std::string product = "quotient";
  std::int64_t denominator = 0;
};

IntervalTable load(const std::string& path) { return parse_table(read_input(path)); }

json witness_json(const IntervalTable& t, const KernelWitness& w) {
  return {{"coordinate", to_string(w.coordinate)},
          {"point", t.point(w.point)},
          {"other_point", t.point(w.other_point)},
          {"value", t.symbol(w.value)}};
}

std::string witness_line(const IntervalTable& t, const KernelWitness& w) {
  return "# witness: coordinate=" + to_string(w.coordinate) + " point=" + t.point(w.point) +
         " other=" + t.point(w.other_point) + " value=" + t.symbol(w.value) + "\n";
}

int cmd_ind(const Context& ctx, const SymbolicOptions& o) {
  const auto t = load(o.table);
  const auto v = check_ind(t);
  json j{{"ind", v.holds}, {"x_independent_of_f", v.x_independent_of_f}, {"y_independent_of_f", v.y_independent_of_f}};
  std::string csv = "property,holds\nInd," + yes_no(v.holds) + "\nX_indep_F," + yes_no(v.x_independent_of_f) +
                    "\nY_indep_F," + yes_no(v.y_independent_of_f) + "\n";
  if (v.witness) {
    j["witness"] = witness_json(t, *v.witness);
    csv += witness_line(t, *v.witness);
  }
  emit(ctx, "symbolic ind", j, csv);
  return v.holds ? kPass : kFail;
}

int kernel(const Context& ctx, const SymbolicOptions& o, bool prime) {
  const auto t = load(o.table);
  const auto v = prime ? check_hex_prime(t) : check_hex_doubleprime(t);
  const std::string name = prime ? "Hex'" : "Hex''";
  json j{{prime ? "hex_prime" : "hex_doubleprime", v.holds}};
  std::string csv = "property,holds\n" + name + "," + yes_no(v.holds) + "\n";
  if (v.witness) {
    j["witness"] = witness_json(t, *v.witness);
    csv += witness_line(t, *v.witness);
  }
  emit(ctx, prime ? "symbolic hexprime" : "symbolic hexdd", j, csv);
  return v.holds ? kPass : kFail;
}

int cmd_hexprime(const Context& ctx, const SymbolicOptions& o) { return kernel(ctx, o, true); }
int cmd_hexdd(const Context& ctx, const SymbolicOptions& o) { return kernel(ctx, o, false); }

// Group verdict, or the reason the table is not even a loop.
struct GroupAnswer {
  bool is_group = false;
  std::string note;
};

GroupAnswer group_answer(const IntervalTable& t) {
  try {
    const auto loop = loop_is_group(t);
    GroupAnswer a{loop.is_group, "identity " + t.point(loop.identity)};
    if (loop.non_associative) {
      const auto [x, y, z] = *loop.non_associative;
      a.note += "; (" + t.point(x) + " " + t.point(y) + ") " + t.point(z) + " != " + t.point(x) + " (" +
                t.point(y) + " " + t.point(z) + ")";
    }
    return a;
  } catch (const PreconditionError& e) {
    return {false, e.what()};
  }
}

int cmd_latin(const Context& ctx, const SymbolicOptions& o) {
  const auto t = load(o.table);
  const bool latin = is_latin_square(t);
  json j{{"latin", latin}};
  std::string csv = "property,holds\nlatin," + yes_no(latin) + "\n";
  if (o.group_check) {
    const auto g = group_answer(t);
    j["group"] = g.is_group;
    j["group_note"] = g.note;
    csv += "group," + yes_no(g.is_group) + "\n# " + g.note + "\n";
  }
  emit(ctx, "symbolic latin", j, csv);
  return latin ? kPass : kFail;
}

int cmd_group(const Context& ctx, const SymbolicOptions& o) {
  const auto t = load(o.table);
  const auto g = group_answer(t);
  emit(ctx, "symbolic group", {{"group", g.is_group}, {"note", g.note}},
       "property,holds\ngroup," + yes_no(g.is_group) + "\n# " + g.note + "\n");
  return g.is_group ? kPass : kFail;
}

int cmd_oracle(const Context& ctx, const SymbolicOptions& o) {
  const auto t = load(o.table);
  OracleMode mode;
  bool exact;
  if (o.mode == "prime") {
    mode = OracleMode::hex_prime;
    exact = check_hex_prime(t).holds;
  } else if (o.mode == "doubleprime") {
    mode = OracleMode::hex_doubleprime;
    exact = check_hex_doubleprime(t).holds;
  } else {
    throw InputError("--mode must be prime or doubleprime");
  }
  const auto r = sample_decomposition_oracle(t, o.trials, ctx.globals.seed, mode);
  json j{{"mode", o.mode}, {"trials", r.trials}, {"consistent", r.consistent}, {"exact_verdict", exact},
         {"agree", r.consistent == exact}};
  std::string csv = "mode,trials,consistent,exact_verdict,agree\n" + o.mode + "," + std::to_string(r.trials) + "," +
                    yes_no(r.consistent) + "," + yes_no(exact) + "," + yes_no(r.consistent == exact) + "\n";
  if (r.violation) {
    json alpha = json::array(), beta = json::array();
    for (auto a : r.violation->alpha) alpha.push_back(Rational(a, r.violation->denominator).str());
    for (auto b : r.violation->beta) beta.push_back(Rational(b, r.violation->denominator).str());
    j["violation"] = {{"alpha", alpha}, {"beta", beta}};
    csv += "# violating decomposition: alpha=" + alpha.dump() + " beta=" + beta.dump() + "\n";
  }
  emit(ctx, "symbolic oracle", j, csv);
  return r.consistent ? kPass : kFail;
}

int cmd_intervals(const Context& ctx, const SymbolicOptions& o) {
  const auto g = parse_group_spec(o.group);
  GroupTableMode mode;
  if (o.product == "quotient") mode = GroupTableMode::left_quotient;
  else if (o.product == "product") mode = GroupTableMode::product;
  else throw InputError("--mode must be quotient or product");
  const auto t = group_interval_table(g, mode);
  std::vector<bool> a(g.order(), false);
  for (const auto& l : split_labels(o.subset)) {
    const auto e = g.find(l);
    if (!e) throw InputError("'" + l + "' is not an element of " + g.name());
    a[*e] = true;
  }
  std::vector<bool> ac(a);
  ac.flip();
  const auto law = conditional_interval_distribution(t, a);
  const auto law_c = conditional_interval_distribution(t, ac);
  std::string csv = "v,P_A,P_complement\n";
  json rows = json::array();
  for (std::uint32_t v = 0; v < t.alphabet_size(); ++v) {
    csv += csv_field(t.symbol(v)) + "," + rat(law[v], o.denominator) + "," + rat(law_c[v], o.denominator) + "\n";
    rows.push_back({{"v", t.symbol(v)}, {"P_A", rat(law[v], o.denominator)},
                    {"P_complement", rat(law_c[v], o.denominator)}});
  }
  const bool equal = law == law_c;
  csv += "# complement law equal: " + yes_no(equal) + "\n";
  emit(ctx, "symbolic intervals", {{"group", g.name()}, {"complement_equal", equal}, {"law", rows}}, csv);
  return equal ? kPass : kFail;
}

int cmd_emit(const Context& ctx, const SymbolicOptions& o) {
  const auto t = load(o.table);
  if (ctx.globals.format == "json") emit(ctx, "symbolic emit", json::parse(table_to_json(t)), "");
  else emit(ctx, "symbolic emit", {}, table_to_csv(t));
  return kPass;
}

}  // namespace

void register_symbolic(CLI::App& app, Context& ctx) {
  static SymbolicOptions o;
  auto* sym = app.add_subcommand("symbolic", "Interval tables: Ind, Hex', Hex'', Latin squares");
  sym->require_subcommand(1);
  sym->fallthrough();
  auto add = [&](const char* name, const char* help, int (*fn)(const Context&, const SymbolicOptions&),
                 bool table) {
    auto* c = sym->add_subcommand(name, help);
    c->fallthrough();
    if (table) c->add_option("table", o.table, "Table as CSV or JSON file")->required();
    c->callback([&ctx, fn] { ctx.action = [&ctx, fn] { return fn(ctx, o); }; });
    return c;
  };
  add("ind", "Pairwise independence of X, Y and F", cmd_ind, true);
  add("hexprime", "Hex' via the symmetrized kernel", cmd_hexprime, true);
  add("hexdd", "Hex'' via row and column kernels", cmd_hexdd, true);
  add("latin", "Latin square check", cmd_latin, true)
      ->add_flag("--group-check", o.group_check, "Also decide whether the table is a group");
  add("group", "Read the table as an operation and decide if it is a group", cmd_group, true);
  auto* oracle = add("oracle", "Randomized decomposition check", cmd_oracle, true);
  oracle->add_option("--mode", o.mode, "prime or doubleprime")->capture_default_str();
  oracle->add_option("--trials", o.trials, "Number of random decompositions")->capture_default_str();
  auto* iv = add("intervals", "Law of x^-1 y (or x y) on A x A and its complement", cmd_intervals, false);
  iv->add_option("--group", o.group, "cyclic:n1,n2,... or symmetric:n")->required();
  iv->add_option("--subset", o.subset, "Element labels separated by ';' or spaces")->required();
  iv->add_option("--mode", o.product, "quotient (x^-1 y) or product (x y)")->capture_default_str();
  iv->add_option("--denominator", o.denominator, "Render masses over this denominator when possible");
  add("emit", "Re-emit a table in the chosen format", cmd_emit, true);
}

}  // namespace cli
