#include <iostream>
#include <set>

#include "common.hpp"
#include "hexalab/constructions.hpp"
#include "hexalab/error.hpp"
#include "hexalab/hex.hpp"
#include "hexalab/io.hpp"

namespace cli {

using namespace hexalab;

namespace {

struct SpaceOptions {
  std::string recipe;
  std::string subset;
  std::string group;
  std::int64_t denominator = 0;
  bool triangle = false;
};

FiniteMetricMeasureSpace load(const std::string& recipe) {
  auto c = build_from_recipe(read_input(recipe));
  for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(c.space);
}

SubsetMask subset_of(const FiniteMetricMeasureSpace& s, const std::string& text) {
  const auto labels = split_labels(text);
  return SubsetMask::from_labels(s, labels);
}

json law_json(const DistanceDistribution& d, std::int64_t den) {
  json out = json::array();
  for (const auto& [r, m] : d.entries) out.push_back({{"r", r.str()}, {"mass", rat(m, den)}});
  return out;
}

int cmd_validate(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  const auto rep = validate_space(s, o.triangle);
  json j{{"points", s.size()}, {"valid", rep.valid()}, {"errors", json::array()}, {"warnings", json::array()}};
  std::string csv = "severity,kind,witness,message\n";
  auto add = [&](const char* severity, const std::vector<Violation>& list, json& arr) {
    for (const auto& v : list) {
      std::string w;
      for (auto i : v.witness) w += (w.empty() ? "" : ";") + s.label(i);
      arr.push_back({{"kind", to_string(v.kind)}, {"witness", w}, {"message", v.message}});
      csv += std::string(severity) + "," + to_string(v.kind) + "," + csv_field(w) + "," + csv_field(v.message) + "\n";
    }
  };
  add("error", rep.errors, j["errors"]);
  add("warning", rep.warnings, j["warnings"]);
  csv += "# valid: " + yes_no(rep.valid()) + "\n";
  emit(ctx, "space validate", j, csv);
  return rep.valid() ? kPass : kFail;
}

int cmd_dist(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  DistanceDistribution law;
  if (o.subset.empty()) {
    law = distance_distribution(s);
  } else {
    const auto a = subset_of(s, o.subset);
    if (a.measure().sign() == 0) throw PreconditionError("subset has measure zero");
    law = restricted_distribution(s, a, a).scaled(a.measure() * a.measure());
  }
  std::string csv = "r,mass\n";
  for (const auto& [r, m] : law.entries) csv += r.str() + "," + rat(m, o.denominator) + "\n";
  emit(ctx, "space dist", {{"value_kind", to_string(s.value_kind())}, {"law", law_json(law, o.denominator)}}, csv);
  return kPass;
}

int cmd_cvc(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  const auto v = check_cvc(s);
  json j{{"holds", v.holds}};
  std::string csv;
  if (v.holds) {
    csv = "r,volume\n";
    j["rho"] = json::array();
    for (const auto& [r, m] : v.rho->steps) {
      csv += r.str() + "," + rat(m, o.denominator) + "\n";
      j["rho"].push_back({{"r", r.str()}, {"volume", rat(m, o.denominator)}});
    }
  } else {
    const auto& w = *v.witness;
    csv = "x,y,radius,volume_x,volume_y\n" + csv_field(s.label(w.x)) + "," + csv_field(s.label(w.y)) + "," +
          w.radius.str() + "," + w.volume_x.str() + "," + w.volume_y.str() + "\n";
    j["witness"] = {{"x", s.label(w.x)},
                    {"y", s.label(w.y)},
                    {"radius", w.radius.str()},
                    {"volume_x", w.volume_x.str()},
                    {"volume_y", w.volume_y.str()}};
  }
  csv += "# cvc: " + yes_no(v.holds) + "\n";
  emit(ctx, "space cvc", j, csv);
  return v.holds ? kPass : kFail;
}

int cmd_hex(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  const auto a = subset_of(s, o.subset);
  const auto v = check_hex(s, a);
  const Rational norm = a.measure() * a.measure();
  const auto pa = v.dist_a.scaled(norm), pc = v.dist_complement.scaled(norm);
  std::set<Rational> values;
  for (const auto& e : pa.entries) values.insert(e.first);
  for (const auto& e : pc.entries) values.insert(e.first);
  std::string csv = "r,P_A,P_complement\n";
  json rows = json::array();
  for (const auto& r : values) {
    csv += r.str() + "," + rat(pa.mass_at(r), o.denominator) + "," + rat(pc.mass_at(r), o.denominator) + "\n";
    rows.push_back({{"r", r.str()}, {"P_A", rat(pa.mass_at(r), o.denominator)},
                    {"P_complement", rat(pc.mass_at(r), o.denominator)}});
  }
  csv += "# hex: " + yes_no(v.holds) + "\n";
  json j{{"holds", v.holds}, {"law", rows}};
  if (v.first_divergence) {
    j["first_divergence"] = v.first_divergence->str();
    csv += "# first divergence at r=" + v.first_divergence->str() + "\n";
  }
  emit(ctx, "space hex", j, csv);
  return v.holds ? kPass : kFail;
}

int cmd_patterson(const Context& ctx, const SpaceOptions& o) {
  FiniteGroup g;
  if (!o.group.empty()) {
    g = parse_group_spec(o.group);
  } else if (!o.recipe.empty()) {
    const auto rg = recipe_group(read_input(o.recipe));
    if (!rg) throw InputError("patterson needs --group or a cayley recipe");
    g = *rg;
  } else {
    throw InputError("patterson needs --group or --recipe");
  }
  std::vector<bool> members(g.order(), false);
  for (const auto& l : split_labels(o.subset)) {
    const auto e = g.find(l);
    if (!e) throw InputError("'" + l + "' is not an element of " + g.name());
    members[*e] = true;
  }
  const auto pat = patterson(g, members);
  std::vector<bool> comp(members);
  comp.flip();
  const auto pat_c = patterson(g, comp);
  const auto rep = check_patterson_equality(g, members);
  std::string csv = "g,pat_A,pat_complement,difference\n";
  json rows = json::array();
  for (std::size_t x = 0; x < g.order(); ++x) {
    csv += csv_field(g.label(x)) + "," + rat(pat[x], o.denominator) + "," + rat(pat_c[x], o.denominator) + "," +
           rat(rep.difference[x], o.denominator) + "\n";
    rows.push_back({{"g", g.label(x)}, {"pat_A", rat(pat[x], o.denominator)},
                    {"pat_complement", rat(pat_c[x], o.denominator)},
                    {"difference", rat(rep.difference[x], o.denominator)}});
  }
  const bool ok = rep.holds && rep.inverse_symmetric;
  csv += "# expected difference: " + rep.expected_difference.str() + "\n# holds: " + yes_no(rep.holds) +
         "\n# inverse symmetric: " + yes_no(rep.inverse_symmetric) + "\n";
  emit(ctx, "space patterson",
       {{"group", g.name()}, {"holds", rep.holds}, {"inverse_symmetric", rep.inverse_symmetric},
        {"expected_difference", rep.expected_difference.str()}, {"table", rows}},
       csv);
  return ok ? kPass : kFail;
}

int cmd_transitive(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  const bool t = is_transitive(s);
  emit(ctx, "space transitive", {{"points", s.size()}, {"transitive", t}},
       "points,transitive\n" + std::to_string(s.size()) + "," + yes_no(t) + "\n");
  return t ? kPass : kFail;
}

int cmd_emit(const Context& ctx, const SpaceOptions& o) {
  const auto s = load(o.recipe);
  if (ctx.globals.format == "json") {
    emit(ctx, "space emit", json::parse(space_to_json(s)), "");
    return kPass;
  }
  std::string csv = "point,weight";
  for (std::size_t i = 0; i < s.size(); ++i) csv += "," + csv_field(s.label(i));
  csv += "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    csv += csv_field(s.label(i)) + "," + s.weight(i).str();
    for (std::size_t k = 0; k < s.size(); ++k) csv += "," + s.d(i, k).str();
    csv += "\n";
  }
  csv += "# value kind: " + to_string(s.value_kind()) + "\n";
  emit(ctx, "space emit", {}, csv);
  return kPass;
}

}  // namespace

void register_space(CLI::App& app, Context& ctx) {
  static SpaceOptions o;
  auto* space = app.add_subcommand("space", "Finite metric measure spaces from recipes");
  space->require_subcommand(1);
  space->fallthrough();
  auto add = [&](const char* name, const char* help, int (*fn)(const Context&, const SpaceOptions&),
                 bool needs_recipe) {
    auto* c = space->add_subcommand(name, help);
    c->fallthrough();
    auto* r = c->add_option("--recipe", o.recipe, "Recipe JSON, inline or as a file path");
    if (needs_recipe) r->required();
    c->callback([&ctx, fn] { ctx.action = [&ctx, fn] { return fn(ctx, o); }; });
    return c;
  };
  add("validate", "Check the metric axioms", cmd_validate, true)
      ->add_flag("--triangle", o.triangle, "Treat triangle-inequality failures as errors");
  auto* dist = add("dist", "Law of the distance, optionally conditioned on a subset", cmd_dist, true);
  dist->add_option("--subset", o.subset, "Point labels separated by ';' or spaces");
  dist->add_option("--denominator", o.denominator, "Render masses over this denominator when possible");
  add("cvc", "Constant volume condition", cmd_cvc, true)
      ->add_option("--denominator", o.denominator, "Render volumes over this denominator when possible");
  auto* hex = add("hex", "Compare distance laws on A x A and its complement", cmd_hex, true);
  hex->add_option("--subset", o.subset, "Point labels separated by ';' or spaces")->required();
  hex->add_option("--denominator", o.denominator, "Render masses over this denominator when possible");
  auto* pat = add("patterson", "Patterson function of a subset of a group", cmd_patterson, false);
  pat->add_option("--group", o.group, "cyclic:n1,n2,... or symmetric:n");
  pat->add_option("--subset", o.subset, "Element labels separated by ';' or spaces")->required();
  pat->add_option("--denominator", o.denominator, "Render values over this denominator when possible");
  add("transitive", "Isometry group acts transitively", cmd_transitive, true);
  add("emit", "Materialize a recipe as an explicit space", cmd_emit, true);
}

}  // namespace cli
