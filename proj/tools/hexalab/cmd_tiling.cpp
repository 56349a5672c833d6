#include "common.hpp"
#include "hexalab/cyclic.hpp"
#include "hexalab/error.hpp"
#include "hexalab/tiling.hpp"

namespace cli {

using namespace hexalab;

namespace {

struct TilingOptions {
  std::size_t n = 0;
  std::string a;
  std::string b;
  bool all = false;
};

json list(const std::vector<std::size_t>& v) { return json(v); }

std::string joined(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int cmd_zeros(const Context& ctx, const TilingOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a);
  const auto z = zero_set(a);
  std::string csv = "t\n";
  for (auto t : z.zeros) csv += std::to_string(t) + "\n";
  csv += "# cyclotomic divisors: " + joined(z.divisors) + "\n";
  emit(ctx, "tiling zeros", {{"n", o.n}, {"a", a.elements()}, {"zeros", list(z.zeros)}, {"divisors", list(z.divisors)}},
       csv);
  return kPass;
}

int cmd_check(const Context& ctx, const TilingOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a), b = CyclicSubset::parse(o.n, o.b);
  const bool dft = is_tiling_pair(a, b);
  const bool direct = direct_sum_check(a, b);
  emit(ctx, "tiling check", {{"n", o.n}, {"dft", dft}, {"direct_sum", direct}, {"agree", dft == direct}},
       "criterion,tiling\ndft," + yes_no(dft) + "\ndirect_sum," + yes_no(direct) + "\n");
  if (dft != direct) throw InvariantViolation("zero-set and direct-sum criteria disagree");
  return dft ? kPass : kFail;
}

int cmd_complements(const Context& ctx, const TilingOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a);
  const auto found = find_complements(a, !o.all, ctx.globals.threads);
  std::string csv = "complement\n";
  json arr = json::array();
  for (const auto& b : found) {
    csv += "\"" + b.str() + "\"\n";
    arr.push_back(b.elements());
  }
  emit(ctx, "tiling complements", {{"n", o.n}, {"a", a.elements()}, {"count", found.size()}, {"complements", arr}},
       csv);
  return found.empty() ? kFail : kPass;
}

int cmd_spectrum(const Context& ctx, const TilingOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a);
  const auto s = find_spectrum(a);
  json j{{"n", o.n}, {"a", a.elements()}, {"spectral", s.has_value()}};
  std::string csv = "spectrum\n";
  if (s) {
    j["spectrum"] = s->elements();
    csv += "\"" + s->str() + "\"\n";
  }
  emit(ctx, "tiling spectrum", j, csv);
  return s ? kPass : kFail;
}

int cmd_vuza(const Context& ctx, const TilingOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a), b = CyclicSubset::parse(o.n, o.b);
  const bool tiling = is_tiling_pair(a, b);
  const auto pa = is_periodic(a), pb = is_periodic(b);
  const bool vuza = tiling && !pa && !pb;
  auto period = [](const std::optional<std::size_t>& p) { return p ? std::to_string(*p) : std::string("none"); };
  emit(ctx, "tiling vuza",
       {{"n", o.n}, {"tiling", tiling}, {"period_a", period(pa)}, {"period_b", period(pb)}, {"vuza", vuza}},
       "tiling,period_a,period_b,vuza\n" + yes_no(tiling) + "," + period(pa) + "," + period(pb) + "," + yes_no(vuza) +
           "\n");
  return vuza ? kPass : kFail;
}

int cmd_sweep(const Context& ctx, const TilingOptions& o) {
  const auto r = tiling_proposition_sweep(o.n, ctx.globals.threads);
  json j{{"n", r.n}, {"pairs", r.pairs}, {"tiling_pairs", r.tiling_pairs}, {"disagreements", r.disagreements}};
  std::string csv = "n,pairs,tiling_pairs,disagreements\n" + std::to_string(r.n) + "," + std::to_string(r.pairs) + "," +
                    std::to_string(r.tiling_pairs) + "," + std::to_string(r.disagreements) + "\n";
  if (r.first_disagreement) {
    j["first_disagreement"] = {r.first_disagreement->first.elements(), r.first_disagreement->second.elements()};
    csv += "# first disagreement: " + r.first_disagreement->first.str() + " " + r.first_disagreement->second.str() +
           "\n";
  }
  emit(ctx, "tiling sweep", j, csv);
  return r.disagreements == 0 ? kPass : kFail;
}

}  // namespace

void register_tiling(CLI::App& app, Context& ctx) {
  static TilingOptions o;
  auto* til = app.add_subcommand("tiling", "Tilings of Z/n, DFT zero sets, spectra");
  til->require_subcommand(1);
  til->fallthrough();
  auto add = [&](const char* name, const char* help, int (*fn)(const Context&, const TilingOptions&), bool a,
                 bool b) {
    auto* c = til->add_subcommand(name, help);
    c->fallthrough();
    c->add_option("--n", o.n, "Modulus")->required()->check(CLI::PositiveNumber);
    if (a) c->add_option("--a", o.a, "Residues of A, e.g. 0,1,2")->required();
    if (b) c->add_option("--b", o.b, "Residues of B")->required();
    c->callback([&ctx, fn] { ctx.action = [&ctx, fn] { return fn(ctx, o); }; });
    return c;
  };
  add("zeros", "Zero set of the DFT of A", cmd_zeros, true, false);
  add("check", "Is (A, B) a tiling pair, by zero sets and by direct sums", cmd_check, true, true);
  add("complements", "All B with A + B = Z/n", cmd_complements, true, false)
      ->add_flag("--all", o.all, "Include every translate, not only B containing 0");
  add("spectrum", "A spectrum of A containing 0", cmd_spectrum, true, false);
  add("vuza", "Tiling pair with neither factor periodic", cmd_vuza, true, true);
  add("sweep", "Exhaustive comparison of the two tiling criteria for one n", cmd_sweep, false, false);
}

}  // namespace cli
