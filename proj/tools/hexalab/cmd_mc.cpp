#include <cmath>
#include <cstdlib>
#include <sstream>

#include "common.hpp"
#include "hexalab/error.hpp"
#include "hexalab/montecarlo.hpp"

namespace cli {

using namespace hexalab;

namespace {

struct McOptions {
  std::size_t count = 1000000;
  std::string spec = "sphere:2";
  std::string predicate = "band";
  std::string grid = "0:2:0.2";
  double alpha = 0.01;
  std::string same;
  std::vector<std::string> files;
  std::string metric = "chord";
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

SphereMetric metric_of(const std::string& m) {
  if (m == "chord") return SphereMetric::chord;
  if (m == "geodesic") return SphereMetric::geodesic;
  throw InputError("--metric must be chord or geodesic");
}

json estimate_json(const Estimate& e) { return {{"value", e.value}, {"std_error", e.std_error}, {"count", e.count}}; }

json ks_json(const KsResult& k) {
  return {{"statistic", k.statistic}, {"critical", k.critical}, {"alpha", k.alpha}, {"m", k.m}, {"n", k.n},
          {"pass", k.pass}};
}

// First field of every data line that parses as a number; other lines
// (headers, '#' comments) are skipped.
std::vector<double> read_values(const std::string& path) {
  std::istringstream in(read_input(path));
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto field = line.substr(0, line.find(','));
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str()) continue;
    while (*end == ' ' || *end == '\r' || *end == '\t') ++end;
    if (*end != '\0') throw InputError("cannot parse '" + field + "' in " + path);
    if (!std::isfinite(v)) throw InputError("non-finite value in " + path);
    out.push_back(v);
  }
  if (out.empty()) throw InputError("no numeric values in " + path);
  return out;
}

int cmd_sphere_band(const Context& ctx, const McOptions& o) {
  const auto s2 = ContinuousSpaceSpec::sphere(2);
  const auto sample = sample_pairs(s2, Predicate::parse("band"), o.count, ctx.globals.seed, ctx.globals.threads);
  std::size_t in = 0;
  for (auto b : sample.in_x) in += b;
  const double frac = static_cast<double>(in) / static_cast<double>(sample.size());
  const double frac_se = std::sqrt(frac * (1 - frac) / static_cast<double>(sample.size()));
  const double r = std::sqrt(2.0);
  const auto caps = conditional_cdf(sample, Stratum::AcAc, r);
  const auto band = conditional_cdf(sample, Stratum::AA, r);
  const auto all = conditional_cdf(sample, Stratum::all, r);
  const auto ks = ks_two_sample(stratum_distances(sample, Stratum::AA), stratum_distances(sample, Stratum::AcAc),
                                o.alpha);
  const bool pass = caps.within(0.5) && band.within(0.5) && ks.pass;
  std::string csv = "quantity,estimate,std_error,target\n";
  csv += "band_fraction," + num(frac) + "," + num(frac_se) + ",0.5\n";
  csv += "P(D<=sqrt2|caps)," + num(caps.value) + "," + num(caps.std_error) + ",0.5\n";
  csv += "P(D<=sqrt2|band)," + num(band.value) + "," + num(band.std_error) + ",0.5\n";
  csv += "P(D<=sqrt2)," + num(all.value) + "," + num(all.std_error) + ",0.5\n";
  csv += "# KS band vs caps: statistic=" + num(ks.statistic) + " critical=" + num(ks.critical) +
         " alpha=" + num(ks.alpha) + " pass=" + yes_no(ks.pass) + "\n# pass: " + yes_no(pass) + "\n";
  emit(ctx, "mc sphere-band",
       {{"n", o.count}, {"band_fraction", {{"value", frac}, {"std_error", frac_se}}},
        {"caps_cdf_sqrt2", estimate_json(caps)}, {"band_cdf_sqrt2", estimate_json(band)},
        {"cdf_sqrt2", estimate_json(all)}, {"ks_band_vs_caps", ks_json(ks)}, {"pass", pass}},
       csv);
  return pass ? kPass : kFail;
}

int cmd_volume(const Context& ctx, const McOptions& o) {
  const auto spec = ContinuousSpaceSpec::parse(o.spec);
  const auto grid = parse_grid(o.grid);
  const auto vol = estimate_volume_function(spec, grid, o.count, ctx.globals.seed, ctx.globals.threads);
  std::string csv = "r,estimate,std_error,exact,within_3se\n";
  json rows = json::array();
  bool pass = true;
  for (const auto& v : vol) {
    const bool within = !v.exact || v.estimate.within(*v.exact);
    pass = pass && within;
    csv += num(v.r) + "," + num(v.estimate.value) + "," + num(v.estimate.std_error) + "," +
           (v.exact ? num(*v.exact) : "") + "," + (v.exact ? yes_no(within) : "") + "\n";
    json row{{"r", v.r}, {"estimate", v.estimate.value}, {"std_error", v.estimate.std_error}};
    if (v.exact) {
      row["exact"] = *v.exact;
      row["within_3se"] = within;
    }
    rows.push_back(row);
  }
  csv += "# pass: " + yes_no(pass) + "\n";
  emit(ctx, "mc volume", {{"spec", spec.str()}, {"n", o.count}, {"rows", rows}, {"pass", pass}}, csv);
  return pass ? kPass : kFail;
}

int cmd_ks(const Context& ctx, const McOptions& o) {
  std::vector<double> a, b;
  if (!o.same.empty()) {
    a = b = read_values(o.same);
  } else if (o.files.size() == 2) {
    a = read_values(o.files[0]);
    b = read_values(o.files[1]);
  } else {
    throw InputError("ks needs --same FILE or two sample files");
  }
  const auto k = ks_two_sample(a, b, o.alpha);
  emit(ctx, "mc ks", ks_json(k),
       "statistic,critical,alpha,m,n,pass\n" + num(k.statistic) + "," + num(k.critical) + "," + num(k.alpha) + "," +
           std::to_string(k.m) + "," + std::to_string(k.n) + "," + yes_no(k.pass) + "\n");
  return k.pass ? kPass : kFail;
}

int cmd_three_sample(const Context& ctx, const McOptions& o) {
  const auto spec = ContinuousSpaceSpec::parse(o.spec);
  const auto sample = sample_pairs(spec, Predicate::parse(o.predicate), o.count, ctx.globals.seed,
                                   ctx.globals.threads, metric_of(o.metric));
  const auto r = three_sample_heuristic(sample, o.alpha);
  std::string csv = "r,cdf_AA_plus_AAc,cdf_AcAc_plus_AAc\n";
  json cdfs = json::array();
  for (const auto& p : r.augmented_cdfs) {
    csv += num(p.r) + "," + num(p.first) + "," + num(p.second) + "\n";
    cdfs.push_back({{"r", p.r}, {"first", p.first}, {"second", p.second}});
  }
  csv += "# strata AA=" + std::to_string(r.s1) + " AcAc=" + std::to_string(r.s2) + " AAc=" + std::to_string(r.s3) +
         "\n# KS direct: statistic=" + num(r.direct.statistic) + " critical=" + num(r.direct.critical) +
         " pass=" + yes_no(r.direct.pass) + "\n# KS augmented: statistic=" + num(r.augmented.statistic) +
         " critical=" + num(r.augmented.critical) + " pass=" + yes_no(r.augmented.pass) + "\n# pass: " +
         yes_no(r.pass) + "\n";
  emit(ctx, "mc three-sample",
       {{"spec", spec.str()}, {"predicate", o.predicate}, {"n", o.count},
        {"strata", {{"AA", r.s1}, {"AcAc", r.s2}, {"AAc", r.s3}}}, {"direct", ks_json(r.direct)},
        {"augmented", ks_json(r.augmented)}, {"augmented_cdfs", cdfs}, {"pass", r.pass}},
       csv);
  return r.pass ? kPass : kFail;
}

int cmd_sample(const Context& ctx, const McOptions& o) {
  const auto spec = ContinuousSpaceSpec::parse(o.spec);
  const auto s = sample_pairs(spec, Predicate::parse(o.predicate), o.count, ctx.globals.seed, ctx.globals.threads,
                              metric_of(o.metric));
  std::string csv = "distance,x_in_A,y_in_A\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    csv += num(s.distances[i]) + "," + std::to_string(s.in_x[i]) + "," + std::to_string(s.in_y[i]) + "\n";
  emit(ctx, "mc sample", {{"spec", spec.str()}, {"predicate", o.predicate}, {"distances", s.distances}}, csv);
  return kPass;
}

}  // namespace

void register_mc(CLI::App& app, Context& ctx) {
  static McOptions o;
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments on spheres, tori and Klein bottles");
  mc->require_subcommand(1);
  mc->fallthrough();
  auto add = [&](const char* name, const char* help, int (*fn)(const Context&, const McOptions&)) {
    auto* c = mc->add_subcommand(name, help);
    c->fallthrough();
    c->add_option("--alpha", o.alpha, "KS significance level")->capture_default_str();
    c->callback([&ctx, fn] { ctx.action = [&ctx, fn] { return fn(ctx, o); }; });
    return c;
  };
  auto sampling = [&](CLI::App* c) {
    c->add_option("--n", o.count, "Number of sampled pairs")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--spec", o.spec, "sphere:d, torus:L1,...,Lk or klein:a,b")->capture_default_str();
  };
  auto* band = add("sphere-band", "Band |z| <= 1/2 on S^2: CDF at sqrt 2 and KS band vs caps", cmd_sphere_band);
  band->add_option("--n", o.count, "Number of sampled pairs")->capture_default_str()->check(CLI::PositiveNumber);
  auto* vol = add("volume", "Estimated volume function on a grid of radii", cmd_volume);
  sampling(vol);
  vol->add_option("--grid", o.grid, "start:end:step")->capture_default_str();
  auto* ks = add("ks", "Two-sample Kolmogorov-Smirnov on CSV columns", cmd_ks);
  ks->add_option("--same", o.same, "Compare a file with itself");
  ks->add_option("files", o.files, "Two sample files")->expected(0, 2);
  for (auto* c : {add("three-sample", "Three-sample heuristic for Hex", cmd_three_sample),
                  add("sample", "Raw sampled distances with stratum flags", cmd_sample)}) {
    sampling(c);
    c->add_option("--predicate", o.predicate, "whole, band, caps, hemisphere or strip")->capture_default_str();
    c->add_option("--metric", o.metric, "chord or geodesic (spheres)")->capture_default_str();
  }
}

}  // namespace cli
