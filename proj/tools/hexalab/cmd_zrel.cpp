#include <limits>

#include "common.hpp"
#include "hexalab/cyclic.hpp"
#include "hexalab/error.hpp"
#include "hexalab/zrelation.hpp"

namespace cli {

using namespace hexalab;

namespace {

struct ZrelOptions {
  std::size_t n = 12;
  std::size_t k = 6;
  std::string a;
  std::size_t min_size = 2;
  bool force = false;
  std::uint64_t samples = 10000;
};

int cmd_ivec(const Context& ctx, const ZrelOptions& o) {
  const auto a = CyclicSubset::parse(o.n, o.a);
  const auto v = interval_content(a);
  std::string head, row;
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    head += (i ? "," : "") + std::string("d") + std::to_string(i + 1);
    row += (i ? "," : "") + std::to_string(v.counts[i]);
  }
  emit(ctx, "zrel ivec",
       {{"n", o.n}, {"a", a.elements()}, {"vector", v.counts}, {"ti_canonical", ti_canonical(a).elements()}},
       head + "\n" + row + "\n");
  return kPass;
}

int cmd_classes(const Context& ctx, const ZrelOptions& o) {
  const auto budget = o.force ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{5000000};
  const auto r = homometry_classes(o.n, o.k, ctx.globals.threads, budget);
  std::string csv = z_tuple_report(r, o.min_size);
  std::string hist;
  json h = json::object();
  for (const auto& [size, count] : r.histogram) {
    hist += (hist.empty() ? "" : " ") + std::to_string(size) + ":" + std::to_string(count);
    h[std::to_string(size)] = count;
  }
  csv += "# n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + " ti_classes=" + std::to_string(r.ti_classes) +
         " vectors=" + std::to_string(r.classes.size()) + " max_class_size=" + std::to_string(r.max_class_size()) +
         "\n# histogram (class size:count) " + hist + "\n";
  json classes = json::array();
  for (const auto& c : r.classes) {
    if (c.representatives.size() < o.min_size) continue;
    json reps = json::array();
    for (const auto& rep : c.representatives) reps.push_back(rep.elements());
    classes.push_back({{"interval_vector", c.vector.counts}, {"class_size", c.representatives.size()},
                       {"representatives", reps}});
  }
  emit(ctx, "zrel classes",
       {{"n", r.n}, {"k", r.k}, {"ti_classes", r.ti_classes}, {"vectors", r.classes.size()},
        {"max_class_size", r.max_class_size()}, {"histogram", h}, {"classes", classes}},
       csv);
  return kPass;
}

int cmd_babbitt(const Context& ctx, const ZrelOptions& o) {
  const auto r = complement_homometry_check(o.n, o.samples, ctx.globals.seed);
  json j{{"n", r.n}, {"holds", r.holds}, {"exhaustive", r.exhaustive}, {"checked", r.checked}};
  std::string csv = "n,checked,exhaustive,holds\n" + std::to_string(r.n) + "," + std::to_string(r.checked) + "," +
                    yes_no(r.exhaustive) + "," + yes_no(r.holds) + "\n";
  if (r.witness) {
    j["witness"] = r.witness->elements();
    csv += "# witness: " + r.witness->str() + "\n";
  }
  emit(ctx, "zrel babbitt", j, csv);
  return r.holds ? kPass : kFail;
}

}  // namespace

void register_zrel(CLI::App& app, Context& ctx) {
  static ZrelOptions o;
  auto* z = app.add_subcommand("zrel", "Interval vectors and homometry classes in Z/n");
  z->require_subcommand(1);
  z->fallthrough();
  auto add = [&](const char* name, const char* help, int (*fn)(const Context&, const ZrelOptions&)) {
    auto* c = z->add_subcommand(name, help);
    c->fallthrough();
    c->add_option("--n", o.n, "Modulus")->required()->check(CLI::PositiveNumber);
    c->callback([&ctx, fn] { ctx.action = [&ctx, fn] { return fn(ctx, o); }; });
    return c;
  };
  add("ivec", "Interval vector of a subset", cmd_ivec)->add_option("--a", o.a, "Residues, e.g. 0,1,4,6")->required();
  auto* cl = add("classes", "Homometry classes of k-subsets up to T/I", cmd_classes);
  cl->add_option("--k", o.k, "Subset size")->required();
  cl->add_option("--min-size", o.min_size, "Report classes with at least this many members")->capture_default_str();
  cl->add_flag("--force", o.force, "Ignore the enumeration budget");
  add("babbitt", "Every n/2-subset is homometric to its complement", cmd_babbitt)
      ->add_option("--samples", o.samples, "Random subsets when exhaustive enumeration is too large")
      ->capture_default_str();
}

}  // namespace cli
