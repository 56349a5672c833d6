#include "hexalab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "hexalab/error.hpp"
#include "hexalab/seed.hpp"

namespace hexalab {

namespace {

constexpr std::size_t kChunk = std::size_t{1} << 16;

std::vector<double> parse_doubles(std::string_view text, char sep) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    const auto j = std::min(text.find(sep, i), text.size());
    const auto piece = text.substr(i, j - i);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw InputError("cannot parse number '" + std::string(piece) + "'");
    }
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

double wrap_gap(double d, double period) {
  d = std::fmod(std::abs(d), period);
  return std::min(d, period - d);
}

void fill_point(const ContinuousSpaceSpec& spec, std::mt19937_64& rng, Point& p) {
  p.resize(spec.coordinates());
  if (spec.kind == ContinuousSpaceSpec::Kind::sphere) {
    std::normal_distribution<double> gauss;
    double norm = 0;
    do {
      norm = 0;
      for (auto& c : p) {
        c = gauss(rng);
        norm += c * c;
      }
    } while (norm == 0);
    norm = std::sqrt(norm);
    for (auto& c : p) c /= norm;
  } else {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = unit(rng) * spec.lengths[i];
  }
}

}  // namespace

ContinuousSpaceSpec ContinuousSpaceSpec::sphere(std::size_t d) {
  if (d < 1) throw InputError("sphere dimension must be at least 1");
  ContinuousSpaceSpec s;
  s.kind = Kind::sphere;
  s.dim = d;
  return s;
}

ContinuousSpaceSpec ContinuousSpaceSpec::torus(std::vector<double> lengths) {
  if (lengths.empty()) throw InputError("torus needs at least one side length");
  for (auto l : lengths) {
    if (!(l > 0) || !std::isfinite(l)) throw InputError("torus side lengths must be positive");
  }
  ContinuousSpaceSpec s;
  s.kind = Kind::torus;
  s.dim = lengths.size();
  s.lengths = std::move(lengths);
  return s;
}

ContinuousSpaceSpec ContinuousSpaceSpec::klein(double a, double b) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("Klein bottle side lengths must be positive");
  }
  ContinuousSpaceSpec s;
  s.kind = Kind::klein;
  s.dim = 2;
  s.lengths = {a, b};
  return s;
}

ContinuousSpaceSpec ContinuousSpaceSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "sphere") {
    if (args.empty()) return sphere(2);
    const auto v = parse_doubles(args, ',');
    if (v.size() != 1 || v[0] < 1 || v[0] != std::floor(v[0])) throw InputError("sphere:<d> needs an integer d >= 1");
    return sphere(static_cast<std::size_t>(v[0]));
  }
  if (name == "torus") return torus(args.empty() ? std::vector<double>{1.0, 1.0} : parse_doubles(args, ','));
  if (name == "klein") {
    const auto v = args.empty() ? std::vector<double>{1.0, 1.0} : parse_doubles(args, ',');
    if (v.size() != 2) throw InputError("klein:<a>,<b> needs two lengths");
    return klein(v[0], v[1]);
  }
  throw InputError("unknown space spec '" + std::string(text) + "'");
}

std::size_t ContinuousSpaceSpec::coordinates() const { return kind == Kind::sphere ? dim + 1 : lengths.size(); }

std::string ContinuousSpaceSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::sphere:
      os << "sphere:" << dim;
      return os.str();
    case Kind::torus:
      os << "torus:";
      break;
    case Kind::klein:
      os << "klein:";
      break;
  }
  for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  return os.str();
}

Point sample_point(const ContinuousSpaceSpec& spec, std::mt19937_64& rng) {
  Point p;
  fill_point(spec, rng, p);
  return p;
}

double klein_distance(double a, double b, const Point& p, const Point& q, int window) {
  double best = std::numeric_limits<double>::infinity();
  for (int l = -window; l <= window; ++l) {
    const double qx = (l % 2 == 0) ? q[0] : -q[0];
    const double dy = p[1] - (q[1] + l * b);
    for (int k = -window; k <= window; ++k) {
      const double dx = p[0] - (k * a + qx);
      best = std::min(best, dx * dx + dy * dy);
    }
  }
  return std::sqrt(best);
}

double distance(const ContinuousSpaceSpec& spec, const Point& p, const Point& q, SphereMetric metric) {
  switch (spec.kind) {
    case ContinuousSpaceSpec::Kind::sphere: {
      double s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
      const double chord = std::min(std::sqrt(s), 2.0);
      return metric == SphereMetric::chord ? chord : 2.0 * std::asin(chord / 2.0);
    }
    case ContinuousSpaceSpec::Kind::torus: {
      double s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double g = wrap_gap(p[i] - q[i], spec.lengths[i]);
        s += g * g;
      }
      return std::sqrt(s);
    }
    case ContinuousSpaceSpec::Kind::klein:
      return klein_distance(spec.lengths[0], spec.lengths[1], p, q);
  }
  return 0.0;
}

Predicate Predicate::parse(std::string_view name) {
  Predicate p;
  if (name == "whole") p.kind = Kind::whole;
  else if (name == "band") p.kind = Kind::band;
  else if (name == "caps") p.kind = Kind::caps;
  else if (name == "hemisphere") p.kind = Kind::hemisphere;
  else if (name == "strip") p.kind = Kind::strip;
  else throw InputError("unknown predicate '" + std::string(name) + "'");
  return p;
}

std::string Predicate::str() const {
  switch (kind) {
    case Kind::whole: return "whole";
    case Kind::band: return "band";
    case Kind::caps: return "caps";
    case Kind::hemisphere: return "hemisphere";
    case Kind::strip: return "strip";
  }
  return "?";
}

bool Predicate::operator()(const ContinuousSpaceSpec& spec, const Point& p) const {
  const bool sphere = spec.kind == ContinuousSpaceSpec::Kind::sphere;
  switch (kind) {
    case Kind::whole:
      return true;
    case Kind::band:
    case Kind::caps:
    case Kind::hemisphere: {
      if (!sphere) throw PreconditionError("predicate '" + str() + "' needs a sphere");
      const double z = p.back();
      if (kind == Kind::hemisphere) return z >= 0;
      return (std::abs(z) <= 0.5) == (kind == Kind::band);
    }
    case Kind::strip:
      if (sphere) throw PreconditionError("predicate 'strip' needs a torus or Klein bottle");
      return p.back() < spec.lengths.back() / 2;
  }
  return false;
}

EmpiricalSample sample_pairs(const ContinuousSpaceSpec& spec, const Predicate& predicate, std::size_t count,
                             std::uint64_t seed, std::size_t threads, SphereMetric metric) {
  if (count == 0) throw PreconditionError("sample size must be at least 1");
  EmpiricalSample s{spec, predicate, seed, std::vector<double>(count), std::vector<std::uint8_t>(count),
                    std::vector<std::uint8_t>(count)};
  // Validate the predicate against the spec once, before spawning workers.
  {
    std::mt19937_64 probe(0);
    (void)predicate(spec, sample_point(spec, probe));
  }
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Point p, q;
    for (std::size_t c; (c = next++) < chunks;) {
      std::mt19937_64 rng(stream_seed(seed, c));
      const std::size_t end = std::min(count, (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i) {
        fill_point(spec, rng, p);
        fill_point(spec, rng, q);
        s.distances[i] = distance(spec, p, q, metric);
        s.in_x[i] = predicate(spec, p);
        s.in_y[i] = predicate(spec, q);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < std::min(std::max<std::size_t>(threads, 1), chunks); ++w) pool.emplace_back(work);
    work();
  }
  return s;
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::AA: return "AA";
    case Stratum::AcAc: return "AcAc";
    case Stratum::AAc: return "AAc";
    case Stratum::all: return "all";
  }
  return "?";
}

Stratum parse_stratum(std::string_view s) {
  if (s == "AA") return Stratum::AA;
  if (s == "AcAc") return Stratum::AcAc;
  if (s == "AAc") return Stratum::AAc;
  if (s == "all") return Stratum::all;
  throw InputError("unknown stratum '" + std::string(s) + "'");
}

std::vector<double> stratum_distances(const EmpiricalSample& sample, Stratum stratum) {
  std::vector<double> out;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const int inside = sample.in_x[i] + sample.in_y[i];
    const bool keep = stratum == Stratum::all || (stratum == Stratum::AA && inside == 2) ||
                      (stratum == Stratum::AcAc && inside == 0) || (stratum == Stratum::AAc && inside == 1);
    if (keep) out.push_back(sample.distances[i]);
  }
  return out;
}

bool Estimate::within(double target, double sigmas) const { return std::abs(value - target) <= sigmas * std_error; }

Estimate conditional_cdf(const EmpiricalSample& sample, Stratum stratum, double r) {
  const auto d = stratum_distances(sample, stratum);
  if (d.empty()) throw PreconditionError("stratum " + to_string(stratum) + " is empty");
  const auto hits = static_cast<double>(std::count_if(d.begin(), d.end(), [r](double x) { return x <= r; }));
  const double n = static_cast<double>(d.size());
  const double p = hits / n;
  return {p, std::sqrt(p * (1 - p) / n), d.size()};
}

KsResult ks_two_sample(std::vector<double> s1, std::vector<double> s2, double alpha) {
  if (s1.empty() || s2.empty()) throw PreconditionError("KS test needs two nonempty samples");
  if (!(alpha > 0 && alpha < 1)) throw InputError("KS level must lie in (0, 1)");
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  KsResult r;
  r.alpha = alpha;
  r.m = s1.size();
  r.n = s2.size();
  const double m = static_cast<double>(r.m), n = static_cast<double>(r.n);
  std::size_t i = 0, j = 0;
  while (i < s1.size() && j < s2.size()) {
    const double v = std::min(s1[i], s2[j]);
    while (i < s1.size() && s1[i] == v) ++i;
    while (j < s2.size() && s2[j] == v) ++j;
    r.statistic = std::max(r.statistic, std::abs(static_cast<double>(i) / m - static_cast<double>(j) / n));
  }
  r.critical = std::sqrt(-std::log(alpha / 2) / 2) * std::sqrt((m + n) / (m * n));
  r.pass = r.statistic < r.critical;
  return r;
}

ThreeSampleReport three_sample_heuristic(const EmpiricalSample& sample, double alpha, std::size_t grid_points) {
  const auto s1 = stratum_distances(sample, Stratum::AA);
  const auto s2 = stratum_distances(sample, Stratum::AcAc);
  const auto s3 = stratum_distances(sample, Stratum::AAc);
  if (s1.empty() || s2.empty() || s3.empty()) {
    throw PreconditionError("three-sample check needs nonempty AA, AcAc and AAc strata");
  }
  ThreeSampleReport rep;
  rep.s1 = s1.size();
  rep.s2 = s2.size();
  rep.s3 = s3.size();
  rep.direct = ks_two_sample(s1, s2, alpha);
  auto u1 = s1;
  u1.insert(u1.end(), s3.begin(), s3.end());
  auto u2 = s2;
  u2.insert(u2.end(), s3.begin(), s3.end());
  rep.augmented = ks_two_sample(u1, u2, alpha);
  rep.pass = rep.augmented.pass;

  std::sort(u1.begin(), u1.end());
  std::sort(u2.begin(), u2.end());
  const double top = std::max(u1.back(), u2.back());
  auto cdf = [](const std::vector<double>& v, double r) {
    return static_cast<double>(std::upper_bound(v.begin(), v.end(), r) - v.begin()) / static_cast<double>(v.size());
  };
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double r = grid_points == 1 ? top : top * static_cast<double>(g) / static_cast<double>(grid_points - 1);
    rep.augmented_cdfs.push_back({r, cdf(u1, r), cdf(u2, r)});
  }
  return rep;
}

std::optional<double> exact_volume(const ContinuousSpaceSpec& spec, double r) {
  if (r < 0) return 0.0;
  if (spec.kind == ContinuousSpaceSpec::Kind::sphere) {
    if (r >= 2) return 1.0;
    if (spec.dim == 2) return r * r / 4;
    if (spec.dim == 1) return 2 * std::asin(r / 2) / std::numbers::pi;
  }
  if (spec.kind == ContinuousSpaceSpec::Kind::torus && spec.lengths.size() == 2 &&
      r <= std::min(spec.lengths[0], spec.lengths[1]) / 2) {
    return std::numbers::pi * r * r / (spec.lengths[0] * spec.lengths[1]);
  }
  return std::nullopt;
}

std::vector<VolumeEstimate> estimate_volume_function(const ContinuousSpaceSpec& spec, const std::vector<double>& radii,
                                                     std::size_t count, std::uint64_t seed, std::size_t threads) {
  const auto sample = sample_pairs(spec, Predicate{}, count, seed, threads);
  std::vector<VolumeEstimate> out;
  for (double r : radii) out.push_back({r, conditional_cdf(sample, Stratum::all, r), exact_volume(spec, r)});
  return out;
}

Estimate mean_of(const std::vector<double>& values) {
  if (values.empty()) throw PreconditionError("mean of an empty sample");
  const double n = static_cast<double>(values.size());
  double mean = 0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = values.size() > 1 ? ss / (n - 1) : 0.0;
  return {mean, std::sqrt(var / n), values.size()};
}

Estimate mean_chord(const ContinuousSpaceSpec& spec, std::size_t count, std::uint64_t seed, std::size_t threads) {
  return mean_of(sample_pairs(spec, Predicate{}, count, seed, threads).distances);
}

std::optional<double> exact_mean_chord(const ContinuousSpaceSpec& spec) {
  if (spec.kind != ContinuousSpaceSpec::Kind::sphere) return std::nullopt;
  if (spec.dim == 1) return 4 / std::numbers::pi;
  if (spec.dim == 2) return 4.0 / 3.0;
  return std::nullopt;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto v = parse_doubles(text, ':');
  if (v.size() != 3 || !(v[2] > 0) || v[1] < v[0]) throw InputError("grid must be start:end:step with step > 0");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double r = v[0] + static_cast<double>(i) * v[2];
    if (r > v[1] + v[2] / 2) break;
    out.push_back(std::min(r, v[1]));
    if (out.size() > 1000000) throw InputError("grid too fine");
  }
  return out;
}

}  // namespace hexalab
