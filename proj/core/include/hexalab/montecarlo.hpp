#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hexalab {

/// sphere(d): unit S^d in R^(d+1). torus(L1..Lk): product of circles of the
/// given lengths. klein(a, b): R^2 modulo (x, y) -> (x + a, y) and the glide
/// (x, y) -> (-x, y + b); fundamental domain [0, a) x [0, b).
struct ContinuousSpaceSpec {
  enum class Kind { sphere, torus, klein };
  Kind kind = Kind::sphere;
  std::size_t dim = 2;          // sphere dimension d
  std::vector<double> lengths;  // torus side lengths, or {a, b} for klein

  static ContinuousSpaceSpec sphere(std::size_t d);
  static ContinuousSpaceSpec torus(std::vector<double> lengths);
  static ContinuousSpaceSpec klein(double a, double b);
  /// "sphere:2", "torus:1,1", "klein:1,1".
  static ContinuousSpaceSpec parse(std::string_view text);

  /// Number of coordinates of a sampled point.
  std::size_t coordinates() const;
  std::string str() const;
};

enum class SphereMetric { chord, geodesic };

using Point = std::vector<double>;

Point sample_point(const ContinuousSpaceSpec& spec, std::mt19937_64& rng);
double distance(const ContinuousSpaceSpec& spec, const Point& p, const Point& q,
                SphereMetric metric = SphereMetric::chord);
/// Flat Klein bottle distance, minimizing over images (k a +- x, y + l b)
/// with |k|, |l| <= window and sign + iff l is even.
double klein_distance(double a, double b, const Point& p, const Point& q, int window = 2);

/// Measurable subset A used to stratify pairs.
/// whole: everything. band: |z| <= 1/2 on a sphere (latitude within 30 deg).
/// caps: |z| > 1/2. hemisphere: z >= 0. strip: first half of the last
/// coordinate's period on a torus or Klein bottle.
struct Predicate {
  enum class Kind { whole, band, caps, hemisphere, strip };
  Kind kind = Kind::whole;
  static Predicate parse(std::string_view name);
  std::string str() const;
  bool operator()(const ContinuousSpaceSpec& spec, const Point& p) const;
};

struct EmpiricalSample {
  ContinuousSpaceSpec spec;
  Predicate predicate;
  std::uint64_t seed = 0;
  std::vector<double> distances;
  std::vector<std::uint8_t> in_x;  // x_k in A
  std::vector<std::uint8_t> in_y;  // y_k in A
  std::size_t size() const { return distances.size(); }
};

/// Pairs are generated in fixed chunks, each from its own seed stream, so
/// the sample is identical for every thread count.
EmpiricalSample sample_pairs(const ContinuousSpaceSpec& spec, const Predicate& predicate, std::size_t count,
                             std::uint64_t seed, std::size_t threads = 1,
                             SphereMetric metric = SphereMetric::chord);

enum class Stratum { AA, AcAc, AAc, all };
std::string to_string(Stratum s);
Stratum parse_stratum(std::string_view s);

/// Distances of the pairs in a stratum. AAc = exactly one endpoint in A.
std::vector<double> stratum_distances(const EmpiricalSample& sample, Stratum stratum);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  bool within(double target, double sigmas = 3.0) const;
};

/// P(D <= r | stratum) with binomial standard error. PreconditionError on
/// an empty stratum.
Estimate conditional_cdf(const EmpiricalSample& sample, Stratum stratum, double r);

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;
  double alpha = 0.01;
  std::size_t m = 0;
  std::size_t n = 0;
  bool pass = false;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic critical value
/// sqrt(-ln(alpha / 2) / 2) * sqrt((m + n) / (m n)).
KsResult ks_two_sample(std::vector<double> s1, std::vector<double> s2, double alpha = 0.01);

struct CdfPoint {
  double r = 0.0;
  double first = 0.0;
  double second = 0.0;
};

struct ThreeSampleReport {
  std::size_t s1 = 0, s2 = 0, s3 = 0;  // AA, AcAc, AAc counts
  KsResult direct;                     // S1 vs S2
  KsResult augmented;                  // S1 u S3 vs S2 u S3
  std::vector<CdfPoint> augmented_cdfs;
  bool pass = false;
};

ThreeSampleReport three_sample_heuristic(const EmpiricalSample& sample, double alpha = 0.01,
                                         std::size_t grid_points = 21);

struct VolumeEstimate {
  double r = 0.0;
  Estimate estimate;
  std::optional<double> exact;  // closed form when known (sphere(2): r^2 / 4)
};

/// rho(r) = P(D <= r) for two independent uniform points.
std::vector<VolumeEstimate> estimate_volume_function(const ContinuousSpaceSpec& spec, const std::vector<double>& radii,
                                                     std::size_t count, std::uint64_t seed, std::size_t threads = 1);

/// Closed-form rho(r) for chord distance where known.
std::optional<double> exact_volume(const ContinuousSpaceSpec& spec, double r);

/// Sample mean with standard error. Empty input is a PreconditionError.
Estimate mean_of(const std::vector<double>& values);

Estimate mean_chord(const ContinuousSpaceSpec& spec, std::size_t count, std::uint64_t seed, std::size_t threads = 1);

/// 4/pi on S^1, 4/3 on S^2.
std::optional<double> exact_mean_chord(const ContinuousSpaceSpec& spec);

/// "a:b:step" inclusive grid; the end point is included within step / 2.
std::vector<double> parse_grid(std::string_view text);

}  // namespace hexalab
