#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hexalab/group.hpp"
#include "hexalab/rational.hpp"
#include "hexalab/space.hpp"

namespace hexalab {

/// Group plus generating set; generators are symmetrized (inverses added).
struct CayleySpec {
  FiniteGroup group;
  std::vector<std::size_t> generators;
};

/// Path-distance space of the Cayley graph x ~ y iff x^-1 y in Sigma or
/// y^-1 x in Sigma; uniform measure. Throws on identity generators and on
/// generating sets that do not generate the group.
FiniteMetricMeasureSpace cayley_graph(const CayleySpec& spec);

/// petersen | dodecahedron | icosahedron | truncated_icosahedron | cycle | path.
/// `n` is only read for cycle and path.
FiniteMetricMeasureSpace named_graph(const std::string& name, std::size_t n = 0);

/// Path-distance space from an undirected edge list, uniform measure.
/// Throws InputError if the graph is disconnected.
FiniteMetricMeasureSpace graph_space(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                     std::vector<std::string> labels = {});

enum class ProductNorm { l1, l2, linf };

std::string to_string(ProductNorm norm);
/// "1", "2", "inf" (also "infinity", "∞"). Any other p is an exactness error.
ProductNorm parse_product_norm(const std::string& p);

/// X1 x X2 with product measure and the l^p combination of the factor
/// distances. l2 stores squared values (plain factors are squared first);
/// l1 needs two plain factors; linf needs matching kinds.
FiniteMetricMeasureSpace product_space(const FiniteMetricMeasureSpace& a, const FiniteMetricMeasureSpace& b,
                                       ProductNorm norm);

/// A constructed space together with non-fatal diagnostics.
struct Construction {
  FiniteMetricMeasureSpace space;
  std::vector<std::string> warnings;
};

/// Disjoint union at cross distance L with mu = (mu1 + mu2) / 2.
/// Both parts must be CVC with the same volume function. L is a plain
/// distance even when the parts store squared values.
Construction union_space(const FiniteMetricMeasureSpace& a, const FiniteMetricMeasureSpace& b, const Rational& cross);

/// Replace each backbone point by a part. Cross-part distance is
/// L * backbone distance; measure is backbone weight times part weight.
/// Backbone must be CVC, parts must share one volume function and have
/// diameter < 2L.
Construction graph_substitution(const FiniteMetricMeasureSpace& backbone,
                                const std::vector<FiniteMetricMeasureSpace>& parts, const Rational& scale);

/// {h,t}^n with d = sum_i a_i [x_i != y_i], uniform measure. n <= 10.
FiniteMetricMeasureSpace hamming_space(std::size_t n, const std::vector<Rational>& weights);

/// Points of a hamming_space whose toss sequence contains a run of at
/// least `run` equal consecutive tosses.
SubsetMask hamming_run_subset(const FiniteMetricMeasureSpace& hamming, std::size_t tosses, std::size_t run);

/// {0,1}^k with d = sum_i |x_i - y_i| * 2 / 3^i, uniform measure. 1 <= k <= 10.
FiniteMetricMeasureSpace cantor_space(std::size_t depth);

/// Circulant graph on Z/n with x ~ y iff y - x in the (symmetric) set.
FiniteMetricMeasureSpace zmod_graph(std::size_t n, const std::vector<long long>& generators);

}  // namespace hexalab
