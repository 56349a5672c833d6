#pragma once

// Shared accumulation kernels for the space-level modules. Not installed.

#include <vector>

#include "hexalab/space.hpp"

namespace hexalab::detail {

/// True when every member of `bits` has the same weight; that weight goes to `common`.
bool uniform_on(const FiniteMetricMeasureSpace& space, const std::vector<bool>& bits, Rational& common);

/// mass[v] = sum over i in a, j in b with value_id(i,j) = v of w_i w_j.
std::vector<Rational> pair_masses_by_id(const FiniteMetricMeasureSpace& space, const std::vector<bool>& a,
                                        const std::vector<bool>& b);

/// mass[v] = mu{y : value_id(x, y) = v}.
std::vector<Rational> sphere_masses(const FiniteMetricMeasureSpace& space, std::size_t x);

DistanceDistribution to_distribution(const FiniteMetricMeasureSpace& space, const std::vector<Rational>& by_id);

}  // namespace hexalab::detail
