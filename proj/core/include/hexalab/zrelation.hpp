#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexalab/cyclic.hpp"

namespace hexalab {

/// counts[i - 1] = number of unordered pairs at circular interval i,
/// for i = 1 .. floor(n / 2).
struct IntervalVector {
  std::size_t n = 0;
  std::vector<std::uint32_t> counts;

  std::string str() const;  // "[1,1,1,1,1,1]"
  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
  friend auto operator<=>(const IntervalVector&, const IntervalVector&) = default;
};

IntervalVector interval_content(const CyclicSubset& a);

/// The dihedral image of A whose sorted residue list is lexicographically
/// smallest. Nonempty canonical forms always contain 0.
CyclicSubset ti_canonical(const CyclicSubset& a);

struct BabbittReport {
  std::size_t n = 0;
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::optional<CyclicSubset> witness;  // first (n/2)-subset not homometric to its complement
};

/// interval_content(A) == interval_content(A^c) for (n/2)-subsets A.
/// Exhaustive when C(n, n/2) <= exhaustive_limit, else `samples` seeded
/// random subsets. n even, n <= 64.
BabbittReport complement_homometry_check(std::size_t n, std::uint64_t samples = 10000, std::uint64_t seed = 0,
                                         std::uint64_t exhaustive_limit = 1000000);

/// interval_content(A^c) - interval_content(A) for any k-subset: it only
/// depends on (n, k). Returned as signed counts indexed like IntervalVector.
std::vector<std::int64_t> complement_difference(std::size_t n, std::size_t k);

struct HomometryClass {
  IntervalVector vector;
  std::vector<CyclicSubset> representatives;  // T/I canonical forms, sorted
};

struct HomometryClassReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t ti_classes = 0;
  std::vector<HomometryClass> classes;             // sorted by interval vector
  std::map<std::size_t, std::uint64_t> histogram;  // class size -> number of classes
  std::size_t max_class_size() const;
};

/// Groups all T/I classes of k-subsets of Z_n by interval vector.
/// Throws BudgetError when C(n, k) > budget. n <= 64.
HomometryClassReport homometry_classes(std::size_t n, std::size_t k, std::size_t threads = 1,
                                       std::uint64_t budget = 5000000);

/// CSV with header "interval_vector,class_size,representatives" listing the
/// classes of size >= min_size.
std::string z_tuple_report(const HomometryClassReport& report, std::size_t min_size);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace hexalab
