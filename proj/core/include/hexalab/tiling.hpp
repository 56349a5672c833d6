#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hexalab/cyclic.hpp"

namespace hexalab {

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
/// Memoized; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic(std::size_t d);

/// F_A(t) = sum_{k in A} exp(-2 pi i k t / n). Floating point, display only.
std::complex<double> dft_eval(const CyclicSubset& a, std::size_t t);

/// True iff Phi_d divides A(x) = sum_{k in A} x^k. d must divide n.
bool cyclotomic_divides(const CyclicSubset& a, std::size_t d);

struct ZeroSet {
  std::size_t n = 0;
  std::vector<std::size_t> zeros;     // residues t with F_A(t) = 0
  std::vector<std::size_t> divisors;  // d | n with Phi_d | A(x)
  bool contains(std::size_t t) const;
  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
};

/// Exact zeros of F_A: F_A(t) = 0 iff Phi_{n / gcd(t, n)} divides A(x).
ZeroSet zero_set(const CyclicSubset& a);

/// Z_A u Z_B = Z_n \ {0} and |A| |B| = n. Throws InputError on mismatched moduli.
bool is_tiling_pair(const CyclicSubset& a, const CyclicSubset& b);

/// Every residue is a + b in exactly one way.
bool direct_sum_check(const CyclicSubset& a, const CyclicSubset& b);

/// All B with A (+) B = Z_n, sorted. With normalize_zero only B containing 0. Empty when |A| does not divide n.
std::vector<CyclicSubset> find_complements(const CyclicSubset& a, bool normalize_zero = true,
                                           std::size_t threads = 1);

/// Smallest 0 < p < n with A + p = A. Full and empty sets have period 1.
std::optional<std::size_t> is_periodic(const CyclicSubset& a);

/// Tiling pair with both factors aperiodic.
bool is_vuza_pair(const CyclicSubset& a, const CyclicSubset& b);

/// Lambda containing 0 with |Lambda| = |A| and all differences in Z_A;
/// the lexicographically first one, or nullopt.
std::optional<CyclicSubset> find_spectrum(const CyclicSubset& a);

struct TilingSweepReport {
  std::size_t n = 0;
  std::uint64_t pairs = 0;         // pairs (A, B) with |A| |B| = n examined
  std::uint64_t tiling_pairs = 0;  // of which direct sums
  std::uint64_t disagreements = 0;
  std::optional<std::pair<CyclicSubset, CyclicSubset>> first_disagreement;
};

/// Compares is_tiling_pair with direct_sum_check on every pair of subsets
/// of Z_n whose sizes multiply to n. n <= 20.
TilingSweepReport tiling_proposition_sweep(std::size_t n, std::size_t threads = 1);

}  // namespace hexalab
