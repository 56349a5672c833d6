#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hexalab {

/// A subset of Z/n, elements kept sorted and distinct.
class CyclicSubset {
 public:
  CyclicSubset() = default;
  /// Throws InputError on n == 0, out-of-range or repeated residues.
  CyclicSubset(std::size_t n, std::vector<std::size_t> elements);

  /// "0,1,4,6" (also accepts spaces and braces; empty string = empty set).
  static CyclicSubset parse(std::size_t n, std::string_view text);
  static CyclicSubset full(std::size_t n);
  /// Bit i of `mask` set iff i is an element. n <= 64.
  static CyclicSubset from_mask(std::size_t n, std::uint64_t mask);

  std::size_t modulus() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::size_t>& elements() const { return elements_; }
  bool contains(std::size_t r) const;

  CyclicSubset translate(long long c) const;
  CyclicSubset negate() const;
  CyclicSubset scale(std::size_t u) const;
  CyclicSubset complement() const;
  /// Requires n <= 64.
  std::uint64_t mask() const;

  /// "{0,1,4,6}"
  std::string str() const;
  /// "0,1,4,6"
  std::string csv() const;

  friend bool operator==(const CyclicSubset&, const CyclicSubset&) = default;
  friend auto operator<=>(const CyclicSubset&, const CyclicSubset&) = default;

 private:
  std::size_t n_ = 1;
  std::vector<std::size_t> elements_;
};

}  // namespace hexalab
