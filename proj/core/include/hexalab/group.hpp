#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hexalab {

/// A finite group given by its full multiplication table.
///
/// Elements are indices 0..order()-1, with 0 the identity. Only two
/// families are constructible: products of cyclic groups and symmetric
/// groups S(n) for n <= 6.
class FiniteGroup {
 public:
  /// Z/n1 x ... x Z/nk. Element labels are the coordinates joined by ','.
  static FiniteGroup cyclic_product(std::vector<int> moduli);
  /// S(n), n in 1..6. Labels are one-line notation, e.g. "102" for (0 1).
  static FiniteGroup symmetric(int n);

  std::size_t order() const { return labels_.size(); }
  std::size_t identity() const { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Human-readable description, e.g. "Z/3 x Z/4" or "S(3)".
  const std::string& name() const { return name_; }

  bool is_cyclic_product() const { return !moduli_.empty(); }
  const std::vector<int>& moduli() const { return moduli_; }
  int symmetric_degree() const { return degree_; }

  /// Element of a cyclic product from coordinates (reduced mod each n_i).
  std::size_t element(const std::vector<long long>& coords) const;
  /// Element of S(n) from one-line notation (a permutation of 0..n-1).
  std::size_t permutation(const std::vector<int>& images) const;
  /// All transpositions of S(n).
  std::vector<std::size_t> transpositions() const;
  /// Coordinate unit vectors (0,..,1,..,0) of a cyclic product.
  std::vector<std::size_t> unit_vectors() const;

 private:
  std::string name_;
  std::vector<int> moduli_;
  int degree_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::vector<int>> perms_;

  void finish();
};

}  // namespace hexalab
