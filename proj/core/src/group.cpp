#include "hexalab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hexalab/error.hpp"

namespace hexalab {

namespace {

// Mixed-radix decode, last coordinate fastest.
std::vector<int> decode(std::size_t index, const std::vector<int>& moduli) {
  std::vector<int> c(moduli.size());
  for (std::size_t k = moduli.size(); k-- > 0;) {
    c[k] = static_cast<int>(index % static_cast<std::size_t>(moduli[k]));
    index /= static_cast<std::size_t>(moduli[k]);
  }
  return c;
}

std::size_t encode(const std::vector<int>& c, const std::vector<int>& moduli) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < moduli.size(); ++k) index = index * static_cast<std::size_t>(moduli[k]) + c[k];
  return index;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic_product(std::vector<int> moduli) {
  if (moduli.empty()) throw InputError("cyclic product needs at least one factor");
  std::size_t order = 1;
  for (int m : moduli) {
    if (m < 1) throw InputError("cyclic factor order must be >= 1");
    order *= static_cast<std::size_t>(m);
    if (order > 1024) throw InputError("group order above 1024 is not supported");
  }
  FiniteGroup g;
  g.moduli_ = moduli;
  g.name_.clear();
  for (std::size_t k = 0; k < moduli.size(); ++k) g.name_ += (k ? " x Z/" : "Z/") + std::to_string(moduli[k]);

  g.labels_.resize(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto c = decode(a, moduli);
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    g.labels_[a] = s;
  }
  g.table_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto ca = decode(a, moduli);
    for (std::size_t b = 0; b < order; ++b) {
      auto cb = decode(b, moduli);
      for (std::size_t k = 0; k < cb.size(); ++k) cb[k] = (ca[k] + cb[k]) % moduli[k];
      g.table_[a * order + b] = static_cast<std::uint32_t>(encode(cb, moduli));
    }
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw InputError("symmetric groups are supported for 1 <= n <= 6 (got " + std::to_string(n) + ")");
  FiniteGroup g;
  g.degree_ = n;
  g.name_ = "S(" + std::to_string(n) + ")";
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    g.perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t a = 0; a < g.perms_.size(); ++a) {
    index[g.perms_[a]] = a;
    std::string s;
    for (int v : g.perms_[a]) s += static_cast<char>('0' + v);
    g.labels_.push_back(s);
  }
  const std::size_t order = g.perms_.size();
  g.table_.resize(order * order);
  // (a * b)(i) = a(b(i)): apply b first.
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[i] = g.perms_[a][g.perms_[b][i]];
      g.table_[a * order + b] = static_cast<std::uint32_t>(index.at(c));
    }
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
}

std::optional<std::size_t> FiniteGroup::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteGroup::element(const std::vector<long long>& coords) const {
  if (!is_cyclic_product()) throw InputError("coordinates given for a non-cyclic group");
  if (coords.size() != moduli_.size()) {
    throw InputError("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                     std::to_string(moduli_.size()));
  }
  std::vector<int> c(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const long long m = moduli_[k];
    c[k] = static_cast<int>(((coords[k] % m) + m) % m);
  }
  return encode(c, moduli_);
}

std::size_t FiniteGroup::permutation(const std::vector<int>& images) const {
  if (degree_ == 0) throw InputError("permutation given for a non-symmetric group");
  const auto it = std::find(perms_.begin(), perms_.end(), images);
  if (it == perms_.end()) throw InputError("not a permutation of 0.." + std::to_string(degree_ - 1));
  return static_cast<std::size_t>(it - perms_.begin());
}

std::vector<std::size_t> FiniteGroup::transpositions() const {
  if (degree_ == 0) throw InputError("transpositions requested for a non-symmetric group");
  std::vector<std::size_t> out;
  for (int i = 0; i < degree_; ++i) {
    for (int j = i + 1; j < degree_; ++j) {
      std::vector<int> p(static_cast<std::size_t>(degree_));
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[i], p[j]);
      out.push_back(permutation(p));
    }
  }
  return out;
}

std::vector<std::size_t> FiniteGroup::unit_vectors() const {
  if (!is_cyclic_product()) throw InputError("unit vectors requested for a non-cyclic group");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    std::vector<long long> c(moduli_.size(), 0);
    c[k] = 1;
    out.push_back(element(c));
  }
  return out;
}

}  // namespace hexalab
