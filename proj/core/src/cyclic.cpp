#include "hexalab/cyclic.hpp"

#include <algorithm>
#include <charconv>

#include "hexalab/error.hpp"

namespace hexalab {

CyclicSubset::CyclicSubset(std::size_t n, std::vector<std::size_t> elements) : n_(n), elements_(std::move(elements)) {
  if (n_ == 0) throw InputError("modulus must be positive");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= n_) {
      throw InputError("residue " + std::to_string(elements_[i]) + " outside Z/" + std::to_string(n_));
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) throw InputError("repeated residue " + std::to_string(elements_[i]));
  }
}

CyclicSubset CyclicSubset::parse(std::size_t n, std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '\t') {
      ++i;
      continue;
    }
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw InputError("cannot parse residue list '" + std::string(text) + "'");
    }
    i = static_cast<std::size_t>(ptr - text.data());
    if (v < 0 || static_cast<unsigned long long>(v) >= n) {
      throw InputError("residue " + std::to_string(v) + " outside Z/" + std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return CyclicSubset(n, std::move(out));
}

CyclicSubset CyclicSubset::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return CyclicSubset(n, std::move(all));
}

CyclicSubset CyclicSubset::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw InputError("bit masks support n <= 64");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) out.push_back(i);
  }
  return CyclicSubset(n, std::move(out));
}

bool CyclicSubset::contains(std::size_t r) const { return std::binary_search(elements_.begin(), elements_.end(), r); }

CyclicSubset CyclicSubset::translate(long long c) const {
  const long long n = static_cast<long long>(n_);
  const long long shift = ((c % n) + n) % n;
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto e : elements_) out.push_back(static_cast<std::size_t>((static_cast<long long>(e) + shift) % n));
  return CyclicSubset(n_, std::move(out));
}

CyclicSubset CyclicSubset::negate() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto e : elements_) out.push_back((n_ - e) % n_);
  return CyclicSubset(n_, std::move(out));
}

CyclicSubset CyclicSubset::scale(std::size_t u) const {
  std::vector<std::size_t> out;
  for (auto e : elements_) out.push_back(e * u % n_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return CyclicSubset(n_, std::move(out));
}

CyclicSubset CyclicSubset::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return CyclicSubset(n_, std::move(out));
}

std::uint64_t CyclicSubset::mask() const {
  if (n_ > 64) throw InputError("bit masks support n <= 64");
  std::uint64_t m = 0;
  for (auto e : elements_) m |= std::uint64_t{1} << e;
  return m;
}

std::string CyclicSubset::csv() const {
  std::string s;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s;
}

std::string CyclicSubset::str() const { return "{" + csv() + "}"; }

}  // namespace hexalab
