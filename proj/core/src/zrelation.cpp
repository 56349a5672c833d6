#include "hexalab/zrelation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "hexalab/error.hpp"
#include "hexalab/seed.hpp"

namespace hexalab {

namespace {

using Mask = std::uint64_t;

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// x -> x + r (mod n)
Mask rotate(Mask m, std::size_t r, std::size_t n) {
  if (r == 0) return m;
  return ((m << r) | (m >> (n - r))) & full_mask(n);
}

// x -> -x (mod n)
Mask reflect(Mask m, std::size_t n) {
  Mask out = m & 1u;
  for (Mask rest = m & ~Mask{1}; rest; rest &= rest - 1) {
    out |= Mask{1} << (n - static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

// x precedes y when the lowest residue where they differ belongs to x,
// i.e. x's sorted residue list is lexicographically smaller.
bool precedes(Mask x, Mask y) {
  const Mask diff = x ^ y;
  return diff != 0 && (x & (diff & (~diff + 1))) != 0;
}

Mask canonical_mask(Mask m, std::size_t n) {
  Mask best = m;
  const Mask r = reflect(m, n);
  for (std::size_t s = 0; s < n; ++s) {
    const Mask a = rotate(m, s, n);
    const Mask b = rotate(r, s, n);
    if (precedes(a, best)) best = a;
    if (precedes(b, best)) best = b;
  }
  return best;
}

bool is_canonical(Mask m, std::size_t n) {
  const Mask r = reflect(m, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (precedes(rotate(m, s, n), m) || precedes(rotate(r, s, n), m)) return false;
  }
  return true;
}

void interval_counts(Mask m, std::size_t n, std::vector<std::uint32_t>& out) {
  const std::size_t half = n / 2;
  out.assign(half, 0);
  for (std::size_t i = 1; i <= half; ++i) {
    const auto c = static_cast<std::uint32_t>(std::popcount(m & rotate(m, i, n)));
    out[i - 1] = (2 * i == n) ? c / 2 : c;
  }
}

void require_mask_modulus(std::size_t n) {
  if (n == 0 || n > 64) throw InputError("interval enumeration supports 1 <= n <= 64");
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(r);
}

std::string IntervalVector::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts[i]);
  }
  return s + "]";
}

IntervalVector interval_content(const CyclicSubset& a) {
  const std::size_t n = a.modulus();
  IntervalVector v{n, std::vector<std::uint32_t>(n / 2, 0)};
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const std::size_t d = e[j] - e[i];
      ++v.counts[std::min(d, n - d) - 1];
    }
  }
  return v;
}

CyclicSubset ti_canonical(const CyclicSubset& a) {
  const std::size_t n = a.modulus();
  if (n <= 64) return CyclicSubset::from_mask(n, canonical_mask(a.mask(), n));
  CyclicSubset best = a;
  const auto r = a.negate();
  for (std::size_t s = 0; s < n; ++s) {
    best = std::min({best, a.translate(static_cast<long long>(s)), r.translate(static_cast<long long>(s))},
                    [](const CyclicSubset& x, const CyclicSubset& y) { return x.elements() < y.elements(); });
  }
  return best;
}

BabbittReport complement_homometry_check(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                         std::uint64_t exhaustive_limit) {
  require_mask_modulus(n);
  if (n % 2 != 0) throw PreconditionError("complement check needs an even modulus");
  BabbittReport report;
  report.n = n;
  const std::size_t k = n / 2;
  const Mask full = full_mask(n);
  std::vector<std::uint32_t> va, vc;
  auto check = [&](Mask m) {
    ++report.checked;
    interval_counts(m, n, va);
    interval_counts(full & ~m, n, vc);
    if (va != vc && report.holds) {
      report.holds = false;
      report.witness = CyclicSubset::from_mask(n, m);
    }
  };
  if (binomial(n, k) <= exhaustive_limit) {
    // Gosper's hack over all k-subsets in increasing mask order.
    Mask m = (Mask{1} << k) - 1;
    while (true) {
      check(m);
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      if (r == 0 || (r & ~full) != 0) break;
      m = (((r ^ m) >> 2) / c) | r;
      if ((m & ~full) != 0) break;
    }
  } else {
    report.exhaustive = false;
    std::vector<std::size_t> perm(n);
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::mt19937_64 rng(stream_seed(seed, i));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Mask m = 0;
      for (std::size_t j = 0; j < k; ++j) m |= Mask{1} << perm[j];
      check(m);
    }
  }
  return report;
}

std::vector<std::int64_t> complement_difference(std::size_t n, std::size_t k) {
  if (k > n) throw PreconditionError("subset larger than the modulus");
  std::vector<std::size_t> first(k);
  std::iota(first.begin(), first.end(), 0);
  const CyclicSubset a(n, first);
  const auto va = interval_content(a);
  const auto vc = interval_content(a.complement());
  std::vector<std::int64_t> diff(va.counts.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = static_cast<std::int64_t>(vc.counts[i]) - static_cast<std::int64_t>(va.counts[i]);
  }
  return diff;
}

std::size_t HomometryClassReport::max_class_size() const {
  return histogram.empty() ? 0 : histogram.rbegin()->first;
}

HomometryClassReport homometry_classes(std::size_t n, std::size_t k, std::size_t threads, std::uint64_t budget) {
  require_mask_modulus(n);
  if (k > n) throw PreconditionError("subset size exceeds the modulus");
  const auto total = binomial(n, k);
  if (total > budget) {
    throw BudgetError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                      " exceeds the budget of " + std::to_string(budget));
  }

  using Buckets = std::map<std::vector<std::uint32_t>, std::vector<Mask>>;
  Buckets merged;
  if (k == 0) {
    merged[std::vector<std::uint32_t>(n / 2, 0)].push_back(0);
  } else {
    // Canonical forms contain 0; tasks fix the next (up to) two elements.
    const std::size_t depth = std::min<std::size_t>(k - 1, 2);
    std::vector<std::vector<std::size_t>> prefixes;
    std::vector<std::size_t> cur;
    auto gen = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() == depth) {
        prefixes.push_back(cur);
        return;
      }
      for (std::size_t c = from; c < n; ++c) {
        cur.push_back(c);
        self(self, c + 1);
        cur.pop_back();
      }
    };
    gen(gen, 1);

    std::atomic<std::size_t> next{0};
    std::vector<Buckets> partial(std::max<std::size_t>(threads, 1));
    auto work = [&](Buckets& out) {
      std::vector<std::uint32_t> iv;
      for (std::size_t t; (t = next++) < prefixes.size();) {
        Mask m = 1;
        for (auto c : prefixes[t]) m |= Mask{1} << c;
        const std::size_t start = prefixes[t].empty() ? 1 : prefixes[t].back() + 1;
        auto rec = [&](auto&& self, Mask mask, std::size_t from, std::size_t left) -> void {
          if (left == 0) {
            if (is_canonical(mask, n)) {
              interval_counts(mask, n, iv);
              out[iv].push_back(mask);
            }
            return;
          }
          for (std::size_t c = from; c + left <= n; ++c) self(self, mask | (Mask{1} << c), c + 1, left - 1);
        };
        rec(rec, m, start, k - 1 - depth);
      }
    };
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 1; w < partial.size(); ++w) pool.emplace_back(work, std::ref(partial[w]));
      work(partial[0]);
    }
    for (auto& p : partial) {
      for (auto& [key, masks] : p) {
        auto& dst = merged[key];
        dst.insert(dst.end(), masks.begin(), masks.end());
      }
    }
  }

  HomometryClassReport report;
  report.n = n;
  report.k = k;
  for (auto& [key, masks] : merged) {
    HomometryClass cls;
    cls.vector = IntervalVector{n, key};
    for (auto m : masks) cls.representatives.push_back(CyclicSubset::from_mask(n, m));
    std::sort(cls.representatives.begin(), cls.representatives.end());
    report.ti_classes += masks.size();
    ++report.histogram[masks.size()];
    report.classes.push_back(std::move(cls));
  }
  return report;
}

std::string z_tuple_report(const HomometryClassReport& report, std::size_t min_size) {
  std::ostringstream os;
  os << "interval_vector,class_size,representatives\n";
  for (const auto& cls : report.classes) {
    if (cls.representatives.size() < min_size) continue;
    os << '"' << cls.vector.str() << "\"," << cls.representatives.size() << ",\"";
    for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
      if (i) os << ' ';
      os << cls.representatives[i].str();
    }
    os << "\"\n";
  }
  return os.str();
}

}  // namespace hexalab
