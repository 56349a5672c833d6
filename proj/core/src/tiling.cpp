#include "hexalab/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hexalab/error.hpp"

namespace hexalab {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_sub_mul(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out)) {
    throw std::overflow_error("polynomial coefficient overflow");
  }
  return out;
}

// In-place: num becomes the remainder modulo the monic divisor; returns the quotient.
Poly divide_monic(Poly& num, const Poly& divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (num.size() <= dd) return {};
  Poly quotient(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quotient[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = checked_sub_mul(num[i - dd + j], c, divisor[j]);
  }
  num.resize(dd);
  return quotient;
}

std::recursive_mutex cyclotomic_mutex;
std::map<std::size_t, Poly> cyclotomic_cache;

void require_same_modulus(const CyclicSubset& a, const CyclicSubset& b) {
  if (a.modulus() != b.modulus()) {
    throw InputError("subsets live in Z/" + std::to_string(a.modulus()) + " and Z/" + std::to_string(b.modulus()));
  }
}

std::vector<std::size_t> divisors_of(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

const Poly& cyclotomic(std::size_t d) {
  if (d == 0) throw InputError("cyclotomic index must be positive");
  std::lock_guard lock(cyclotomic_mutex);
  if (auto it = cyclotomic_cache.find(d); it != cyclotomic_cache.end()) return it->second;
  Poly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Poly rem = p;
    p = divide_monic(rem, cyclotomic(e));
    if (std::any_of(rem.begin(), rem.end(), [](auto c) { return c != 0; })) {
      throw InvariantViolation("cyclotomic division left a remainder");
    }
  }
  return cyclotomic_cache.emplace(d, std::move(p)).first->second;
}

std::complex<double> dft_eval(const CyclicSubset& a, std::size_t t) {
  std::complex<double> sum = 0.0;
  const std::size_t n = a.modulus();
  for (auto k : a.elements()) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * t % n) / static_cast<double>(n);
    sum += std::polar(1.0, angle);
  }
  return sum;
}

bool cyclotomic_divides(const CyclicSubset& a, std::size_t d) {
  if (d == 0 || a.modulus() % d != 0) throw InputError("d must divide the modulus");
  // Phi_d divides x^d - 1, so exponents can be folded mod d first.
  Poly folded(d, 0);
  for (auto k : a.elements()) ++folded[k % d];
  divide_monic(folded, cyclotomic(d));
  return std::all_of(folded.begin(), folded.end(), [](auto c) { return c == 0; });
}

bool ZeroSet::contains(std::size_t t) const { return std::binary_search(zeros.begin(), zeros.end(), t); }

ZeroSet zero_set(const CyclicSubset& a) {
  ZeroSet z;
  z.n = a.modulus();
  std::vector<bool> zero_at_divisor(z.n + 1, false);
  for (auto d : divisors_of(z.n)) {
    if (cyclotomic_divides(a, d)) {
      zero_at_divisor[d] = true;
      z.divisors.push_back(d);
    }
  }
  for (std::size_t t = 0; t < z.n; ++t) {
    if (zero_at_divisor[z.n / std::gcd(t, z.n)]) z.zeros.push_back(t);
  }
  return z;
}

bool is_tiling_pair(const CyclicSubset& a, const CyclicSubset& b) {
  require_same_modulus(a, b);
  const std::size_t n = a.modulus();
  if (a.size() * b.size() != n) return false;
  const auto za = zero_set(a);
  const auto zb = zero_set(b);
  for (std::size_t t = 1; t < n; ++t) {
    if (!za.contains(t) && !zb.contains(t)) return false;
  }
  return true;
}

bool direct_sum_check(const CyclicSubset& a, const CyclicSubset& b) {
  require_same_modulus(a, b);
  const std::size_t n = a.modulus();
  std::vector<int> hits(n, 0);
  for (auto x : a.elements()) {
    for (auto y : b.elements()) ++hits[(x + y) % n];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

namespace {

struct ComplementSearch {
  const CyclicSubset& a;
  std::size_t n;
  std::vector<char> covered;
  std::vector<std::size_t> chosen;
  std::vector<CyclicSubset>* out;

  bool fits(std::size_t b) const {
    for (auto x : a.elements()) {
      if (covered[(x + b) % n]) return false;
    }
    return true;
  }
  void place(std::size_t b, char v) {
    for (auto x : a.elements()) covered[(x + b) % n] = v;
  }
  std::optional<std::size_t> first_uncovered() const {
    for (std::size_t u = 0; u < n; ++u) {
      if (!covered[u]) return u;
    }
    return std::nullopt;
  }
  std::vector<std::size_t> candidates(std::size_t u) const {
    std::vector<std::size_t> out_b;
    for (auto x : a.elements()) {
      const std::size_t b = (u + n - x) % n;
      if (fits(b)) out_b.push_back(b);
    }
    return out_b;
  }
  void run() {
    const auto u = first_uncovered();
    if (!u) {
      out->emplace_back(n, chosen);
      return;
    }
    for (auto b : candidates(*u)) {
      place(b, 1);
      chosen.push_back(b);
      run();
      chosen.pop_back();
      place(b, 0);
    }
  }
};

}  // namespace

std::vector<CyclicSubset> find_complements(const CyclicSubset& a, bool normalize_zero, std::size_t threads) {
  const std::size_t n = a.modulus();
  if (a.empty() || n % a.size() != 0) return {};
  std::vector<CyclicSubset> found;
  ComplementSearch root{a, n, std::vector<char>(n, 0), {}, &found};
  if (normalize_zero) {
    root.place(0, 1);
    root.chosen.push_back(0);
  }
  const auto u = root.first_uncovered();
  if (!u) {
    found.emplace_back(n, root.chosen);
    return found;
  }
  const auto branches = root.candidates(*u);
  std::vector<std::vector<CyclicSubset>> partial(branches.size());
  auto work = [&](std::size_t i) {
    ComplementSearch s = root;
    s.out = &partial[i];
    s.place(branches[i], 1);
    s.chosen.push_back(branches[i]);
    s.run();
  };
  if (threads <= 1 || branches.size() <= 1) {
    for (std::size_t i = 0; i < branches.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(threads, branches.size()); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < branches.size();) work(i);
      });
    }
  }
  for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<std::size_t> is_periodic(const CyclicSubset& a) {
  const std::size_t n = a.modulus();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && a.translate(static_cast<long long>(p)) == a) return p;
  }
  if (n == 1) return 1;
  return std::nullopt;
}

bool is_vuza_pair(const CyclicSubset& a, const CyclicSubset& b) {
  return is_tiling_pair(a, b) && !is_periodic(a) && !is_periodic(b);
}

std::optional<CyclicSubset> find_spectrum(const CyclicSubset& a) {
  const std::size_t n = a.modulus();
  const std::size_t k = a.size();
  if (k == 0) return CyclicSubset(n, {});
  const auto z = zero_set(a);
  std::vector<char> in_z(n, 0);
  for (auto t : z.zeros) in_z[t] = 1;

  std::vector<std::size_t> clique{0};
  auto extend = [&](auto&& self, std::size_t from) -> bool {
    if (clique.size() == k) return true;
    for (std::size_t c = from; c < n; ++c) {
      if (n - c < k - clique.size()) return false;
      bool ok = true;
      for (auto m : clique) {
        if (!in_z[(c + n - m) % n]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      clique.push_back(c);
      if (self(self, c + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (!extend(extend, 1)) return std::nullopt;
  return CyclicSubset(n, clique);
}

TilingSweepReport tiling_proposition_sweep(std::size_t n, std::size_t threads) {
  if (n == 0 || n > 20) throw InputError("tiling sweep supports 1 <= n <= 20");
  const auto divs = divisors_of(n);
  std::uint32_t needed = 0;  // bit j: divisor divs[j] > 1
  for (std::size_t j = 1; j < divs.size(); ++j) needed |= 1u << j;

  // Per cardinality: masks and their divisor-zero bitmasks.
  struct Family {
    std::vector<std::uint32_t> masks;
    std::vector<std::uint32_t> zeros;
  };
  std::map<std::size_t, Family> families;
  for (auto s : divs) {
    Family f;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) != s) continue;
      const auto sub = CyclicSubset::from_mask(n, m);
      std::uint32_t z = 0;
      for (std::size_t j = 0; j < divs.size(); ++j) {
        if (cyclotomic_divides(sub, divs[j])) z |= 1u << j;
      }
      f.masks.push_back(m);
      f.zeros.push_back(z);
    }
    families.emplace(s, std::move(f));
  }

  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  auto rotl = [&](std::uint32_t m, std::size_t r) {
    return r == 0 ? m : ((m << r) | (m >> (n - r))) & full;
  };

  TilingSweepReport report;
  report.n = n;
  std::mutex merge;
  for (auto s : divs) {
    const Family& fa = families.at(s);
    const Family& fb = families.at(n / s);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      TilingSweepReport local;
      for (std::size_t i; (i = next++) < fa.masks.size();) {
        const auto ma = fa.masks[i];
        for (std::size_t j = 0; j < fb.masks.size(); ++j) {
          const auto mb = fb.masks[j];
          const bool proposition = ((fa.zeros[i] | fb.zeros[j]) & needed) == needed;
          std::uint32_t acc = 0;
          bool direct = true;
          for (std::uint32_t rest = ma; rest && direct; rest &= rest - 1) {
            const auto shifted = rotl(mb, static_cast<std::size_t>(std::countr_zero(rest)));
            direct = (acc & shifted) == 0;
            acc |= shifted;
          }
          ++local.pairs;
          if (direct) ++local.tiling_pairs;
          if (direct != proposition) {
            ++local.disagreements;
            if (!local.first_disagreement) {
              local.first_disagreement.emplace(CyclicSubset::from_mask(n, ma), CyclicSubset::from_mask(n, mb));
            }
          }
        }
      }
      std::lock_guard lock(merge);
      report.pairs += local.pairs;
      report.tiling_pairs += local.tiling_pairs;
      report.disagreements += local.disagreements;
      if (local.first_disagreement &&
          (!report.first_disagreement || *local.first_disagreement < *report.first_disagreement)) {
        report.first_disagreement = local.first_disagreement;
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < std::max<std::size_t>(threads, 1); ++w) pool.emplace_back(work);
    work();
  }
  return report;
}

}  // namespace hexalab
