#include "modsums/core_math.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modsums {

namespace {

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
}

void check_k(int k, Modulus q) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<std::uint64_t>(k) > q) {
    throw std::invalid_argument("k exceeds q (k=" + std::to_string(k) + ", q=" +
                                std::to_string(q) + ")");
  }
}

BigInt window_sum(int n, int k, Modulus q) {
  const auto row = mod_binomial_row(n, q);
  const auto w = middle_window(n, k);
  BigInt total = 0;
  for (auto j = w.lo; j <= w.hi; ++j) total += row[floor_mod(j, q)];
  return total;
}

}  // namespace

BigInt binom(int n, std::int64_t j) {
  check_n(n);
  if (j < 0 || j > n) return 0;
  j = std::min<std::int64_t>(j, n - j);
  BigInt r = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

std::vector<BigInt> mod_binomial_row(int n, Modulus q) {
  check_n(n);
  if (q < 1) throw std::invalid_argument("modulus q must be at least 1");
  std::vector<BigInt> row(q);
  BigInt c = 1;
  for (int j = 0; j <= n; ++j) {
    row[static_cast<std::size_t>(j) % q] += c;
    c *= n - j;
    c /= j + 1;
  }
  return row;
}

BigInt mod_binomial(int n, std::int64_t s, Modulus q) {
  check_n(n);
  if (q < 1) throw std::invalid_argument("modulus q must be at least 1");
  const Residue target = floor_mod(s, q);
  BigInt total = 0;
  BigInt c = 1;
  for (int j = 0; j <= n; ++j) {
    if (static_cast<std::size_t>(j) % q == target) total += c;
    c *= n - j;
    c /= j + 1;
  }
  return total;
}

Window middle_window(int n, int k) {
  check_n(n);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::int64_t d = static_cast<std::int64_t>(n) - k;
  // ceil(d / 2) without floating point, valid for either sign of d
  const std::int64_t lo = d >= 0 ? (d + 1) / 2 : -((-d) / 2);
  return {lo, lo + k - 1};
}

BigInt theorem1_bound(int n, int k, Modulus q) {
  check_n(n);
  check_k(k, q);
  return window_sum(n, k, q);
}

BigInt corollary2_bound(int n, Modulus q) {
  check_n(n);
  if (q < 1) throw std::invalid_argument("modulus q must be at least 1");
  if (static_cast<std::int64_t>(n) < static_cast<std::int64_t>(q) - 1) {
    throw std::invalid_argument("the minimum-class bound needs n >= q - 1 (n=" +
                                std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
  const std::int64_t d = static_cast<std::int64_t>(n) - q;
  const std::int64_t rho = d >= 0 ? (d + 1) / 2 : -((-d) / 2);
  return mod_binomial(n, rho, q);
}

BigInt corollary3_bound(int n, int k, Modulus q) {
  check_n(n);
  check_k(k, q);
  const Modulus r = q % 2 == 1 ? q : q / 2;
  return window_sum(n, std::min<int>(k, static_cast<int>(r)), r);
}

BigInt SumDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

SumDistribution subset_sum_distribution(const Configuration& c) {
  const Modulus q = c.modulus();
  SumDistribution d{q, std::vector<BigInt>(q)};
  d.counts[0] = 1;
  std::vector<BigInt> next(q);
  for (auto a : c.residues()) {
    // multiply by (1 + x^a) modulo x^q - 1
    for (Modulus s = 0; s < q; ++s) {
      const Modulus from = s >= a ? s - a : s + q - a;
      next[s] = d.counts[s] + d.counts[from];
    }
    d.counts.swap(next);
  }
  return d;
}

SumDistribution signed_sum_distribution(const Configuration& c) {
  const Modulus q = c.modulus();
  const auto plain = subset_sum_distribution(c);
  const std::uint64_t total = c.total();
  SumDistribution d{q, std::vector<BigInt>(q)};
  for (Modulus t = 0; t < q; ++t) {
    const auto s = (2 * static_cast<std::uint64_t>(t) + q - total) % q;
    d.counts[s] += plain.counts[t];
  }
  return d;
}

BigInt count_in_set(const SumDistribution& d, const ResidueSet& p) {
  if (d.q != p.modulus()) {
    throw std::invalid_argument("modulus mismatch: distribution mod " + std::to_string(d.q) +
                                ", target set mod " + std::to_string(p.modulus()));
  }
  BigInt total = 0;
  for (auto s : p.members()) total += d.counts[s];
  return total;
}

const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::formula: return "formula";
    case BoundMethod::partition: return "partition";
    case BoundMethod::brute_force: return "brute-force";
  }
  return "?";
}

const char* to_string(SumKind k) {
  return k == SumKind::subset ? "subset" : "signed";
}

bool BoundReport::witness_consistent() const {
  if (!witness) return true;
  const auto& w = *witness;
  const auto d = w.kind == SumKind::subset ? subset_sum_distribution(w.configuration)
                                           : signed_sum_distribution(w.configuration);
  return count_in_set(d, w.target) == value;
}

}  // namespace modsums
