#pragma once

// Test-only reference computations. Deliberately naive: every assignment is
// summed from scratch, and binomials come from Pascal's triangle.

#include "modsums/bigint.hpp"
#include "modsums/types.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using modsums::BigInt;
using modsums::Modulus;
using modsums::Residue;

inline std::vector<BigInt> pascal_row(int n) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row.swap(next);
  }
  return row;
}

inline BigInt mod_binomial(int n, std::int64_t s, Modulus q) {
  const auto row = pascal_row(n);
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) {
    if (((j - s) % static_cast<std::int64_t>(q) + q) % q == 0) total += row[static_cast<std::size_t>(j)];
  }
  return total;
}

inline std::vector<std::uint64_t> subset_counts(Modulus q, const std::vector<Residue>& a) {
  std::vector<std::uint64_t> counts(q, 0);
  const std::uint64_t total = std::uint64_t{1} << a.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((mask >> i) & 1U) s += a[i];
    }
    ++counts[s % q];
  }
  return counts;
}

inline std::vector<std::uint64_t> signed_counts(Modulus q, const std::vector<Residue>& a) {
  std::vector<std::uint64_t> counts(q, 0);
  const std::uint64_t total = std::uint64_t{1} << a.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += ((mask >> i) & 1U) ? static_cast<std::int64_t>(a[i]) : -static_cast<std::int64_t>(a[i]);
    }
    const auto m = static_cast<std::int64_t>(q);
    ++counts[static_cast<std::size_t>(((s % m) + m) % m)];
  }
  return counts;
}

inline std::vector<Residue> units(Modulus q) {
  std::vector<Residue> u;
  for (Residue a = 0; a < q; ++a) {
    if (modsums::gcd(a, q) == 1) u.push_back(a);
  }
  return u;
}

inline std::vector<Residue> random_configuration(std::mt19937_64& rng, Modulus q, int n) {
  const auto u = units(q);
  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
  std::vector<Residue> a(static_cast<std::size_t>(n));
  for (auto& x : a) x = u[pick(rng)];
  return a;
}

inline std::vector<std::int64_t> random_subset(std::mt19937_64& rng, Modulus q, int k) {
  std::vector<std::int64_t> all(q);
  for (Modulus i = 0; i < q; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return all;
}

// Calls f(config) for every sequence in units(q)^n.
template <class F>
void for_each_configuration(Modulus q, int n, F&& f) {
  const auto u = units(q);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<Residue> a(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) a[i] = u[idx[i]];
    f(a);
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] + 1 == u.size()) idx[--i] = 0;
    if (i == 0) return;
    ++idx[i - 1];
  }
}

}  // namespace oracle
