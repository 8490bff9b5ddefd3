#include "modsums/extremal.hpp"

#include "modsums/core_math.hpp"

#include <algorithm>
#include <stdexcept>

namespace modsums {

namespace {

void check_k(int k, Modulus q) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<std::uint64_t>(k) > q) throw std::invalid_argument("k exceeds q");
}

ExtremalInstance certify(Configuration c, ResidueSet target, const BigInt& formula,
                         const char* what) {
  auto counted = count_in_set(subset_sum_distribution(c), target);
  if (counted != formula) {
    throw std::logic_error(std::string(what) + ": witness " + c.to_string() + " / " +
                           target.to_string() + " reaches " + counted.str() +
                           ", formula gives " + formula.str());
  }
  return {std::move(c), std::move(target), std::move(counted)};
}

}  // namespace

std::vector<std::int64_t> centered_sequence(int k) {
  std::vector<std::int64_t> seq;
  seq.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) seq.push_back(i % 2 == 1 ? (i + 1) / 2 : -(i / 2));
  return seq;
}

ExtremalInstance allones_extremal(int n, int k, Modulus q) {
  check_k(k, q);
  const auto w = middle_window(n, k);
  std::vector<std::int64_t> window;
  for (auto j = w.lo; j <= w.hi; ++j) window.push_back(j);
  return certify(Configuration::all_ones(n, q), ResidueSet(q, window), theorem1_bound(n, k, q),
                 "all-ones extremal");
}

ExtremalInstance split_extremal(int n, int k, Modulus q) {
  check_k(k, q);
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<std::int64_t> values(static_cast<std::size_t>(n), -1);
  std::fill_n(values.begin(), (n + 1) / 2, 1);
  // k <= q consecutive terms of 0,1,-1,2,-2,... span fewer than q integers,
  // so they stay distinct mod q; ResidueSet rejects any collision.
  return certify(Configuration::from_integers(q, values), ResidueSet(q, centered_sequence(k)),
                 theorem1_bound(n, k, q), "split extremal");
}

ExtremalInstance corollary2_extremal(int n, Modulus q) {
  const auto bound = corollary2_bound(n, q);
  const std::int64_t d = static_cast<std::int64_t>(n) - q;
  const std::int64_t rho = d >= 0 ? (d + 1) / 2 : -((-d) / 2);
  auto c = Configuration::all_ones(n, q);
  const auto dist = subset_sum_distribution(c);
  const auto& smallest = *std::min_element(dist.counts.begin(), dist.counts.end());
  if (smallest != bound) {
    throw std::logic_error("minimum class of all-ones distribution is " + smallest.str() +
                           ", formula gives " + bound.str());
  }
  return certify(std::move(c), ResidueSet(q, {rho}), bound, "minimum-class extremal");
}

}  // namespace modsums
