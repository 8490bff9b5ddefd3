#pragma once

#include "modsums/bigint.hpp"
#include "modsums/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace modsums {

/// Binomial coefficient C(n, j); zero outside 0 <= j <= n.
BigInt binom(int n, std::int64_t j);

/// Number of subsets of [n] whose cardinality is congruent to s mod q.
BigInt mod_binomial(int n, std::int64_t s, Modulus q);

/// All q mod-q binomial coefficients in n at once, indexed by residue.
std::vector<BigInt> mod_binomial_row(int n, Modulus q);

// The k consecutive integers j with (n - k)/2 <= j < (n + k)/2.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  friend bool operator==(const Window&, const Window&) = default;
};

Window middle_window(int n, int k);

/// Sum of the k middle mod-q binomial coefficients in n: the maximum number
/// of the 2^n subset sums of reduced residues that can land in a k-element
/// target set. Throws std::invalid_argument unless 1 <= k <= q.
BigInt theorem1_bound(int n, int k, Modulus q);

/// Minimum size of a single residue class of subset sums, valid for n >= q - 1.
BigInt corollary2_bound(int n, Modulus q);

/// Maximum number of the 2^n signed sums (coefficients +1/-1) in a k-element
/// target set. Uses modulus r = q (q odd) or q/2 (q even); only r residue
/// classes are reachable, so k is capped at r.
BigInt corollary3_bound(int n, int k, Modulus q);

// Exact per-class counts of the 2^n sums produced by a configuration.
struct SumDistribution {
  Modulus q = 1;
  std::vector<BigInt> counts;

  BigInt total() const;
  friend bool operator==(const SumDistribution&, const SumDistribution&) = default;
};

/// Counts of sum_i e_i a_i mod q over e in {0,1}^n, by cyclic convolution
/// with (1 + x^{a_i}) mod (x^q - 1).
SumDistribution subset_sum_distribution(const Configuration& c);

/// Counts of sum_i d_i a_i mod q over d in {1,-1}^n. Each signed sum equals
/// 2 * (subset sum) - (a_1 + ... + a_n), so the 0/1 distribution is relabelled.
SumDistribution signed_sum_distribution(const Configuration& c);

/// Total count over the residues of p. Throws on modulus mismatch.
BigInt count_in_set(const SumDistribution& d, const ResidueSet& p);

enum class BoundMethod { formula, partition, brute_force };
enum class SumKind { subset, signed_sums };

const char* to_string(BoundMethod m);
const char* to_string(SumKind k);

struct BoundWitness {
  Configuration configuration;
  ResidueSet target;
  SumKind kind = SumKind::subset;
};

struct BoundReport {
  BigInt value;
  BoundMethod method = BoundMethod::formula;
  std::optional<BoundWitness> witness;

  // True when there is no witness or the witness reproduces value exactly.
  bool witness_consistent() const;
};

}  // namespace modsums
