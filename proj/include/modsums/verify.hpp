#pragma once

#include "modsums/bigint.hpp"
#include "modsums/core_math.hpp"
#include "modsums/types.hpp"

#include <cstdint>
#include <vector>

namespace modsums {

// Brute-force oracles. These enumerate assignments directly and share no
// code with the convolution kernels in core_math.

inline constexpr int kDefaultBruteLimit = 24;

// Per-class counts over all 2^n assignments e in {0,1}^n.
std::vector<std::uint64_t> brute_distribution(const Configuration& c, int max_n = kDefaultBruteLimit);

// Per-class counts over all 2^n sign patterns d in {1,-1}^n.
std::vector<std::uint64_t> brute_signed_distribution(const Configuration& c,
                                                     int max_n = kDefaultBruteLimit);

BigInt brute_count(const Configuration& c, const ResidueSet& p, int max_n = kDefaultBruteLimit);
BigInt brute_signed_count(const Configuration& c, const ResidueSet& p,
                          int max_n = kDefaultBruteLimit);

// Reduced residues mod q in ascending order ({0} for q = 1).
std::vector<Residue> reduced_residues(Modulus q);

struct SweepOptions {
  // Maximum number of (configuration, target) pairs evaluated.
  std::uint64_t budget = 100'000'000;
  // Restrict to a_1 = 1 and nondecreasing sequences (unit scaling and
  // permutation both preserve the extremum).
  bool prune = true;
  unsigned threads = 1;
  int max_n = 16;
};

enum class Extremum { max, min };

const char* to_string(Extremum e);

struct SweepResult {
  int n = 0;
  Modulus q = 1;
  int k = 1;
  Extremum extremum = Extremum::max;
  SumKind kind = SumKind::subset;
  BigInt formula_bound;
  BigInt observed;
  Configuration witness;
  ResidueSet witness_target;
  std::uint64_t evaluated = 0;
  bool agree = false;
};

// Number of configurations a sweep visits.
BigInt sweep_configuration_count(int n, Modulus q, bool prune);

// Maximum over all reduced configurations and k-subsets P of the 0/1 count;
// compared against theorem1_bound. Witness is the lexicographically first
// attaining (configuration, P).
SweepResult exhaustive_max(int n, Modulus q, int k, const SweepOptions& options = {});

// Minimum over configurations and single residues; compared against
// corollary2_bound. Requires n >= q - 1.
SweepResult exhaustive_min_class(int n, Modulus q, const SweepOptions& options = {});

// As exhaustive_max for signed sums; compared against corollary3_bound.
SweepResult exhaustive_signed_max(int n, Modulus q, int k, const SweepOptions& options = {});

struct UniformityReport {
  int n = 0;
  Modulus q = 1;
  std::vector<BigInt> counts;
  Rational min_share;
  Rational max_share;
  // max over classes of |count / 2^n - 1/q|
  Rational max_deviation;
};

UniformityReport uniformity_report(int n, Modulus q);
UniformityReport uniformity_report(const Configuration& c);

}  // namespace modsums
