#pragma once

#include "modsums/bigint.hpp"
#include "modsums/types.hpp"

#include <vector>

namespace modsums {

// A configuration and target set together with the count they attain.
struct ExtremalInstance {
  Configuration configuration;
  ResidueSet target;
  BigInt claimed;
};

// First k terms of 0, 1, -1, 2, -2, ... reduced mod q.
std::vector<std::int64_t> centered_sequence(int k);

// All a_i = 1 and the k middle residues. Attains theorem1_bound(n, k, q).
ExtremalInstance allones_extremal(int n, int k, Modulus q);

// ceil(n/2) entries 1, floor(n/2) entries -1, and the first k values of
// 0, 1, -1, 2, -2, ... Attains theorem1_bound(n, k, q).
ExtremalInstance split_extremal(int n, int k, Modulus q);

// All a_i = 1 and the single residue ceil((n - q)/2); its class is the
// smallest of the distribution and has size corollary2_bound(n, q).
ExtremalInstance corollary2_extremal(int n, Modulus q);

}  // namespace modsums
