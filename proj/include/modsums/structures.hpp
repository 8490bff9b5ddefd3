#pragma once

#include "modsums/bigint.hpp"
#include "modsums/types.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modsums {

// A subset of [n]; element i is stored in bit i - 1.
struct SubsetMask {
  std::uint32_t bits = 0;

  static SubsetMask of(std::initializer_list<int> elements);
  bool contains(int element) const { return (bits >> (element - 1)) & 1U; }
  int cardinality() const;

  friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;
};

// Residue sum of the configuration entries indexed by the subset.
Residue subset_sum(const Configuration& c, SubsetMask subset);

// Owning block, used to assemble partitions by hand.
struct Structure {
  std::vector<SubsetMask> members;
  std::vector<Residue> sums;
};

// Read-only view of one block of a StructurePartition.
struct StructureView {
  std::span<const SubsetMask> members;
  std::span<const Residue> sums;

  std::size_t size() const { return members.size(); }
};

// A partition of 2^[n] into blocks, stored flat: block b occupies
// [offsets[b], offsets[b + 1]) of the member and sum arrays.
class StructurePartition {
 public:
  explicit StructurePartition(Configuration c) : config_(std::move(c)) {}

  // Assembles blocks as given; no validation (see verify_partition).
  static StructurePartition from_blocks(Configuration c, const std::vector<Structure>& blocks);

  const Configuration& configuration() const { return config_; }
  int n() const { return config_.size(); }
  Modulus modulus() const { return config_.modulus(); }

  std::size_t block_count() const { return offsets_.size() - 1; }
  std::size_t subset_count() const { return members_.size(); }
  StructureView block(std::size_t b) const;
  std::vector<std::size_t> block_sizes() const;

  void append_block(std::span<const SubsetMask> members, std::span<const Residue> sums);
  void reserve(std::size_t blocks, std::size_t subsets);

 private:
  Configuration config_;
  std::vector<SubsetMask> members_;
  std::vector<Residue> sums_;
  std::vector<std::size_t> offsets_{0};
};

struct PartitionOptions {
  int max_n = 24;
};

// Hard ceiling imposed by the 32-bit subset masks.
inline constexpr int kMaxPartitionN = 30;

/// Builds the structure partition by induction on n. Level 0 is the single
/// block {empty set}. For each block A and its translate A' = {I + {n}}:
/// if A already realises every residue both are kept; otherwise the member
/// of A' carrying the smallest residue missing from A moves into A, and the
/// remainder of A' is kept unless it became empty.
///
/// Throws LimitExceeded when n exceeds options.max_n.
StructurePartition build_partition(const Configuration& c, const PartitionOptions& options = {});

enum class Violation {
  none,
  empty_block,
  mask_out_of_range,
  sum_mismatch,
  duplicate_sum,
  overlap,
  missing_subset,
  block_count,
};

const char* to_string(Violation v);

struct PartitionCheck {
  Violation violation = Violation::none;
  std::string detail;
  std::size_t block_count = 0;
  BigInt expected_block_count;

  bool ok() const { return violation == Violation::none; }
};

// Checks exact cover of 2^[n], pairwise-distinct sums per block, stored sums
// against recomputed sums, and block count against C(n, floor(n/2))_q.
// Reports the first violation found; never throws.
PartitionCheck verify_partition(const StructurePartition& p);

// Sum over blocks of min(k, |block|). Throws unless 1 <= k <= q.
BigInt partition_bound(const StructurePartition& p, int k);

// Shape of a block's sum set under the all-ones configuration: all of Z_q
// (full), and/or the residues of an integer interval [x, y] with x + y = n
// (interval). A block of size q can be both.
struct IntervalSumSet {
  bool full = false;
  bool interval = false;
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const IntervalSumSet&, const IntervalSumSet&) = default;
};

class ShapeViolation : public std::runtime_error {
 public:
  explicit ShapeViolation(const std::string& what) : std::runtime_error(what) {}
};

IntervalSumSet sum_set_shape(const StructureView& block, int n, Modulus q);

// Whether s + a == s. Requires s nonempty and gcd(a, q) == 1; then the
// answer is true exactly when s is all of Z_q.
bool lemma_shift_check(const ResidueSet& s, Residue a);

// Text form: header "n=<n> q=<q> a=<a_1,...,a_n>", then one line per block of
// comma-separated lowercase hexadecimal subset masks.
void write_partition(std::ostream& out, const StructurePartition& p);
std::string partition_to_string(const StructurePartition& p);

// Parses the text form; sums are recomputed from the configuration.
// Throws std::invalid_argument on malformed input.
StructurePartition read_partition(std::istream& in);

}  // namespace modsums
