#include "modsums/structures.hpp"

#include "modsums/core_math.hpp"
#include "modsums/errors.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace modsums {

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  SubsetMask m;
  for (int e : elements) {
    if (e < 1 || e > 32) throw std::invalid_argument("subset element out of range");
    m.bits |= 1U << (e - 1);
  }
  return m;
}

int SubsetMask::cardinality() const { return std::popcount(bits); }

Residue subset_sum(const Configuration& c, SubsetMask subset) {
  const auto q = static_cast<std::uint64_t>(c.modulus());
  std::uint64_t s = 0;
  for (auto bits = subset.bits; bits != 0; bits &= bits - 1) {
    s += c[static_cast<std::size_t>(std::countr_zero(bits))];
  }
  return static_cast<Residue>(s % q);
}

StructurePartition StructurePartition::from_blocks(Configuration c,
                                                   const std::vector<Structure>& blocks) {
  StructurePartition p(std::move(c));
  for (const auto& b : blocks) {
    if (b.members.size() != b.sums.size()) {
      throw std::invalid_argument("structure has " + std::to_string(b.members.size()) +
                                  " members but " + std::to_string(b.sums.size()) + " sums");
    }
    p.append_block(b.members, b.sums);
  }
  return p;
}

StructureView StructurePartition::block(std::size_t b) const {
  const auto begin = offsets_[b];
  const auto len = offsets_[b + 1] - begin;
  return {std::span(members_).subspan(begin, len), std::span(sums_).subspan(begin, len)};
}

std::vector<std::size_t> StructurePartition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(block_count());
  for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) sizes.push_back(offsets_[b + 1] - offsets_[b]);
  return sizes;
}

void StructurePartition::append_block(std::span<const SubsetMask> members,
                                      std::span<const Residue> sums) {
  members_.insert(members_.end(), members.begin(), members.end());
  sums_.insert(sums_.end(), sums.begin(), sums.end());
  offsets_.push_back(members_.size());
}

void StructurePartition::reserve(std::size_t blocks, std::size_t subsets) {
  offsets_.reserve(blocks + 1);
  members_.reserve(subsets);
  sums_.reserve(subsets);
}

StructurePartition build_partition(const Configuration& c, const PartitionOptions& options) {
  const int n = c.size();
  const int limit = std::min(options.max_n, kMaxPartitionN);
  if (n > limit) {
    throw LimitExceeded("explicit partition of 2^" + std::to_string(n) +
                        " subsets exceeds the enumeration limit n <= " + std::to_string(limit));
  }
  const auto q = static_cast<std::uint64_t>(c.modulus());

  StructurePartition level(Configuration(c.modulus(), {}));
  {
    const SubsetMask empty{};
    const Residue zero = 0;
    level.append_block(std::span(&empty, 1), std::span(&zero, 1));
  }

  std::vector<SubsetMask> moved_members;
  std::vector<Residue> moved_sums;
  std::vector<Residue> sorted_sums;
  std::vector<SubsetMask> grown;
  std::vector<Residue> grown_sums;

  for (int i = 1; i <= n; ++i) {
    const Residue a = c[static_cast<std::size_t>(i - 1)];
    const std::uint32_t bit = 1U << (i - 1);
    const auto prefix = c.residues().first(static_cast<std::size_t>(i));
    StructurePartition next(Configuration(c.modulus(), {prefix.begin(), prefix.end()}));
    next.reserve(2 * level.block_count(), 2 * level.subset_count());

    for (std::size_t b = 0; b < level.block_count(); ++b) {
      const auto block = level.block(b);
      const auto size = block.size();

      moved_members.clear();
      moved_sums.clear();
      for (std::size_t j = 0; j < size; ++j) {
        moved_members.push_back(SubsetMask{block.members[j].bits | bit});
        moved_sums.push_back(static_cast<Residue>((block.sums[j] + a) % q));
      }

      if (size == q) {
        // sum set is all of Z_q, and so is its translate
        next.append_block(block.members, block.sums);
        next.append_block(moved_members, moved_sums);
        continue;
      }

      // Translate of a proper subset by a unit differs from it, so some
      // residue of the translate is missing from the block. Take the smallest.
      sorted_sums.assign(block.sums.begin(), block.sums.end());
      std::sort(sorted_sums.begin(), sorted_sums.end());
      std::size_t pick = size;
      for (std::size_t j = 0; j < size; ++j) {
        if (std::binary_search(sorted_sums.begin(), sorted_sums.end(), moved_sums[j])) continue;
        if (pick == size || moved_sums[j] < moved_sums[pick]) pick = j;
      }
      if (pick == size) {
        throw std::logic_error("translated block has no new residue; configuration entry a_" +
                               std::to_string(i) + " is not reduced");
      }

      grown.assign(block.members.begin(), block.members.end());
      grown_sums.assign(block.sums.begin(), block.sums.end());
      grown.push_back(moved_members[pick]);
      grown_sums.push_back(moved_sums[pick]);
      next.append_block(grown, grown_sums);

      moved_members.erase(moved_members.begin() + static_cast<std::ptrdiff_t>(pick));
      moved_sums.erase(moved_sums.begin() + static_cast<std::ptrdiff_t>(pick));
      if (!moved_members.empty()) next.append_block(moved_members, moved_sums);
    }
    level = std::move(next);
  }
  return level;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::empty_block: return "empty block";
    case Violation::mask_out_of_range: return "subset mask out of range";
    case Violation::sum_mismatch: return "stored sum does not match recomputed sum";
    case Violation::duplicate_sum: return "duplicate sums in block";
    case Violation::overlap: return "blocks not disjoint";
    case Violation::missing_subset: return "subsets not covered";
    case Violation::block_count: return "block count differs from middle mod-q binomial";
  }
  return "?";
}

PartitionCheck verify_partition(const StructurePartition& p) {
  PartitionCheck check;
  check.block_count = p.block_count();
  const int n = p.n();
  const auto& c = p.configuration();

  auto fail = [&](Violation v, std::string detail) {
    check.violation = v;
    check.detail = std::move(detail);
    return check;
  };

  check.expected_block_count = mod_binomial(n, n / 2, c.modulus());
  if (n > kMaxPartitionN) return fail(Violation::mask_out_of_range, "n exceeds mask width");

  const std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<std::uint8_t> seen(universe, 0);
  std::vector<Residue> sorted_sums;

  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const auto block = p.block(b);
    const auto where = "block " + std::to_string(b);
    if (block.size() == 0) return fail(Violation::empty_block, where);

    for (std::size_t j = 0; j < block.size(); ++j) {
      const auto m = block.members[j];
      if (m.bits >= universe) {
        return fail(Violation::mask_out_of_range,
                    where + ": mask " + std::to_string(m.bits) + " uses elements beyond n");
      }
      const auto expected = subset_sum(c, m);
      if (block.sums[j] != expected) {
        return fail(Violation::sum_mismatch, where + ": mask " + std::to_string(m.bits) +
                                                 " stores " + std::to_string(block.sums[j]) +
                                                 ", recomputed " + std::to_string(expected));
      }
    }

    sorted_sums.assign(block.sums.begin(), block.sums.end());
    std::sort(sorted_sums.begin(), sorted_sums.end());
    auto dup = std::adjacent_find(sorted_sums.begin(), sorted_sums.end());
    if (dup != sorted_sums.end()) {
      return fail(Violation::duplicate_sum, where + ": residue " + std::to_string(*dup) +
                                                " occurs more than once");
    }

    for (auto m : block.members) {
      if (seen[m.bits]) {
        return fail(Violation::overlap,
                    where + ": mask " + std::to_string(m.bits) + " already used");
      }
      seen[m.bits] = 1;
    }
  }

  auto missing = std::find(seen.begin(), seen.end(), std::uint8_t{0});
  if (missing != seen.end()) {
    return fail(Violation::missing_subset,
                "mask " + std::to_string(missing - seen.begin()) + " is in no block");
  }
  if (BigInt(check.block_count) != check.expected_block_count) {
    return fail(Violation::block_count, std::to_string(check.block_count) + " blocks, expected " +
                                            check.expected_block_count.str());
  }
  return check;
}

BigInt partition_bound(const StructurePartition& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<std::uint64_t>(k) > p.modulus()) throw std::invalid_argument("k exceeds q");
  std::uint64_t total = 0;
  for (auto size : p.block_sizes()) total += std::min<std::uint64_t>(size, static_cast<std::uint64_t>(k));
  return BigInt(total);
}

IntervalSumSet sum_set_shape(const StructureView& block, int n, Modulus q) {
  const auto m = static_cast<std::int64_t>(block.size());
  if (m == 0) throw ShapeViolation("empty block");
  std::vector<Residue> sums(block.sums.begin(), block.sums.end());
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
    throw ShapeViolation("block sums are not distinct");
  }
  const bool full = m == static_cast<std::int64_t>(q);
  if ((n - m + 1) % 2 != 0) {
    if (full) return {true, false, 0, 0};
    throw ShapeViolation("block of size " + std::to_string(m) +
                         " cannot be an interval centred on n/2 for n=" + std::to_string(n));
  }
  const std::int64_t x = (n - m + 1) / 2;
  const std::int64_t y = x + m - 1;
  std::vector<Residue> interval;
  for (auto j = x; j <= y; ++j) interval.push_back(floor_mod(j, q));
  std::sort(interval.begin(), interval.end());
  if (interval != sums) {
    throw ShapeViolation("sum set is not the interval [" + std::to_string(x) + ", " +
                         std::to_string(y) + "] mod " + std::to_string(q));
  }
  return {full, true, x, y};
}

bool lemma_shift_check(const ResidueSet& s, Residue a) {
  const auto q = s.modulus();
  if (s.empty()) throw std::invalid_argument("shift check needs a nonempty set");
  if (a >= q || !is_reduced(a, q)) {
    throw std::invalid_argument("shift " + std::to_string(a) + " is not a reduced residue mod " +
                                std::to_string(q));
  }
  for (auto r : s.members()) {
    if (!s.contains(static_cast<Residue>((static_cast<std::uint64_t>(r) + a) % q))) return false;
  }
  return true;
}

void write_partition(std::ostream& out, const StructurePartition& p) {
  const auto& c = p.configuration();
  out << "n=" << p.n() << " q=" << c.modulus() << " a=";
  for (int i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[static_cast<std::size_t>(i)];
  out << '\n' << std::hex;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const auto block = p.block(b);
    for (std::size_t j = 0; j < block.size(); ++j) out << (j ? "," : "") << block.members[j].bits;
    out << '\n';
  }
  out << std::dec;
}

std::string partition_to_string(const StructurePartition& p) {
  std::ostringstream out;
  write_partition(out, p);
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_unsigned(const std::string& text, int base, const std::string& what) {
  if (text.empty()) throw std::invalid_argument("empty " + what);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, base);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || text[0] == '-' || text[0] == '+') {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  return v;
}

}  // namespace

StructurePartition read_partition(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("missing partition header");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto fields = split(header, ' ');
  if (fields.size() != 3 || fields[0].rfind("n=", 0) != 0 || fields[1].rfind("q=", 0) != 0 ||
      fields[2].rfind("a=", 0) != 0) {
    throw std::invalid_argument("malformed partition header: '" + header + "'");
  }
  const auto n = parse_unsigned(fields[0].substr(2), 10, "n");
  const auto q = parse_unsigned(fields[1].substr(2), 10, "q");
  if (q < 1 || q > UINT32_MAX) throw std::invalid_argument("q out of range");
  std::vector<std::int64_t> values;
  for (const auto& v : split(fields[2].substr(2), ',')) {
    values.push_back(static_cast<std::int64_t>(parse_unsigned(v, 10, "residue")));
  }
  if (values.size() != n) {
    throw std::invalid_argument("header declares n=" + std::to_string(n) + " but lists " +
                                std::to_string(values.size()) + " residues");
  }
  if (n > static_cast<std::uint64_t>(kMaxPartitionN)) throw std::invalid_argument("n too large");
  auto c = Configuration::from_integers(static_cast<Modulus>(q), values);

  StructurePartition p(c);
  std::string line;
  std::vector<SubsetMask> members;
  std::vector<Residue> sums;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw std::invalid_argument("empty block line");
    members.clear();
    sums.clear();
    for (const auto& token : split(line, ',')) {
      const auto bits = parse_unsigned(token, 16, "subset mask");
      if (bits > UINT32_MAX) throw std::invalid_argument("subset mask too wide: " + token);
      const SubsetMask m{static_cast<std::uint32_t>(bits)};
      members.push_back(m);
      sums.push_back(subset_sum(c, SubsetMask{m.bits & ((n >= 32) ? ~0U : ((1U << n) - 1))}));
    }
    p.append_block(members, sums);
  }
  return p;
}

}  // namespace modsums
