#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace modsums {

using Residue = std::uint32_t;
using Modulus = std::uint32_t;

// Mathematical (non-negative) remainder of value modulo q.
inline Residue floor_mod(std::int64_t value, Modulus q) {
  const auto m = static_cast<std::int64_t>(q);
  auto r = value % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

inline bool is_reduced(Residue a, Modulus q) { return gcd(a, q) == 1; }

// The problem instance: a modulus q >= 1 and reduced residues a_1..a_n,
// stored canonically in [0, q).
class Configuration {
 public:
  Configuration() = default;

  // Entries must already lie in [0, q) and be coprime to q.
  Configuration(Modulus q, std::vector<Residue> residues);

  // Reduces arbitrary (possibly negative) integers modulo q first.
  static Configuration from_integers(Modulus q, std::span<const std::int64_t> values);
  static Configuration from_integers(Modulus q, std::initializer_list<std::int64_t> values) {
    return from_integers(q, std::span<const std::int64_t>(values.begin(), values.size()));
  }
  static Configuration all_ones(int n, Modulus q);

  Modulus modulus() const { return q_; }
  int size() const { return static_cast<int>(residues_.size()); }
  std::span<const Residue> residues() const { return residues_; }
  Residue operator[](std::size_t i) const { return residues_[i]; }

  // Residue sum of all entries, mod q.
  Residue total() const;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Modulus q_ = 1;
  std::vector<Residue> residues_;
};

// A set P of distinct residues mod q, kept sorted ascending.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(Modulus q) : q_(q) {}
  ResidueSet(Modulus q, std::span<const std::int64_t> values);
  ResidueSet(Modulus q, std::initializer_list<std::int64_t> values)
      : ResidueSet(q, std::span<const std::int64_t>(values.begin(), values.size())) {}

  static ResidueSet full(Modulus q);

  Modulus modulus() const { return q_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  std::span<const Residue> members() const { return members_; }
  bool contains(Residue r) const;

  std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Modulus q_ = 1;
  std::vector<Residue> members_;
};

}  // namespace modsums
