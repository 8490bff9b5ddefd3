#include "modsums/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modsums {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace {

void check_modulus(Modulus q) {
  if (q < 1) throw std::invalid_argument("modulus q must be at least 1");
}

void check_reduced(Residue a, Modulus q, std::size_t index) {
  if (!is_reduced(a, q)) {
    std::ostringstream msg;
    msg << "a_" << index + 1 << " = " << a << " is not a reduced residue mod " << q
        << " (gcd(" << a << ", " << q << ") = " << gcd(a, q) << ")";
    throw std::invalid_argument(msg.str());
  }
}

template <class Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (auto v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace

Configuration::Configuration(Modulus q, std::vector<Residue> residues)
    : q_(q), residues_(std::move(residues)) {
  check_modulus(q_);
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] >= q_) {
      throw std::invalid_argument("a_" + std::to_string(i + 1) + " = " +
                                  std::to_string(residues_[i]) + " is not in [0, " +
                                  std::to_string(q_) + ")");
    }
    check_reduced(residues_[i], q_, i);
  }
}

Configuration Configuration::from_integers(Modulus q, std::span<const std::int64_t> values) {
  check_modulus(q);
  std::vector<Residue> residues;
  residues.reserve(values.size());
  for (auto v : values) residues.push_back(floor_mod(v, q));
  return Configuration(q, std::move(residues));
}

Configuration Configuration::all_ones(int n, Modulus q) {
  check_modulus(q);
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return Configuration(q, std::vector<Residue>(static_cast<std::size_t>(n), 1 % q));
}

Residue Configuration::total() const {
  std::uint64_t s = 0;
  for (auto a : residues_) s = (s + a) % q_;
  return static_cast<Residue>(s);
}

std::string Configuration::to_string() const {
  return "q=" + std::to_string(q_) + " a=(" + join(residues_) + ")";
}

ResidueSet::ResidueSet(Modulus q, std::span<const std::int64_t> values) : q_(q) {
  check_modulus(q);
  members_.reserve(values.size());
  for (auto v : values) members_.push_back(floor_mod(v, q));
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw std::invalid_argument("target set lists residue " + std::to_string(*dup) +
                                " more than once mod " + std::to_string(q));
  }
}

ResidueSet ResidueSet::full(Modulus q) {
  check_modulus(q);
  ResidueSet s(q);
  s.members_.resize(q);
  std::iota(s.members_.begin(), s.members_.end(), Residue{0});
  return s;
}

bool ResidueSet::contains(Residue r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

std::string ResidueSet::to_string() const { return "{" + join(members_) + "}"; }

}  // namespace modsums
