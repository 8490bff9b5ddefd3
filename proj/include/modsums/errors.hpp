#pragma once

#include <stdexcept>
#include <string>

namespace modsums {

// Thrown when an explicit enumeration or sweep would exceed its memory or
// work guard. Raise the guard (PartitionOptions::max_n, SweepOptions::budget)
// to proceed.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modsums
