#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hall {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape or modulus mismatches, schema violations, broken invariants.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A product, cone or homology object lands outside the catalog bound or shift window.
class OutOfUniverse : public Error {
 public:
  using Error::Error;
};

/// Caps on exhaustive enumerations. Exceeding either one raises ResourceLimit.
struct EnumerationLimits {
  std::uint64_t max_candidates = 10'000'000;
  std::size_t max_hom_dim = 20;
};

/// base^exp, or ResourceLimit if the result would exceed `limit`.
std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit,
                            const std::string& what);

}  // namespace hall
