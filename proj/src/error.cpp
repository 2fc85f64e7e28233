#include "hall/error.hpp"

namespace hall {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit,
                            const std::string& what) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      throw ResourceLimit(what + ": enumeration of " + std::to_string(base) + "^" +
                          std::to_string(exp) + " candidates exceeds cap " +
                          std::to_string(limit));
    }
    result *= base;
  }
  if (result > limit) {
    throw ResourceLimit(what + ": " + std::to_string(result) + " candidates exceeds cap " +
                        std::to_string(limit));
  }
  return result;
}

}  // namespace hall
