#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hall/algebra.hpp"
#include "hall/catalog.hpp"

namespace hall {

using ClassicalElement = HallElement<IsoClassId>;

/// Hall numbers of the module category, counted as subobjects.
class ClassicalHall {
 public:
  explicit ClassicalHall(const Catalog& cat);

  const Catalog& catalog() const { return *cat_; }
  std::vector<IsoClassId> basis() const;
  /// dims x + dims y stays inside the catalog bound.
  bool in_bound(IsoClassId x, IsoClassId y) const;

  /// #{U <= z : U = x, z/U = y}; zero unless dims z = dims x + dims y.
  std::uint64_t hall_number(IsoClassId x, IsoClassId y, IsoClassId z) const;
  /// #{(i, p) : i: x -> z mono, p: z -> y epi, im i = ker p}.
  std::uint64_t count_exact_sequences(IsoClassId x, IsoClassId y, IsoClassId z) const;

  /// Throws OutOfUniverse when the pair is not in bound.
  ClassicalElement product(IsoClassId x, IsoClassId y) const;
  ClassicalElement multiply(const ClassicalElement& a, const ClassicalElement& b) const;

  /// Monomorphisms x -> z with cokernel y, under precomposition by Aut(x).
  OrbitReport orbit_stabilizer_check(IsoClassId x, IsoClassId z, IsoClassId y) const;

 private:
  using Histogram = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;
  const Histogram& histogram(IsoClassId z) const;

  const Catalog* cat_;
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, Histogram> subobjects;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

}  // namespace hall
