#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "hall/algebra.hpp"
#include "hall/complex.hpp"

namespace hall {

using DerivedElement = HallElement<DerivedClass>;

/// Derived Hall numbers on sums of shifted modules inside a window:
/// g = |[x,z]_y| prod_{i>0} |Ext^-i(x,z)|^{(-1)^i} / (|Aut x| prod_{i>0} |Ext^-i(x,x)|^{(-1)^i}).
class DerivedHall {
 public:
  DerivedHall(const Catalog& cat, Window window);

  const Catalog& catalog() const { return *cat_; }
  const Window& window() const { return window_; }
  const std::vector<DerivedClass>& basis() const { return universe_; }
  bool in_universe(const DerivedClass& x) const;
  /// Degreewise dims x + dims y stay inside the catalog bound.
  bool in_bound(const DerivedClass& x, const DerivedClass& y) const;
  /// Classes z that can occur in x * y: degreewise dims bounded by x + y and
  /// the same alternating dimension sum.
  std::vector<DerivedClass> candidates(const DerivedClass& x, const DerivedClass& y) const;

  /// Classes of Hom_D(x, z) whose cone is y.
  std::uint64_t cone_count(const DerivedClass& x, const DerivedClass& z, const DerivedClass& y) const;
  /// Classes of Hom_D(x, x) with zero cone.
  std::uint64_t aut_order(const DerivedClass& x) const;
  /// dim Hom_D(x, z[i]).
  std::size_t ext_dim(const DerivedClass& x, const DerivedClass& z, int i) const;

  Rational hall_number(const DerivedClass& x, const DerivedClass& y, const DerivedClass& z) const;
  /// Throws OutOfUniverse when x or y lies outside the universe or the pair is not in bound.
  DerivedElement product(const DerivedClass& x, const DerivedClass& y) const;
  DerivedElement multiply(const DerivedElement& a, const DerivedElement& b) const;

  OrbitReport orbit_stabilizer_check(const DerivedClass& x, const DerivedClass& z, const DerivedClass& y) const;

 private:
  struct ConeHistogram {
    std::map<DerivedClass, std::uint64_t> counts;
    /// Cones whose homology leaves the catalog bound.
    std::uint64_t escaped = 0;
  };
  const ConeHistogram& cones(const DerivedClass& x, const DerivedClass& z) const;
  void require_universe(const DerivedClass& x) const;

  const Catalog* cat_;
  Window window_;
  std::vector<DerivedClass> universe_;
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<DerivedClass, DerivedClass>, ConeHistogram> cones;
    std::map<std::tuple<DerivedClass, DerivedClass, int>, std::size_t> ext;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

}  // namespace hall
