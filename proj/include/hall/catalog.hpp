#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hall/error.hpp"
#include "hall/representation.hpp"

namespace hall {

struct IsoClassId {
  std::size_t value = 0;
  friend auto operator<=>(const IsoClassId&, const IsoClassId&) = default;
};

struct CatalogEntry {
  IsoClassId id;
  Representation representative;
  bool indecomposable = false;
  /// dim Hom(I, representative) for each indecomposable I, in catalog order.
  std::vector<std::size_t> fingerprint;
};

/// Every isomorphism class with dimension vector below a bound. Classes are
/// numbered by (total dimension, dimension vector, least matrix tuple), so
/// IsoClassId{0} is always the zero representation.
class Catalog {
 public:
  static Catalog build(QuiverPtr quiver, fq::Elem p, DimVector bound, EnumerationLimits limits = {});

  const QuiverPtr& quiver() const { return quiver_; }
  fq::Elem modulus() const { return p_; }
  const DimVector& bound() const { return bound_; }
  const EnumerationLimits& limits() const { return limits_; }

  std::size_t size() const { return entries_.size(); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& entry(IsoClassId id) const;
  const Representation& representative(IsoClassId id) const { return entry(id).representative; }
  const DimVector& dims(IsoClassId id) const { return representative(id).dims(); }
  bool is_indecomposable(IsoClassId id) const { return entry(id).indecomposable; }
  const std::vector<IsoClassId>& indecomposables() const { return indecomposables_; }
  static IsoClassId zero() { return IsoClassId{0}; }

  /// Class of an arbitrary representation; nullopt when its dimension vector
  /// exceeds the bound.
  std::optional<IsoClassId> identify(const Representation& x) const;
  /// As identify, but throws OutOfUniverse.
  IsoClassId classify(const Representation& x) const;
  /// Class of a (+) b when it lies inside the bound.
  std::optional<IsoClassId> sum_class(IsoClassId a, IsoClassId b) const;

  /// Computed on first request by enumerating End(x); may throw ResourceLimit.
  std::uint64_t aut_order(IsoClassId id) const;
  std::size_t hom_dim(IsoClassId a, IsoClassId b) const { return hom_dim_[a.value * size() + b.value]; }
  std::size_t ext1_dim(IsoClassId a, IsoClassId b) const { return ext1_dim_[a.value * size() + b.value]; }

 private:
  Catalog() = default;
  std::vector<std::size_t> fingerprint_of(const Representation& x) const;

  QuiverPtr quiver_;
  fq::Elem p_ = 2;
  DimVector bound_;
  EnumerationLimits limits_;
  std::vector<CatalogEntry> entries_;
  std::vector<IsoClassId> indecomposables_;
  std::map<std::pair<DimVector, std::vector<std::size_t>>, std::vector<IsoClassId>> buckets_;
  std::vector<std::size_t> hom_dim_;
  std::vector<std::size_t> ext1_dim_;

  struct AutCache {
    std::mutex mutex;
    std::map<std::size_t, std::uint64_t> orders;
  };
  std::unique_ptr<AutCache> aut_cache_ = std::make_unique<AutCache>();
};

/// Dimension vectors v <= bound, ordered by total dimension then lexicographically.
std::vector<DimVector> dim_vectors_below(const DimVector& bound);

}  // namespace hall
