#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hall/complex.hpp"

namespace hall {

/// Hom_D(x, z) as chain maps P(x) -> P(z) between projective realizations,
/// modulo null-homotopic maps. Classes are indexed 0 .. p^dim - 1 by their
/// coordinates in a fixed basis of the quotient (first coordinate most
/// significant); index 0 is the zero class.
class DerivedHom {
 public:
  DerivedHom(const DerivedClass& x, const DerivedClass& z, const Catalog& cat);

  const std::shared_ptr<const Complex>& source() const { return source_; }
  const std::shared_ptr<const Complex>& target() const { return target_; }
  std::size_t dim() const { return quotient_.rows(); }
  fq::Elem modulus() const { return p_; }
  /// p^dim, or ResourceLimit past the caps.
  std::uint64_t size(const EnumerationLimits& limits) const;

  ChainMap representative(std::uint64_t index) const;
  /// Class index of any chain map P(x) -> P(z).
  std::uint64_t class_index(const ChainMap& f) const;
  /// d h + h d for a uniformly random graded map h of degree -1.
  ChainMap random_null_homotopic(std::mt19937_64& rng) const;

  template <class Fn>
  void for_each(const EnumerationLimits& limits, Fn&& fn) const {
    const auto n = size(limits);
    for (std::uint64_t i = 0; i < n; ++i) fn(i, representative(i));
  }

 private:
  fq::Vector coordinates(const ChainMap& f) const;
  ChainMap from_coordinates(const fq::Vector& v) const;

  std::shared_ptr<const Complex> source_;
  std::shared_ptr<const Complex> target_;
  fq::Elem p_;
  int lo_ = 0;
  int hi_ = -1;
  // Graded pieces Hom(A^n, B^n) for n in [lo_, hi_] and their coordinate offsets.
  std::vector<HomSpace> maps_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  // Null-homotopic maps (RREF) and a complement basis of the cycle quotient.
  fq::FqMatrix boundaries_;
  std::vector<std::size_t> boundary_pivots_;
  fq::FqMatrix quotient_;
  std::vector<std::size_t> quotient_pivots_;
  // Images d h + h d of a basis of degree -1 maps.
  fq::FqMatrix homotopy_images_;
};

/// One chain map per class of Hom_D(x, z).
std::vector<ChainMap> hom_classes(const DerivedClass& x, const DerivedClass& z, const Catalog& cat,
                                  const EnumerationLimits& limits = {});

/// dim Hom_D(x, z[i]).
std::size_t ext_dim(const DerivedClass& x, const DerivedClass& z, int i, const Catalog& cat);

}  // namespace hall
