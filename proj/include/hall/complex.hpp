#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hall/catalog.hpp"
#include "hall/representation.hpp"

namespace hall {

/// Degrees admitted for derived objects.
struct Window {
  int lo = -2;
  int hi = 2;
  bool contains(int degree) const { return lo <= degree && degree <= hi; }
  int span() const { return hi - lo; }
};

/// Bounded cohomological complex of representations. The differential raises
/// degree; terms outside [lo, hi] are zero.
class Complex {
 public:
  /// terms[k] sits in degree lo + k; differentials[k] maps degree lo + k to
  /// lo + k + 1. Throws InvalidInput on shape errors or d^2 != 0.
  Complex(QuiverPtr quiver, fq::Elem p, int lo, std::vector<Representation> terms,
          std::vector<RepMorphism> differentials);
  static Complex zero(QuiverPtr quiver, fq::Elem p);
  static Complex stalk(const Representation& m, int degree);

  const QuiverPtr& quiver() const { return quiver_; }
  fq::Elem modulus() const { return p_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool is_zero() const;

  const Representation& term(int degree) const;
  /// d^n: degree n -> n + 1, zero outside the stored range.
  RepMorphism differential(int degree) const;

  /// (c[k])^n = c^{n+k}, with differential multiplied by (-1)^k.
  Complex shifted(int k) const;

 private:
  QuiverPtr quiver_;
  fq::Elem p_;
  int lo_ = 0;
  std::vector<Representation> terms_;
  std::vector<RepMorphism> differentials_;
  Representation zero_;
};

/// Degreewise RepMorphisms between two complexes, commuting with differentials.
class ChainMap {
 public:
  ChainMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
           std::vector<RepMorphism> components);
  static ChainMap zero(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target);
  static ChainMap identity(std::shared_ptr<const Complex> c);

  const Complex& source() const { return *source_; }
  const Complex& target() const { return *target_; }
  const std::shared_ptr<const Complex>& source_ptr() const { return source_; }
  const std::shared_ptr<const Complex>& target_ptr() const { return target_; }
  /// f^n for n in [source.lo, source.hi]; zero outside.
  RepMorphism component(int degree) const;
  const std::vector<RepMorphism>& components() const { return components_; }

  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);

 private:
  std::shared_ptr<const Complex> source_;
  std::shared_ptr<const Complex> target_;
  std::vector<RepMorphism> components_;
};

bool is_chain_map(const ChainMap& f);
/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

struct HomologyTerm {
  int degree;
  Representation module;
};

/// H^n for every n in [lo, hi].
std::vector<HomologyTerm> homology(const Complex& c);

/// cone(f)^n = A^{n+1} (+) B^n with d = [[-d_A, 0], [f, d_B]].
Complex mapping_cone(const ChainMap& f);

/// A finite sum of shifted modules, (+)_k M_k[-d_k], one module per degree.
class DerivedClass {
 public:
  struct Term {
    int degree;
    IsoClassId id;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  DerivedClass() = default;
  /// Drops zero classes and sorts; throws InvalidInput on a repeated degree.
  explicit DerivedClass(std::vector<Term> terms);
  static DerivedClass stalk(IsoClassId id, int degree = 0) { return DerivedClass({{degree, id}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The class at `degree`, zero if absent.
  IsoClassId at(int degree) const;
  /// x[k]: a term in degree d moves to degree d - k.
  DerivedClass shift(int k) const;
  bool in_window(const Window& w) const;
  /// Degreewise dimension vectors, for the degrees of w.
  std::vector<DimVector> dims(const Catalog& cat, const Window& w) const;
  std::string to_string() const;

  friend auto operator<=>(const DerivedClass&, const DerivedClass&) = default;

 private:
  std::vector<Term> terms_;
};

/// Class of the complex via its homology (every bounded complex over a
/// hereditary category is quasi-isomorphic to it). nullopt when some
/// homology module exceeds the catalog bound.
std::optional<DerivedClass> try_derived_class_of(const Complex& c, const Catalog& cat);
/// As above, throwing OutOfUniverse.
DerivedClass derived_class_of(const Complex& c, const Catalog& cat);

struct ProjectiveResolution {
  Representation p1;
  Representation p0;
  RepMorphism differential;    // P^1 -> P^0
  RepMorphism augmentation;    // P^0 -> M
};

/// Standard resolution 0 -> (+)_{a: i->j} P_j (x) M_i -> (+)_i P_i (x) M_i -> M -> 0,
/// where P_i(v) has the paths i -> v as basis. Requires an acyclic quiver.
ProjectiveResolution projective_resolution(const Representation& m);

/// Complex of projectives quasi-isomorphic to x: the module in degree d is
/// replaced by its resolution in degrees d-1, d.
Complex projective_realization(const DerivedClass& x, const Catalog& cat);
/// Modules placed in their degrees with zero differential.
Complex stalk_realization(const DerivedClass& x, const Catalog& cat);

/// Every DerivedClass supported in the window with each degree's module in
/// the catalog, in increasing order.
std::vector<DerivedClass> derived_universe(const Catalog& cat, const Window& w);

}  // namespace hall
