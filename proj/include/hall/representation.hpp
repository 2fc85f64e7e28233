#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hall/error.hpp"
#include "hall/fq_matrix.hpp"
#include "hall/quiver.hpp"

namespace hall {

/// A finite-dimensional F_p-representation. Arrow a: i -> j acts by a
/// dims[j] x dims[i] matrix (source -> target).
class Representation {
 public:
  Representation(QuiverPtr quiver, fq::Elem p, DimVector dims, std::vector<fq::FqMatrix> maps);
  static Representation zero(QuiverPtr quiver, fq::Elem p);

  const QuiverPtr& quiver() const { return quiver_; }
  fq::Elem modulus() const { return p_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  const fq::FqMatrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<fq::FqMatrix>& maps() const { return maps_; }
  std::size_t total_dim() const { return dims_total(dims_); }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Representation& a, const Representation& b);
  /// Dimension vector first, then the arrow matrices lexicographically.
  friend std::strong_ordering operator<=>(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  fq::Elem p_;
  DimVector dims_;
  std::vector<fq::FqMatrix> maps_;
};

/// Throws InvalidInput unless both live over the same quiver and modulus.
void require_compatible(const Representation& x, const Representation& y);

Representation direct_sum(const Representation& a, const Representation& b);

/// Per-vertex linear maps f_v: x_v -> y_v.
class RepMorphism {
 public:
  RepMorphism() = default;
  explicit RepMorphism(std::vector<fq::FqMatrix> components) : components_(std::move(components)) {}

  static RepMorphism identity(const Representation& x);
  static RepMorphism zero(const Representation& from, const Representation& to);

  const fq::FqMatrix& operator[](std::size_t v) const { return components_[v]; }
  fq::FqMatrix& operator[](std::size_t v) { return components_[v]; }
  const std::vector<fq::FqMatrix>& components() const { return components_; }
  std::size_t vertex_count() const { return components_.size(); }
  bool is_zero() const;

  RepMorphism scaled(fq::Elem s) const;
  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a);
  friend bool operator==(const RepMorphism& a, const RepMorphism& b) = default;

 private:
  std::vector<fq::FqMatrix> components_;
};

/// g o f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g);

/// Shapes match x -> y and f_j x_a = y_a f_i for every arrow a: i -> j.
bool is_intertwiner(const RepMorphism& f, const Representation& x, const Representation& y);
bool is_iso(const RepMorphism& f);
bool is_mono(const RepMorphism& f);
bool is_epi(const RepMorphism& f);

/// Hom(x, y) as a subspace of the flattened per-vertex matrices (vertex order,
/// row-major). The basis is kept in RREF, so enumeration order by index equals
/// lexicographic order of the flattened morphisms.
class HomSpace {
 public:
  HomSpace(const Representation& x, const Representation& y);

  std::size_t dim() const { return basis_.rows(); }
  fq::Elem modulus() const { return p_; }
  /// p^dim, or ResourceLimit past the cap.
  std::uint64_t size(const EnumerationLimits& limits) const;

  const fq::FqMatrix& basis_rows() const { return basis_; }
  std::vector<RepMorphism> basis() const;

  fq::Vector flatten(const RepMorphism& f) const;
  RepMorphism unflatten(const fq::Vector& v) const;
  /// Coordinates of f, which must lie in Hom(x, y).
  fq::Vector coordinates(const RepMorphism& f) const;
  std::uint64_t index_of(const RepMorphism& f) const;
  RepMorphism element(std::uint64_t index) const;
  RepMorphism random_element(std::mt19937_64& rng) const;

  /// fn(index, morphism) over every element, after checking the cap.
  template <class Fn>
  void for_each(const EnumerationLimits& limits, Fn&& fn) const {
    size(limits);
    fq::for_each_combination(basis_, [&](std::uint64_t index, const fq::Vector& v) {
      fn(index, unflatten(v));
    });
  }

 private:
  DimVector source_dims_;
  DimVector target_dims_;
  fq::Elem p_;
  std::vector<std::size_t> offsets_;
  std::size_t flat_size_ = 0;
  fq::FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

/// Number of invertible endomorphisms, by enumeration of End(x).
std::uint64_t aut_order(const Representation& x, const EnumerationLimits& limits = {});
/// Every invertible endomorphism, in enumeration order of End(x).
std::vector<RepMorphism> automorphisms(const Representation& x, const EnumerationLimits& limits = {});

struct KernelCokernel {
  Representation kernel;
  RepMorphism inclusion;
  Representation cokernel;
  RepMorphism projection;
};

/// Throws InvalidInput if f is not an intertwiner x -> y.
KernelCokernel kernel_cokernel(const RepMorphism& f, const Representation& x,
                               const Representation& y);

struct Subrepresentation {
  std::vector<fq::FqSubspace> spaces;
  Representation sub;
  RepMorphism inclusion;
  Representation quotient;
  RepMorphism projection;
};

/// Every arrow-closed tuple of subspaces of z with its induced sub and quotient.
std::vector<Subrepresentation> enumerate_subreps(const Representation& z,
                                                 const EnumerationLimits& limits = {});

/// Decide x = y: dimension vectors, then Hom-dimension fingerprint, then a
/// search through Hom(x, y) for an invertible element. The search tries
/// seeded random elements first and falls back to full enumeration, so a
/// negative answer is always exhaustive.
std::optional<RepMorphism> find_isomorphism(const Representation& x, const Representation& y,
                                            const EnumerationLimits& limits = {});
bool is_isomorphic(const Representation& x, const Representation& y,
                   const EnumerationLimits& limits = {});

/// dim Ext^1(x, y): cokernel of Hom(P^0, y) -> Hom(P^1, y) for the standard
/// resolution P^1 = (+)_{a: i->j} P_j^{x_i} -> P^0 = (+)_i P_i^{x_i}, using
/// Hom(P_i (x) V, y) = Hom(V, y_i).
std::size_t ext1_dim(const Representation& x, const Representation& y);

}  // namespace hall
