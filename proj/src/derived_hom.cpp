#include "hall/derived_hom.hpp"

#include <algorithm>
#include <string>

namespace hall {

using fq::FqMatrix;
using fq::Vector;

namespace {

// Per-vertex matrices of a morphism, concatenated row-major.
void append_flat(Vector& out, const RepMorphism& f) {
  for (const auto& m : f.components()) out.insert(out.end(), m.data().begin(), m.data().end());
}

RepMorphism combine(const HomSpace& h, const Vector& coords, std::size_t offset, fq::Elem p) {
  const auto& basis = h.basis_rows();
  Vector flat(basis.cols(), 0);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const auto c = coords[offset + i];
    if (c == 0) continue;
    for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = fq::add_mod(flat[k], fq::mul_mod(c, basis(i, k), p), p);
  }
  return h.unflatten(flat);
}

}  // namespace

DerivedHom::DerivedHom(const DerivedClass& x, const DerivedClass& z, const Catalog& cat)
    : source_(std::make_shared<const Complex>(projective_realization(x, cat))),
      target_(std::make_shared<const Complex>(projective_realization(z, cat))),
      p_(cat.modulus()) {
  const auto& a = *source_;
  const auto& b = *target_;
  lo_ = std::max(a.lo(), b.lo());
  hi_ = std::min(a.hi(), b.hi());
  if (a.is_zero() || b.is_zero()) hi_ = lo_ - 1;
  for (int n = lo_; n <= hi_; ++n) {
    offsets_.push_back(total_);
    maps_.emplace_back(a.term(n), b.term(n));
    total_ += maps_.back().dim();
  }

  // Chain condition d_B f^n - f^{n+1} d_A = 0, one equation block per degree n in [lo_-1, hi_].
  std::vector<Vector> columns;
  for (int n = lo_; n <= hi_; ++n) {
    const auto& h = maps_[static_cast<std::size_t>(n - lo_)];
    for (const auto& f : h.basis()) {
      Vector col;
      for (int e = lo_ - 1; e <= hi_; ++e) {
        if (e == n) {
          append_flat(col, compose(b.differential(n), f));
        } else if (e == n - 1) {
          append_flat(col, -compose(f, a.differential(n - 1)));
        } else {
          append_flat(col, RepMorphism::zero(a.term(e), b.term(e + 1)));
        }
      }
      columns.push_back(std::move(col));
    }
  }
  FqMatrix cycles;
  if (columns.empty() || columns.front().empty()) {
    cycles = FqMatrix::identity(total_, p_);
  } else {
    cycles = fq::rref_rank_kernel(FqMatrix::from_columns(columns, columns.front().size(), p_)).kernel_basis;
  }

  // Null-homotopic maps d_B h^n + h^{n+1} d_A for h of degree -1.
  std::vector<Vector> images;
  for (int m = std::max(a.lo(), b.lo() + 1); m <= std::min(a.hi(), b.hi() + 1); ++m) {
    if (a.is_zero() || b.is_zero()) break;
    const HomSpace hs(a.term(m), b.term(m - 1));
    for (const auto& h : hs.basis()) {
      Vector v(total_, 0);
      for (int n = lo_; n <= hi_; ++n) {
        RepMorphism comp;
        if (n == m) {
          comp = compose(b.differential(m - 1), h);
        } else if (n == m - 1) {
          comp = compose(h, a.differential(m - 1));
        } else {
          continue;
        }
        const auto& space = maps_[static_cast<std::size_t>(n - lo_)];
        const auto c = space.coordinates(comp);
        std::copy(c.begin(), c.end(), v.begin() + static_cast<long>(offsets_[static_cast<std::size_t>(n - lo_)]));
      }
      images.push_back(std::move(v));
    }
  }
  homotopy_images_ = FqMatrix::from_rows(images, total_, p_);
  const auto nred = fq::rref_rank_kernel(homotopy_images_);
  boundaries_ = nred.rref.block(0, 0, nred.rank, total_);
  boundary_pivots_ = nred.pivots;

  std::vector<Vector> residues;
  for (std::size_t r = 0; r < cycles.rows(); ++r) {
    auto v = cycles.row(r);
    fq::reduce_by_rref(v, boundaries_, boundary_pivots_);
    residues.push_back(std::move(v));
  }
  const auto qred = fq::rref_rank_kernel(FqMatrix::from_rows(residues, total_, p_));
  quotient_ = qred.rref.block(0, 0, qred.rank, total_);
  quotient_pivots_ = qred.pivots;
}

std::uint64_t DerivedHom::size(const EnumerationLimits& limits) const {
  if (dim() > limits.max_hom_dim) {
    throw ResourceLimit("Hom_D dimension " + std::to_string(dim()) + " exceeds cap " +
                        std::to_string(limits.max_hom_dim));
  }
  return checked_power(p_, dim(), limits.max_candidates, "Hom_D classes");
}

Vector DerivedHom::coordinates(const ChainMap& f) const {
  Vector v(total_, 0);
  for (int n = lo_; n <= hi_; ++n) {
    const auto k = static_cast<std::size_t>(n - lo_);
    const auto c = maps_[k].coordinates(f.component(n));
    std::copy(c.begin(), c.end(), v.begin() + static_cast<long>(offsets_[k]));
  }
  return v;
}

ChainMap DerivedHom::from_coordinates(const Vector& v) const {
  std::vector<RepMorphism> comps;
  for (int n = source_->lo(); n <= source_->hi(); ++n) {
    if (n < lo_ || n > hi_) {
      comps.push_back(RepMorphism::zero(source_->term(n), target_->term(n)));
    } else {
      const auto k = static_cast<std::size_t>(n - lo_);
      comps.push_back(combine(maps_[k], v, offsets_[k], p_));
    }
  }
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap DerivedHom::representative(std::uint64_t index) const {
  Vector v(total_, 0);
  for (std::size_t i = dim(); i > 0; --i) {
    const auto c = static_cast<fq::Elem>(index % p_);
    index /= p_;
    if (c == 0) continue;
    for (std::size_t k = 0; k < total_; ++k) v[k] = fq::add_mod(v[k], fq::mul_mod(c, quotient_(i - 1, k), p_), p_);
  }
  return from_coordinates(v);
}

std::uint64_t DerivedHom::class_index(const ChainMap& f) const {
  auto v = coordinates(f);
  fq::reduce_by_rref(v, boundaries_, boundary_pivots_);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < quotient_pivots_.size(); ++i) {
    const auto c = v[quotient_pivots_[i]];
    index = index * p_ + c;
    if (c == 0) continue;
    for (std::size_t k = 0; k < total_; ++k) v[k] = fq::sub_mod(v[k], fq::mul_mod(c, quotient_(i, k), p_), p_);
  }
  if (std::any_of(v.begin(), v.end(), [](fq::Elem e) { return e != 0; })) {
    throw InvalidInput("class_index: map is not a chain map between the realizations");
  }
  return index;
}

ChainMap DerivedHom::random_null_homotopic(std::mt19937_64& rng) const {
  std::uniform_int_distribution<fq::Elem> digit(0, p_ - 1);
  Vector v(total_, 0);
  for (std::size_t r = 0; r < homotopy_images_.rows(); ++r) {
    const auto c = digit(rng);
    if (c == 0) continue;
    for (std::size_t k = 0; k < total_; ++k) v[k] = fq::add_mod(v[k], fq::mul_mod(c, homotopy_images_(r, k), p_), p_);
  }
  return from_coordinates(v);
}

std::vector<ChainMap> hom_classes(const DerivedClass& x, const DerivedClass& z, const Catalog& cat,
                                  const EnumerationLimits& limits) {
  const DerivedHom h(x, z, cat);
  std::vector<ChainMap> out;
  h.for_each(limits, [&](std::uint64_t, ChainMap&& f) { out.push_back(std::move(f)); });
  return out;
}

std::size_t ext_dim(const DerivedClass& x, const DerivedClass& z, int i, const Catalog& cat) {
  return DerivedHom(x, z.shift(i), cat).dim();
}

}  // namespace hall
