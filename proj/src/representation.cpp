#include "hall/representation.hpp"

#include <algorithm>
#include <string>

namespace hall {

using fq::Elem;
using fq::FqMatrix;
using fq::Vector;

Representation::Representation(QuiverPtr quiver, Elem p, DimVector dims, std::vector<FqMatrix> maps)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw InvalidInput("representation without a quiver");
  fq::require_prime_modulus(p_);
  if (dims_.size() != quiver_->vertex_count()) {
    throw InvalidInput("dimension vector has " + std::to_string(dims_.size()) +
                       " entries, quiver has " + std::to_string(quiver_->vertex_count()) +
                       " vertices");
  }
  if (maps_.size() != quiver_->arrows().size()) {
    throw InvalidInput("expected one matrix per arrow");
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_->arrows()[a];
    if (maps_[a].rows() != dims_[arrow.dst] || maps_[a].cols() != dims_[arrow.src] ||
        maps_[a].modulus() != p_) {
      throw InvalidInput("arrow " + std::to_string(a) + " matrix has shape " +
                         std::to_string(maps_[a].rows()) + "x" + std::to_string(maps_[a].cols()) +
                         ", expected " + std::to_string(dims_[arrow.dst]) + "x" +
                         std::to_string(dims_[arrow.src]));
    }
  }
}

Representation Representation::zero(QuiverPtr quiver, Elem p) {
  const auto n = quiver->vertex_count();
  std::vector<FqMatrix> maps(quiver->arrows().size(), FqMatrix(0, 0, p));
  return Representation(std::move(quiver), p, DimVector(n, 0), std::move(maps));
}

bool operator==(const Representation& a, const Representation& b) {
  return a.p_ == b.p_ && *a.quiver_ == *b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

std::strong_ordering operator<=>(const Representation& a, const Representation& b) {
  if (auto c = a.dims_ <=> b.dims_; c != 0) return c;
  for (std::size_t i = 0; i < std::min(a.maps_.size(), b.maps_.size()); ++i) {
    if (auto c = a.maps_[i] <=> b.maps_[i]; c != 0) return c;
  }
  return a.maps_.size() <=> b.maps_.size();
}

void require_compatible(const Representation& x, const Representation& y) {
  if (x.modulus() != y.modulus()) throw InvalidInput("representations over different fields");
  if (x.quiver() != y.quiver() && !(*x.quiver() == *y.quiver())) {
    throw InvalidInput("representations over different quivers");
  }
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  std::vector<FqMatrix> maps;
  maps.reserve(a.maps().size());
  for (std::size_t i = 0; i < a.maps().size(); ++i) maps.push_back(fq::block_diagonal(a.map(i), b.map(i)));
  return Representation(a.quiver(), a.modulus(), dims_add(a.dims(), b.dims()), std::move(maps));
}

RepMorphism RepMorphism::identity(const Representation& x) {
  std::vector<FqMatrix> c;
  for (auto d : x.dims()) c.push_back(FqMatrix::identity(d, x.modulus()));
  return RepMorphism(std::move(c));
}

RepMorphism RepMorphism::zero(const Representation& from, const Representation& to) {
  std::vector<FqMatrix> c;
  for (std::size_t v = 0; v < from.dims().size(); ++v) {
    c.emplace_back(to.dim(v), from.dim(v), from.modulus());
  }
  return RepMorphism(std::move(c));
}

bool RepMorphism::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const FqMatrix& m) { return m.is_zero(); });
}

RepMorphism RepMorphism::scaled(Elem s) const {
  std::vector<FqMatrix> c;
  for (const auto& m : components_) c.push_back(m.scaled(s));
  return RepMorphism(std::move(c));
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  if (a.vertex_count() != b.vertex_count()) throw InvalidInput("morphism vertex count mismatch");
  std::vector<FqMatrix> c;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) c.push_back(a[v] + b[v]);
  return RepMorphism(std::move(c));
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) {
  if (a.vertex_count() != b.vertex_count()) throw InvalidInput("morphism vertex count mismatch");
  std::vector<FqMatrix> c;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) c.push_back(a[v] - b[v]);
  return RepMorphism(std::move(c));
}

RepMorphism operator-(const RepMorphism& a) {
  std::vector<FqMatrix> c;
  for (const auto& m : a.components()) c.push_back(-m);
  return RepMorphism(std::move(c));
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (g.vertex_count() != f.vertex_count()) throw InvalidInput("morphism vertex count mismatch");
  std::vector<FqMatrix> c;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) c.push_back(g[v] * f[v]);
  return RepMorphism(std::move(c));
}

RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g) {
  std::vector<FqMatrix> c;
  for (std::size_t v = 0; v < f.vertex_count(); ++v) c.push_back(fq::block_diagonal(f[v], g[v]));
  return RepMorphism(std::move(c));
}

bool is_intertwiner(const RepMorphism& f, const Representation& x, const Representation& y) {
  require_compatible(x, y);
  const auto& q = *x.quiver();
  if (f.vertex_count() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (f[v].rows() != y.dim(v) || f[v].cols() != x.dim(v) || f[v].modulus() != x.modulus()) return false;
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (!(f[arrow.dst] * x.map(a) == y.map(a) * f[arrow.src])) return false;
  }
  return true;
}

bool is_iso(const RepMorphism& f) {
  return std::all_of(f.components().begin(), f.components().end(),
                     [](const FqMatrix& m) { return fq::is_invertible(m); });
}

bool is_mono(const RepMorphism& f) {
  return std::all_of(f.components().begin(), f.components().end(),
                     [](const FqMatrix& m) { return fq::rank(m) == m.cols(); });
}

bool is_epi(const RepMorphism& f) {
  return std::all_of(f.components().begin(), f.components().end(),
                     [](const FqMatrix& m) { return fq::rank(m) == m.rows(); });
}

namespace {

// The intertwining operator (phi_v) |-> (phi_j x_a - y_a phi_i)_{a: i->j} on
// flattened per-vertex matrices. Its kernel is Hom(x, y); its cokernel is
// Ext^1(x, y).
FqMatrix intertwining_operator(const Representation& x, const Representation& y,
                               const std::vector<std::size_t>& offsets, std::size_t unknowns) {
  const auto& q = *x.quiver();
  const Elem p = x.modulus();
  std::size_t rows = 0;
  for (const auto& arrow : q.arrows()) rows += y.dim(arrow.dst) * x.dim(arrow.src);
  FqMatrix m(rows, unknowns, p);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = q.arrows()[a].src;
    const auto j = q.arrows()[a].dst;
    const auto& xa = x.map(a);
    const auto& ya = y.map(a);
    for (std::size_t r = 0; r < y.dim(j); ++r) {
      for (std::size_t c = 0; c < x.dim(i); ++c, ++row) {
        // (phi_j x_a)[r][c] = sum_k phi_j[r][k] x_a[k][c]
        for (std::size_t k = 0; k < x.dim(j); ++k) {
          auto& e = m(row, offsets[j] + r * x.dim(j) + k);
          e = fq::add_mod(e, xa(k, c), p);
        }
        // -(y_a phi_i)[r][c] = -sum_k y_a[r][k] phi_i[k][c]
        for (std::size_t k = 0; k < y.dim(i); ++k) {
          auto& e = m(row, offsets[i] + k * x.dim(i) + c);
          e = fq::sub_mod(e, ya(r, k), p);
        }
      }
    }
  }
  return m;
}

std::vector<std::size_t> hom_offsets(const DimVector& xd, const DimVector& yd, std::size_t& total) {
  std::vector<std::size_t> offsets(xd.size());
  total = 0;
  for (std::size_t v = 0; v < xd.size(); ++v) {
    offsets[v] = total;
    total += yd[v] * xd[v];
  }
  return offsets;
}

}  // namespace

HomSpace::HomSpace(const Representation& x, const Representation& y)
    : source_dims_(x.dims()), target_dims_(y.dims()), p_(x.modulus()) {
  require_compatible(x, y);
  offsets_ = hom_offsets(source_dims_, target_dims_, flat_size_);
  const auto op = intertwining_operator(x, y, offsets_, flat_size_);
  FqMatrix kernel;
  if (op.rows() == 0) {
    kernel = FqMatrix::identity(flat_size_, p_);
  } else {
    kernel = fq::rref_rank_kernel(op).kernel_basis;
  }
  const auto red = fq::rref_rank_kernel(kernel);
  basis_ = red.rref.block(0, 0, red.rank, flat_size_);
  pivots_ = red.pivots;
}

std::uint64_t HomSpace::size(const EnumerationLimits& limits) const {
  return checked_power(p_, dim(), limits.max_candidates, "Hom space");
}

std::vector<RepMorphism> HomSpace::basis() const {
  std::vector<RepMorphism> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(unflatten(basis_.row(r)));
  return out;
}

Vector HomSpace::flatten(const RepMorphism& f) const {
  Vector v(flat_size_);
  for (std::size_t vert = 0; vert < source_dims_.size(); ++vert) {
    const auto& m = f[vert];
    std::copy(m.data().begin(), m.data().end(), v.begin() + static_cast<long>(offsets_[vert]));
  }
  return v;
}

RepMorphism HomSpace::unflatten(const Vector& v) const {
  std::vector<FqMatrix> c;
  c.reserve(source_dims_.size());
  for (std::size_t vert = 0; vert < source_dims_.size(); ++vert) {
    FqMatrix m(target_dims_[vert], source_dims_[vert], p_);
    std::copy(v.begin() + static_cast<long>(offsets_[vert]),
              v.begin() + static_cast<long>(offsets_[vert] + m.data().size()), m.data().begin());
    c.push_back(std::move(m));
  }
  return RepMorphism(std::move(c));
}

Vector HomSpace::coordinates(const RepMorphism& f) const {
  const auto v = flatten(f);
  Vector coords(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

std::uint64_t HomSpace::index_of(const RepMorphism& f) const {
  std::uint64_t index = 0;
  for (auto c : coordinates(f)) index = index * p_ + c;
  return index;
}

RepMorphism HomSpace::element(std::uint64_t index) const {
  Vector coords(dim());
  for (std::size_t i = dim(); i > 0; --i) {
    coords[i - 1] = static_cast<Elem>(index % p_);
    index /= p_;
  }
  Vector v(flat_size_, 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i] == 0) continue;
    for (std::size_t c = 0; c < flat_size_; ++c) {
      v[c] = fq::add_mod(v[c], fq::mul_mod(coords[i], basis_(i, c), p_), p_);
    }
  }
  return unflatten(v);
}

RepMorphism HomSpace::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Elem> digit(0, p_ - 1);
  Vector v(flat_size_, 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = digit(rng);
    if (c == 0) continue;
    for (std::size_t k = 0; k < flat_size_; ++k) {
      v[k] = fq::add_mod(v[k], fq::mul_mod(c, basis_(i, k), p_), p_);
    }
  }
  return unflatten(v);
}

std::vector<RepMorphism> hom_basis(const Representation& x, const Representation& y) {
  return HomSpace(x, y).basis();
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return HomSpace(x, y).dim(); }

std::uint64_t aut_order(const Representation& x, const EnumerationLimits& limits) {
  const HomSpace end(x, x);
  std::uint64_t count = 0;
  end.for_each(limits, [&](std::uint64_t, const RepMorphism& f) {
    if (is_iso(f)) ++count;
  });
  return count;
}

std::vector<RepMorphism> automorphisms(const Representation& x, const EnumerationLimits& limits) {
  const HomSpace end(x, x);
  std::vector<RepMorphism> out;
  end.for_each(limits, [&](std::uint64_t, const RepMorphism& f) {
    if (is_iso(f)) out.push_back(f);
  });
  return out;
}

namespace {

// Columns of the returned matrix form a basis of ker(m).
FqMatrix kernel_columns(const FqMatrix& m) {
  if (m.rows() == 0) return FqMatrix::identity(m.cols(), m.modulus());
  return fq::rref_rank_kernel(m).kernel_basis.transpose();
}

struct CokernelData {
  FqMatrix projection;  // c x n with kernel = image
  FqMatrix section;     // n x c, projection * section = id
};

CokernelData cokernel_of_columns(const FqMatrix& m, std::size_t n, Elem p) {
  const auto image = m.cols() == 0 ? fq::FqSubspace(n, p) : fq::FqSubspace::span_of_columns(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : image.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) complement.push_back(c);
  FqMatrix full(n, n, p);
  for (std::size_t i = 0; i < image.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) full(r, i) = image.basis()(i, r);
  FqMatrix section(n, complement.size(), p);
  for (std::size_t i = 0; i < complement.size(); ++i) {
    full(complement[i], image.dim() + i) = 1;
    section(complement[i], i) = 1;
  }
  const auto inv = fq::inverse(full);
  if (!inv) throw std::logic_error("cokernel basis completion is singular");
  return {inv->block(image.dim(), 0, complement.size(), n), std::move(section)};
}

}  // namespace

KernelCokernel kernel_cokernel(const RepMorphism& f, const Representation& x, const Representation& y) {
  if (!is_intertwiner(f, x, y)) throw InvalidInput("kernel_cokernel: morphism is not an intertwiner");
  const auto& q = *x.quiver();
  const Elem p = x.modulus();
  const auto n = q.vertex_count();

  std::vector<FqMatrix> k_incl(n), c_proj(n), c_sect(n);
  DimVector kd(n), cd(n);
  for (std::size_t v = 0; v < n; ++v) {
    k_incl[v] = kernel_columns(f[v]);
    kd[v] = k_incl[v].cols();
    auto cok = cokernel_of_columns(f[v], y.dim(v), p);
    c_proj[v] = std::move(cok.projection);
    c_sect[v] = std::move(cok.section);
    cd[v] = c_proj[v].rows();
  }
  std::vector<FqMatrix> k_maps, c_maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = q.arrows()[a].src;
    const auto j = q.arrows()[a].dst;
    auto km = fq::solve_matrix(k_incl[j], x.map(a) * k_incl[i]);
    if (!km) throw std::logic_error("kernel is not arrow-closed");
    k_maps.push_back(std::move(*km));
    c_maps.push_back(c_proj[j] * y.map(a) * c_sect[i]);
  }
  Representation kernel(x.quiver(), p, kd, std::move(k_maps));
  Representation cokernel(x.quiver(), p, cd, std::move(c_maps));
  return {std::move(kernel), RepMorphism(std::move(k_incl)), std::move(cokernel),
          RepMorphism(std::move(c_proj))};
}

std::vector<Subrepresentation> enumerate_subreps(const Representation& z, const EnumerationLimits& limits) {
  const auto& q = *z.quiver();
  const auto n = q.vertex_count();
  const Elem p = z.modulus();

  std::vector<std::vector<fq::FqSubspace>> choices(n);
  std::uint64_t candidates = 1;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k <= z.dim(v); ++k) {
      auto subs = fq::enumerate_subspaces(z.dim(v), k, p);
      choices[v].insert(choices[v].end(), subs.begin(), subs.end());
    }
    if (candidates > limits.max_candidates / choices[v].size()) {
      throw ResourceLimit("enumerate_subreps: subspace tuple count exceeds cap " +
                          std::to_string(limits.max_candidates));
    }
    candidates *= choices[v].size();
  }

  std::vector<Subrepresentation> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    bool closed = true;
    for (std::size_t a = 0; a < q.arrows().size() && closed; ++a) {
      const auto& s = choices[q.arrows()[a].src][pick[q.arrows()[a].src]];
      const auto& t = choices[q.arrows()[a].dst][pick[q.arrows()[a].dst]];
      for (std::size_t r = 0; r < s.dim() && closed; ++r) {
        closed = t.contains(z.map(a) * s.basis().row(r));
      }
    }
    if (closed) {
      std::vector<fq::FqSubspace> spaces;
      std::vector<FqMatrix> incl;
      DimVector sd(n);
      for (std::size_t v = 0; v < n; ++v) {
        spaces.push_back(choices[v][pick[v]]);
        incl.push_back(spaces.back().basis().transpose());
        sd[v] = spaces.back().dim();
      }
      std::vector<FqMatrix> maps;
      for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto i = q.arrows()[a].src;
        const auto j = q.arrows()[a].dst;
        auto m = fq::solve_matrix(incl[j], z.map(a) * incl[i]);
        if (!m) throw std::logic_error("closed subspace tuple failed to restrict");
        maps.push_back(std::move(*m));
      }
      Representation sub(z.quiver(), p, sd, std::move(maps));
      RepMorphism inclusion(std::move(incl));
      auto kc = kernel_cokernel(inclusion, sub, z);
      out.push_back({std::move(spaces), std::move(sub), std::move(inclusion), std::move(kc.cokernel),
                     std::move(kc.projection)});
    }
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++pick[v] < choices[v].size()) break;
      pick[v] = 0;
      if (v == 0) return out;
    }
  }
}

std::optional<RepMorphism> find_isomorphism(const Representation& x, const Representation& y,
                                            const EnumerationLimits& limits) {
  require_compatible(x, y);
  if (x.dims() != y.dims()) return std::nullopt;
  const HomSpace xy(x, y);
  const auto d = xy.dim();
  if (hom_dim(x, x) != d || hom_dim(y, y) != d || hom_dim(y, x) != d) return std::nullopt;
  if (x.is_zero()) return RepMorphism::identity(x);

  // Seeded random probes certify isomorphism quickly; exhaustive enumeration
  // settles the remaining cases.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (d * 1315423911ULL) ^ x.total_dim());
  const std::uint64_t full = [&] {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < d && s <= 4096; ++i) s *= x.modulus();
    return s;
  }();
  const std::uint64_t probes = full > 4096 ? 4096 : 0;
  for (std::uint64_t i = 0; i < probes; ++i) {
    auto f = xy.random_element(rng);
    if (is_iso(f)) return f;
  }
  std::optional<RepMorphism> found;
  xy.size(limits);
  fq::for_each_combination(xy.basis_rows(), [&](std::uint64_t, const Vector& v) {
    if (found) return;
    auto f = xy.unflatten(v);
    if (is_iso(f)) found = std::move(f);
  });
  return found;
}

bool is_isomorphic(const Representation& x, const Representation& y, const EnumerationLimits& limits) {
  return find_isomorphism(x, y, limits).has_value();
}

std::size_t ext1_dim(const Representation& x, const Representation& y) {
  require_compatible(x, y);
  std::size_t unknowns = 0;
  const auto offsets = hom_offsets(x.dims(), y.dims(), unknowns);
  const auto op = intertwining_operator(x, y, offsets, unknowns);
  return op.rows() - fq::rank(op);
}

}  // namespace hall
